#include "twistdec/report.hpp"

#include <filesystem>
#include <iomanip>
#include <sstream>

#include "twistdec/io.hpp"

namespace twistdec {

namespace {

std::vector<Fixture> make_unimproved() {
  return {
      {"psl2_11", "tuples/psl2_11.tuple", "ubbs/psl2_11.ubb",
       {"PSL(2,11)", 660, 11, 2, 16, 16, 7, 3, 3, 5}},
      {"m12", "tuples/m12.tuple", "ubbs/m12.ubb",
       {"M12", 95040, 12, 2, 16, 16, 7, 3, 5, 11}},
      {"a7", "tuples/a7.tuple", "ubbs/a7.ubb",
       {"A7", 2520, 15, 2, 24, 24, 11, 5, 3, 9}},
      {"aff16_a6", "tuples/aff16_a6.tuple", "ubbs/aff16_a6.ubb",
       {"2^4:A6", 5760, 16, 4, 48, 48, 23, 5, 4, 12}},
      {"aff16_s6", "tuples/aff16_s6.tuple", "ubbs/aff16_s6.ubb",
       {"2^4:S6", 11520, 16, 2, 16, 16, 7, 3, 5, 6}},
      {"m22", "tuples/m22.tuple", "ubbs/m22.ubb",
       {"M22", 443520, 22, 2, 32, 32, 15, 7, 5, 22}},
  };
}

std::vector<Fixture> make_improved() {
  return {
      {"s6", "tuples/s6.tuple", "ubbs/s6.ubb",
       {"S6", 720, 6, 2, 4, 8, 3, 1, 5, 6}},
      {"a6", "tuples/a6.tuple", "ubbs/a6.ubb",
       {"A6", 360, 6, 2, 6, 8, 3, 1, 4, 3}},
      {"asl32", "tuples/asl32.tuple", "ubbs/asl32.ubb",
       {"ASL(3,2)", 1344, 8, 2, 8, 12, 5, 2, 4, 6}},
  };
}

}  // namespace

const std::vector<Fixture>& unimproved_fixtures() {
  static const std::vector<Fixture> v = make_unimproved();
  return v;
}

const std::vector<Fixture>& improved_fixtures() {
  static const std::vector<Fixture> v = make_improved();
  return v;
}

const Fixture& fixture_by_key(const std::string& key) {
  for (const Fixture& f : unimproved_fixtures())
    if (f.key == key) return f;
  for (const Fixture& f : improved_fixtures())
    if (f.key == key) return f;
  throw InputError("unknown fixture key '" + key + "'");
}

TableRow compute_row(const Fixture& fixture, const std::string& data_dir) {
  namespace fs = std::filesystem;
  TwistedCode code = parse_tuple_file(fs::path(data_dir) / fixture.tuple_file);
  Ubb ubb = parse_ubb_file(fs::path(data_dir) / fixture.ubb_file);

  TableRow row;
  row.group = fixture.reference.group;
  row.order = code.size();
  row.n = code.degree();
  row.lambda = code.lambda();
  row.delta_rep = code.delta_rep().value;
  row.delta_tw = code.delta_tw().value;
  CorrectionParams p = code.params();
  row.r_tw = p.r_tw;
  row.r_prime = p.r_prime;
  row.base_size = code.group().base_size().size;
  row.ubb_rows = static_cast<int>(ubb.bases.size());
  return row;
}

namespace {

void diff_cell(std::vector<CellDiff>& out, const std::string& group,
               const std::string& column, uint64_t reference,
               uint64_t computed) {
  if (reference != computed)
    out.push_back({group, column, std::to_string(reference),
                   std::to_string(computed)});
}

}  // namespace

TableReport report_tables(const std::string& table,
                          const std::string& data_dir) {
  const std::vector<Fixture>* fixtures = nullptr;
  if (table == "unimproved")
    fixtures = &unimproved_fixtures();
  else if (table == "improved")
    fixtures = &improved_fixtures();
  else
    throw InputError("unknown table '" + table +
                     "' (expected unimproved or improved)");

  TableReport report;
  report.table = table;
  for (const Fixture& f : *fixtures) {
    TableRow got = compute_row(f, data_dir);
    const TableRow& want = f.reference;
    report.rows.push_back(got);
    diff_cell(report.diffs, want.group, "|G|", want.order, got.order);
    diff_cell(report.diffs, want.group, "n", want.n, got.n);
    diff_cell(report.diffs, want.group, "lambda", want.lambda, got.lambda);
    diff_cell(report.diffs, want.group, "delta_rep", want.delta_rep,
              got.delta_rep);
    diff_cell(report.diffs, want.group, "delta_tw", want.delta_tw,
              got.delta_tw);
    diff_cell(report.diffs, want.group, "r_tw", want.r_tw, got.r_tw);
    diff_cell(report.diffs, want.group, "r'", want.r_prime, got.r_prime);
    diff_cell(report.diffs, want.group, "b(G)", want.base_size,
              got.base_size);
    diff_cell(report.diffs, want.group, "|U|", want.ubb_rows, got.ubb_rows);
  }
  return report;
}

std::string render_table(const TableReport& report, bool tsv) {
  std::ostringstream os;
  if (tsv) {
    os << "group\torder\tn\tlambda\tdelta_rep\tdelta_tw\tr_tw\tr_prime\t"
          "base_size\tubb_rows\n";
    for (const TableRow& r : report.rows)
      os << r.group << '\t' << r.order << '\t' << r.n << '\t' << r.lambda
         << '\t' << r.delta_rep << '\t' << r.delta_tw << '\t' << r.r_tw
         << '\t' << r.r_prime << '\t' << r.base_size << '\t' << r.ubb_rows
         << '\n';
    for (const CellDiff& d : report.diffs)
      os << "DIFF\t" << d.group << '\t' << d.column << '\t' << d.reference
         << '\t' << d.computed << '\n';
    return os.str();
  }

  os << "Parameter table (" << report.table << "), all cells recomputed\n";
  os << std::left << std::setw(10) << "group" << std::right << std::setw(8)
     << "|G|" << std::setw(4) << "n" << std::setw(4) << "lam" << std::setw(7)
     << "d_rep" << std::setw(6) << "d_tw" << std::setw(6) << "r_tw"
     << std::setw(4) << "r'" << std::setw(6) << "b(G)" << std::setw(5)
     << "|U|" << '\n';
  for (const TableRow& r : report.rows)
    os << std::left << std::setw(10) << r.group << std::right << std::setw(8)
       << r.order << std::setw(4) << r.n << std::setw(4) << r.lambda
       << std::setw(7) << r.delta_rep << std::setw(6) << r.delta_tw
       << std::setw(6) << r.r_tw << std::setw(4) << r.r_prime << std::setw(6)
       << r.base_size << std::setw(5) << r.ubb_rows << '\n';
  if (report.diffs.empty()) {
    os << "all cells match the published values\n";
  } else {
    for (const CellDiff& d : report.diffs)
      os << "DIFF " << d.group << " " << d.column << ": published "
         << d.reference << ", computed " << d.computed << '\n';
  }
  return os.str();
}

}  // namespace twistdec

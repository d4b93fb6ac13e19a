#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "twistdec/code.hpp"
#include "twistdec/ubb.hpp"

namespace twistdec {

// One parameter-table row. "unimproved" rows have delta_rep == delta_tw by
// construction; "improved" rows publish both.
struct TableRow {
  std::string group;
  uint64_t order = 0;
  int n = 0;
  int lambda = 0;
  int delta_rep = 0;
  int delta_tw = 0;
  int r_tw = 0;
  int r_prime = 0;
  int base_size = 0;
  int ubb_rows = 0;
};

struct CellDiff {
  std::string group;
  std::string column;
  std::string reference;
  std::string computed;
};

struct TableReport {
  std::string table;  // "unimproved" or "improved"
  std::vector<TableRow> rows;
  std::vector<CellDiff> diffs;
};

// A bundled code fixture: tuple + UBB file names (relative to a data
// directory) plus the published reference row.
struct Fixture {
  std::string key;
  std::string tuple_file;
  std::string ubb_file;
  TableRow reference;
};

const std::vector<Fixture>& unimproved_fixtures();
const std::vector<Fixture>& improved_fixtures();
// Lookup across both tables by key ("psl2_11", "m22", "asl32", ...).
const Fixture& fixture_by_key(const std::string& key);

// Recomputes one row from the shipped files: order, degree and lambda from
// the tuple; delta_rep / delta_tw by exhaustive element scan; r_tw and r'
// by the correction arithmetic; b(G) by exhaustive base-size search; |U| by
// row count of the shipped UBB.
TableRow compute_row(const Fixture& fixture, const std::string& data_dir);

// Every cell recomputed and diffed against the published reference values.
// table selects "unimproved" or "improved".
TableReport report_tables(const std::string& table,
                          const std::string& data_dir);

std::string render_table(const TableReport& report, bool tsv);

}  // namespace twistdec

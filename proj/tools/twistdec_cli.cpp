#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "twistdec/channel.hpp"
#include "twistdec/decoder.hpp"
#include "twistdec/gkp.hpp"
#include "twistdec/io.hpp"
#include "twistdec/matching.hpp"
#include "twistdec/report.hpp"

namespace fs = std::filesystem;
using namespace twistdec;

namespace {

int cmd_mindist(const std::string& file, bool tsv) {
  PermutationGroup g = parse_group_file(file);
  Distance d = g.min_distance();
  std::string dist = d.infinite ? "inf" : std::to_string(d.value);
  if (tsv) {
    std::cout << g.name() << '\t' << g.degree() << '\t' << g.order() << '\t'
              << dist << '\n';
  } else {
    std::cout << "group " << g.name() << ": degree " << g.degree()
              << ", order " << g.order() << ", min distance " << dist << '\n';
  }
  return 0;
}

int cmd_delta(const std::string& file, bool tsv) {
  TwistedCode code = parse_tuple_file(file);
  Distance rep = code.delta_rep();
  Distance tw = code.delta_tw();
  CorrectionParams p = code.params();
  if (tsv) {
    std::cout << code.name() << '\t' << code.lambda() << '\t' << code.degree()
              << '\t' << code.size() << '\t' << rep.value << '\t' << tw.value
              << '\t' << p.r_tw << '\t' << p.r_prime << '\n';
    return 0;
  }
  std::cout << "code " << code.name() << ": lambda " << code.lambda()
            << ", degree " << code.degree() << ", size " << code.size()
            << '\n';
  std::cout << "delta_rep " << rep.value << '\n';
  std::cout << "delta_tw " << tw.value
            << (tw.value > rep.value ? " (improved)" : "") << '\n';
  std::cout << "r_tw " << p.r_tw << '\n';
  std::cout << "r' " << p.r_prime << '\n';
  return 0;
}

int cmd_encode(const std::string& tuple_file, const std::string& element) {
  TwistedCode code = parse_tuple_file(tuple_file);
  Permutation g = Permutation::parse(element, code.degree());
  Codeword cw = code.encode(g);
  std::cout << format_word(cw.word(), code.degree()) << '\n';
  return 0;
}

int cmd_decode(const std::string& tuple_file, const std::string& ubb_file,
               const std::string& word_text, bool trace, bool no_verify) {
  TwistedCode code = parse_tuple_file(tuple_file);
  Ubb ubb = parse_ubb_file(ubb_file);
  DecoderState state(std::move(code), std::move(ubb), !no_verify);
  Word w = parse_word(word_text, state.code().degree());
  DecodeResult res = state.decode(w);
  if (trace) std::cout << format_attempt_log(res.attempts);
  if (!res.success) {
    std::cout << "decode failed after " << res.attempts.size()
              << " attempts (more than r_tw=" << state.params().r_tw
              << " errors)" << '\n';
    return 1;
  }
  std::cout << "decoded " << res.element.to_cycles() << '\n';
  std::cout << "codeword " << format_word(res.codeword.word(),
                                          state.code().degree())
            << '\n';
  std::cout << "distance " << res.distance << '\n';
  std::cout << "attempts " << res.attempts.size() << '\n';
  return 0;
}

int cmd_ubb_verify(const std::string& ubb_file, const std::string& group_file,
                   int strength_override, uint64_t samples, uint64_t seed,
                   uint64_t budget) {
  Ubb ubb = parse_ubb_file(ubb_file);
  PermutationGroup g = parse_group_file(group_file);
  int r = strength_override >= 0 ? strength_override : ubb.strength;
  std::cout << "ubb " << ubb.group_name << ": " << ubb.bases.size()
            << " bases, strength " << r << ", group " << g.name() << '\n';

  int bad = first_non_base_row(ubb, g);
  if (bad >= 0) {
    std::cout << "FAIL: row " << bad + 1 << " is not a base of " << g.name()
              << '\n';
    return 1;
  }
  std::cout << "all rows are bases" << '\n';

  StrengthResult sr;
  if (samples > 0) {
    sr = sample_strength(ubb, g.degree(), r, samples, seed);
  } else {
    try {
      sr = verify_strength(ubb, g.degree(), r, budget);
    } catch (const BudgetError& e) {
      std::cout << "FAIL: " << e.what() << " (use --sample)" << '\n';
      return 2;
    }
  }
  if (!sr.ok) {
    std::cout << "FAIL: subset {";
    for (size_t i = 0; i < sr.witness.size(); ++i)
      std::cout << (i ? "," : "") << sr.witness[i];
    std::cout << "} meets every base" << '\n';
    return 1;
  }
  if (sr.sampled)
    std::cout << "strength " << r << " held on " << sr.checked
              << " random subsets (sampled, not certified)" << '\n';
  else
    std::cout << "strength " << r << " verified exhaustively (" << sr.checked
              << " subsets)" << '\n';
  return 0;
}

int cmd_ubb_from_cover(const std::string& cover_file,
                       const std::string& group_file,
                       const std::string& out_file) {
  CoveringDesign cover = parse_cover_file(cover_file);
  PermutationGroup g = parse_group_file(group_file);
  Ubb ubb = ubb_from_cover(cover, g);
  std::string text = format_ubb_file(ubb);
  if (out_file.empty())
    std::cout << text;
  else
    write_text_file(out_file, text);
  std::cout << "ubb " << ubb.group_name << ": " << ubb.bases.size()
            << " bases, strength " << ubb.strength << '\n';
  return 0;
}

int cmd_ubb_relabel(const std::string& cover_file,
                    const std::string& group_file, int attempts,
                    uint64_t seed, const std::string& out_file) {
  CoveringDesign cover = parse_cover_file(cover_file);
  PermutationGroup g = parse_group_file(group_file);
  auto found = relabel_search(cover, g, attempts, seed);
  if (!found) {
    std::cout << "no relabeling found after " << attempts << " attempts"
              << '\n';
    return 1;
  }
  std::cout << "relabeling " << found->sigma.to_cycles() << " (attempt "
            << found->attempt << ")" << '\n';
  CoveringDesign relabeled = cover;
  for (auto& block : relabeled.blocks)
    for (int& pt : block) pt = found->sigma.apply(pt);
  Ubb ubb = ubb_from_cover(relabeled, g);
  std::string text = format_ubb_file(ubb);
  if (out_file.empty())
    std::cout << text;
  else
    write_text_file(out_file, text);
  return 0;
}

int cmd_saxl(const std::string& group_file, int matching_size, bool tsv) {
  PermutationGroup g = parse_group_file(group_file);
  SaxlGraph graph = saxl_graph(g);
  ConnectivityWitness cw = saxl_connectivity(graph);
  auto mate = maximum_matching(graph.n, graph.adjacency());
  auto pairs = matching_pairs(mate);
  if (tsv) {
    std::cout << g.name() << '\t' << graph.n << '\t' << graph.edges.size()
              << '\t' << (cw.connected ? 1 : 0) << '\t' << pairs.size()
              << '\n';
    for (auto [u, v] : graph.edges) std::cout << u << '\t' << v << '\n';
  } else {
    std::cout << "graph on " << graph.n << " points: " << graph.edges.size()
              << " edges (size-2 bases), "
              << (cw.connected ? "connected" : "disconnected")
              << ", max matching " << pairs.size() << '\n';
  }
  if (matching_size > 0) {
    Ubb ubb = matching_ubb(graph, matching_size, g.name());
    std::cout << format_ubb_file(ubb);
  }
  return 0;
}

int cmd_gkp_build(int p, int k, bool tsv) {
  GkpFamily fam(p, k);
  int d = fam.min_code_distance();
  BaseSizeResult b = fam.base_size();
  SaxlGraph graph = fam.saxl();
  ConnectivityWitness cw = saxl_connectivity(graph);
  auto pairs = matching_pairs(maximum_matching(graph.n, graph.adjacency()));
  if (tsv) {
    std::cout << gkp_name(p, k) << '\t' << fam.degree() << '\t'
              << fam.size() << '\t' << (fam.is_closed() ? 1 : 0) << '\t'
              << d << '\t' << b.size << '\t' << (cw.connected ? 1 : 0)
              << '\t' << pairs.size() << '\n';
    return 0;
  }
  std::cout << gkp_name(p, k) << ": " << fam.size() << " permutations of "
            << fam.degree() << " points, "
            << (fam.is_closed() ? "closed under composition (a group)"
                                : "not closed under composition")
            << '\n';
  std::cout << "min distance " << d << '\n';
  std::cout << "base size " << b.size << " (witness";
  for (int pt : b.witness) std::cout << ' ' << pt;
  std::cout << ")" << '\n';
  std::cout << "base pairs graph: " << graph.edges.size() << " edges, "
            << (cw.connected ? "connected" : "disconnected")
            << ", max matching " << pairs.size() << '\n';
  return 0;
}

int cmd_gkp_ubb(int p, int k) {
  GkpUbbResult res = gkp_ubb(p, k);
  std::cout << gkp_name(p, k) << ": delta " << res.delta_formula << ", r_tw "
            << res.params.r_tw << ", r' " << res.params.r_prime << '\n';
  std::cout << "matching rows " << res.ubb.bases.size()
            << " (strength = rows - 1 = " << res.ubb.strength << ")" << '\n';
  std::cout << "closed-form rows " << res.closed_form_size
            << (res.closed_form_agrees ? " (agrees)" : " (differs)") << '\n';
  if (!res.note.empty()) std::cout << "note: " << res.note << '\n';
  std::cout << format_ubb_file(res.ubb);
  return 0;
}

int cmd_gkp_code(int p, int k, uint64_t max_checks) {
  TwistedCode code = gkp_twisted_code(p, k, max_checks);
  Distance tw = code.delta_tw();
  Distance rep = code.delta_rep();
  CorrectionParams pr = code.params();
  std::cout << "code " << code.name() << ": lambda " << code.lambda()
            << ", length " << code.lambda() * code.degree() << ", size "
            << code.size() << '\n';
  std::cout << "delta_rep " << rep.value << '\n';
  std::cout << "delta_tw " << tw.value << " (certified by element scan)"
            << '\n';
  std::cout << "r_tw " << pr.r_tw << '\n';
  std::cout << "r' " << pr.r_prime << '\n';
  return 0;
}

int cmd_simulate(const std::string& tuple_file, const std::string& ubb_file,
                 int errors, uint64_t trials, uint64_t seed, bool stress,
                 bool tsv) {
  TwistedCode code = parse_tuple_file(tuple_file);
  Ubb ubb = parse_ubb_file(ubb_file);
  DecoderState state(std::move(code), std::move(ubb), true);
  uint64_t bound = static_cast<uint64_t>(state.code().lambda()) *
                   state.ubb().bases.size();
  SimulationStats stats = simulate(state, errors, trials, seed, stress);
  if (tsv) {
    std::cout << state.code().name() << '\t' << errors << '\t' << stats.trials
              << '\t' << stats.successes << '\t' << stats.correct << '\t'
              << stats.max_attempts << '\t' << bound << '\n';
    return 0;
  }
  std::cout << "simulate " << state.code().name() << ": trials "
            << stats.trials << ", errors " << errors << ", seed " << seed
            << (stress ? ", stress" : "") << '\n';
  std::cout << "success rate " << stats.success_rate() << " ("
            << stats.correct << "/" << stats.trials << " correct)" << '\n';
  std::cout << "attempts: max " << stats.max_attempts << ", bound " << bound
            << '\n';
  std::cout << "histogram:";
  for (auto [attempts, count] : stats.attempt_histogram)
    std::cout << ' ' << attempts << ':' << count;
  std::cout << '\n';
  return 0;
}

int cmd_report(const std::string& table, const std::string& data_dir,
               bool tsv) {
  bool any_diff = false;
  auto run_one = [&](const std::string& t) {
    TableReport rep = report_tables(t, data_dir);
    std::cout << render_table(rep, tsv);
    any_diff = any_diff || !rep.diffs.empty();
  };
  if (table == "both") {
    run_one("unimproved");
    run_one("improved");
  } else {
    run_one(table);
  }
  return any_diff ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"twisted permutation codes: distances, UBBs, decoding"};
  app.require_subcommand(1);
  bool tsv = false;
  auto add_tsv = [&tsv](CLI::App* sub) {
    sub->add_flag("--tsv", tsv, "machine-readable tab-separated output");
  };

  std::string group_file, tuple_file, ubb_file, cover_file, out_file;
  std::string element, word_text;
  bool trace = false, no_verify = false, stress = false;
  int strength_override = -1, attempts = 200, matching_size = 0, errors = 0;
  int p = 0, k = 0;
  uint64_t seed = 1, trials = 1000, samples = 0;
  uint64_t budget = kDefaultStrengthBudget;
  uint64_t max_checks = uint64_t{1} << 22;
  std::string table = "both";
  std::string data_dir = TWISTDEC_DATA_DIR;

  auto* mindist = app.add_subcommand("mindist", "minimum distance of a group");
  mindist->add_option("group", group_file, "group file")->required();
  add_tsv(mindist);

  auto* delta = app.add_subcommand("delta", "distances of a twisted code");
  delta->add_option("tuple", tuple_file, "representation-tuple file")
      ->required();
  add_tsv(delta);

  auto* encode = app.add_subcommand("encode", "encode a group element");
  encode->add_option("--tuple", tuple_file, "representation-tuple file")
      ->required();
  encode->add_option("--element", element, "cycles or image list")
      ->required();

  auto* decode = app.add_subcommand("decode", "decode a received word");
  decode->add_option("--tuple", tuple_file, "representation-tuple file")
      ->required();
  decode->add_option("--ubb", ubb_file, "uncovering-by-bases file")
      ->required();
  decode->add_option("--word", word_text, "received word")->required();
  decode->add_flag("--trace", trace, "print one line per attempt");
  decode->add_flag("--no-verify", no_verify,
                   "skip UBB base/strength verification at startup");

  auto* ubb = app.add_subcommand("ubb", "uncovering-by-bases operations");
  ubb->require_subcommand(1);
  auto* ubb_verify = ubb->add_subcommand("verify", "check bases and strength");
  ubb_verify->add_option("ubb", ubb_file, "UBB file")->required();
  ubb_verify->add_option("group", group_file, "group file")->required();
  ubb_verify->add_option("-r,--strength", strength_override,
                         "override the file's claimed strength");
  ubb_verify->add_option("--sample", samples,
                         "Monte-Carlo subsets instead of exhaustive");
  ubb_verify->add_option("--seed", seed, "sampling seed");
  ubb_verify->add_option("--budget", budget, "max exhaustive subsets");
  auto* ubb_cover = ubb->add_subcommand(
      "from-cover", "complement a covering design into a UBB");
  ubb_cover->add_option("cover", cover_file, "covering-design file")
      ->required();
  ubb_cover->add_option("group", group_file, "group file")->required();
  ubb_cover->add_option("-o,--out", out_file, "write UBB here");
  auto* ubb_relabel = ubb->add_subcommand(
      "relabel", "search a point relabeling making all complements bases");
  ubb_relabel->add_option("cover", cover_file, "covering-design file")
      ->required();
  ubb_relabel->add_option("group", group_file, "group file")->required();
  ubb_relabel->add_option("--attempts", attempts, "restart budget");
  ubb_relabel->add_option("--seed", seed, "search seed");
  ubb_relabel->add_option("-o,--out", out_file, "write UBB here");

  auto* saxl = app.add_subcommand("saxl", "graph of size-2 bases");
  saxl->add_option("group", group_file, "group file")->required();
  saxl->add_option("--matching", matching_size,
                   "also emit a disjoint-base UBB of this many rows");
  add_tsv(saxl);

  auto* gkp = app.add_subcommand("gkp", "binomial-matrix permutation family");
  gkp->require_subcommand(1);
  auto* gkp_build = gkp->add_subcommand("build", "construct and summarize");
  gkp_build->add_option("p", p, "prime")->required();
  gkp_build->add_option("k", k, "dimension (>= 2)")->required();
  add_tsv(gkp_build);
  auto* gkp_ubb_cmd = gkp->add_subcommand("ubb", "matching UBB and params");
  gkp_ubb_cmd->add_option("p", p, "prime")->required();
  gkp_ubb_cmd->add_option("k", k, "dimension (>= 2)")->required();
  auto* gkp_code_cmd =
      gkp->add_subcommand("code", "twisted code via automorphism search");
  gkp_code_cmd->add_option("p", p, "prime")->required();
  gkp_code_cmd->add_option("k", k, "dimension (>= 2)")->required();
  gkp_code_cmd->add_option("--max-checks", max_checks, "search budget");

  auto* simulate = app.add_subcommand("simulate", "transmit-corrupt-decode");
  simulate->add_option("--tuple", tuple_file, "representation-tuple file")
      ->required();
  simulate->add_option("--ubb", ubb_file, "uncovering-by-bases file")
      ->required();
  simulate->add_option("-e,--errors", errors, "errors per trial")->required();
  simulate->add_option("-t,--trials", trials, "trial count");
  simulate->add_option("-s,--seed", seed, "master seed");
  simulate->add_flag("--stress", stress,
                     "report failures instead of asserting the guarantee");
  add_tsv(simulate);

  auto* report = app.add_subcommand("report", "reproduce parameter tables");
  report->require_subcommand(1);
  auto* report_tbl =
      report->add_subcommand("tables", "recompute and diff all table cells");
  report_tbl->add_option("--table", table, "unimproved, improved, or both")
      ->check(CLI::IsMember({"unimproved", "improved", "both"}));
  report_tbl->add_option("--data", data_dir, "fixture data directory");
  add_tsv(report_tbl);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(mindist)) return cmd_mindist(group_file, tsv);
    if (app.got_subcommand(delta)) return cmd_delta(tuple_file, tsv);
    if (app.got_subcommand(encode)) return cmd_encode(tuple_file, element);
    if (app.got_subcommand(decode))
      return cmd_decode(tuple_file, ubb_file, word_text, trace, no_verify);
    if (app.got_subcommand(ubb)) {
      if (ubb->got_subcommand(ubb_verify))
        return cmd_ubb_verify(ubb_file, group_file, strength_override,
                              samples, seed, budget);
      if (ubb->got_subcommand(ubb_cover))
        return cmd_ubb_from_cover(cover_file, group_file, out_file);
      if (ubb->got_subcommand(ubb_relabel))
        return cmd_ubb_relabel(cover_file, group_file, attempts, seed,
                               out_file);
    }
    if (app.got_subcommand(saxl))
      return cmd_saxl(group_file, matching_size, tsv);
    if (app.got_subcommand(gkp)) {
      if (gkp->got_subcommand(gkp_build)) return cmd_gkp_build(p, k, tsv);
      if (gkp->got_subcommand(gkp_ubb_cmd)) return cmd_gkp_ubb(p, k);
      if (gkp->got_subcommand(gkp_code_cmd))
        return cmd_gkp_code(p, k, max_checks);
    }
    if (app.got_subcommand(simulate))
      return cmd_simulate(tuple_file, ubb_file, errors, trials, seed, stress,
                          tsv);
    if (app.got_subcommand(report)) return cmd_report(table, data_dir, tsv);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const BudgetError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "failed: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "failed: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

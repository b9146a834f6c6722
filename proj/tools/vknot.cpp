// vknot: intersection polynomials of virtual knots from Gauss codes.
//
// Exit status: 0 success, 1 domain error (bad code, failed check), 2 usage.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "vknot/appendix.hpp"
#include "vknot/catalog.hpp"
#include "vknot/invariants.hpp"
#include "vknot/moves.hpp"
#include "vknot/report.hpp"

namespace {

using namespace vknot;

struct DomainFailure {
  std::string message;
};

int cmd_compute(const std::string& code, const std::string& format) {
  const auto d = GaussDiagram::parse(code);
  const auto s = all_invariants(d);
  if (format == "json")
    std::cout << record_json("", d, s).dump() << '\n';
  else
    std::cout << format_text(d, s);
  return 0;
}

int cmd_table(const std::string& path, const std::string& format, unsigned jobs) {
  const auto rows = compute_table(load_catalog(path), jobs);
  if (format == "csv") std::cout << csv_header() << '\n';
  if (format == "appendix") std::cout << appendix_header() << '\n';
  int status = 0;
  for (const auto& row : rows) {
    if (!row.invariants) {
      std::cerr << "vknot: " << row.name << ": " << row.error << '\n';
      status = 1;
    }
    if (format == "json")
      std::cout << record_json(row).dump() << '\n';
    else if (format == "csv")
      std::cout << csv_row(row) << '\n';
    else
      std::cout << appendix_row(row) << '\n';
  }
  return status;
}

int cmd_distinguish(const std::string& a, const std::string& b) {
  const auto sa = all_invariants(GaussDiagram::parse(a));
  const auto sb = all_invariants(GaussDiagram::parse(b));
  std::cout << describe(compare(sa, sb)) << '\n';
  return 0;
}

int cmd_symmetries(const std::string& code) {
  const auto d = GaussDiagram::parse(code);
  for (const auto& v : symmetry_variants(d)) {
    const auto s = all_invariants(v.diagram);
    std::cout << v.name << '\t' << (v.diagram.empty() ? "(unknot)" : v.diagram.str()) << "\tW=" << s.W.str()
              << "\tI=" << s.I.str() << "\tII=" << s.II.str()
              << "\tIII=" << canonical_representative(s.III).str() << " mod " << s.III.modulus.str() << '\n';
  }
  const auto report = symmetry_identity_check(d);
  std::cout << "identities: " << (report.all_hold() ? "all hold" : "FAILED") << '\n';
  for (const auto& f : report.failures()) std::cout << "  fails: " << f << '\n';

  const auto r = symmetry_distinctness(all_invariants(d));
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  std::cout << "2 III != II mod Wbar: " << yn(r.twice_third_differs_from_second) << '\n'
            << "W not reciprocal: " << yn(r.writhe_not_reciprocal) << '\n'
            << "W != -W(t^-1) or I not reciprocal: " << yn(r.reverse_detectable) << '\n'
            << "eight variants mutually distinct: " << (r.distinct() ? "yes" : "undetermined") << '\n';
  return report.all_hold() ? 0 : 1;
}

int cmd_bounds(const std::string& code) {
  const auto s = all_invariants(GaussDiagram::parse(code));
  auto show = [](const char* label, const Bound& b) {
    std::cout << label << " >= " << b.value;
    if (b.source == "none")
      std::cout << " (no information: W, I, II, III all vanish)\n";
    else
      std::cout << " (from " << b.source << ")\n";
  };
  show("c(K)", crossing_lower_bound(s));
  show("vc(K)", virtual_crossing_lower_bound(s));
  return 0;
}

// Checks W, I, II exactly and III as a class after every move.
std::string invariance_failure(const InvariantSet& base, const InvariantSet& now) {
  const auto c = compare(base, now);
  if (!c.W && !c.I && !c.II && !c.III) return {};
  return describe(c);
}

void print_log(std::ostream& out, const std::string& start, const std::vector<MoveSpec>& log) {
  out << "# start " << start << '\n';
  for (const auto& m : log) out << format_move(m) << '\n';
}

int cmd_verify(const std::string& code, std::size_t steps, std::uint64_t seed, std::size_t max_chords,
               const std::string& log_path) {
  const auto d = GaussDiagram::parse(code);
  const auto base = all_invariants(d);
  std::string failure;
  auto walk = random_walk(d, steps, seed, max_chords, [&](const GaussDiagram&, const MoveSpec&, const GaussDiagram& after) {
    failure = invariance_failure(base, all_invariants(after));
    return failure.empty();
  });
  if (!log_path.empty()) {
    std::ofstream out(log_path);
    if (!out) throw DomainFailure{"cannot write move log " + log_path};
    print_log(out, d.str(), walk.log);
  }
  if (!failure.empty()) {
    std::cerr << "vknot: invariants changed after move " << walk.log.size() << ": " << failure << '\n';
    print_log(std::cout, d.str(), walk.log);
    return 1;
  }
  std::cout << "ok: " << walk.log.size() << " moves, seed " << seed << ", final diagram "
            << (walk.diagram.empty() ? "(unknot)" : walk.diagram.str()) << '\n';
  return 0;
}

int cmd_replay(const std::string& code, const std::string& log_path) {
  std::ifstream in(log_path);
  if (!in) throw DomainFailure{"cannot open move log " + log_path};
  auto d = GaussDiagram::parse(code);
  const auto base = all_invariants(d);
  std::string line;
  for (std::size_t n = 1; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    d = apply_move(d, parse_move(line));
    if (auto f = invariance_failure(base, all_invariants(d)); !f.empty()) {
      std::cout << "move " << n << " (" << line << "): " << f << '\n';
      return 1;
    }
    ++n;
  }
  std::cout << "ok: final diagram " << (d.empty() ? "(unknot)" : d.str()) << '\n';
  return 0;
}

int cmd_selftest() {
  bool all = true;
  for (const auto& r : run_selftest()) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
    all = all && r.passed;
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Intersection polynomials of virtual knots"};
  app.require_subcommand(1);
  int status = 0;

  std::string code, code2, path, format = "text", table_format = "json";
  auto* compute = app.add_subcommand("compute", "Invariants of one Gauss code");
  compute->add_option("code", code, "Gauss code, e.g. O1+U2+O3+U1+O2+U3+")->required();
  compute->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  compute->callback([&] { status = cmd_compute(code, format); });

  unsigned jobs = 0;
  auto* table = app.add_subcommand("table", "Invariants of every knot in a catalog");
  table->add_option("catalog", path, "File of name<TAB>gauss_code lines")->required();
  table->add_option("--format", table_format, "Output format")->check(CLI::IsMember({"json", "csv", "appendix"}));
  table->add_option("-j,--jobs", jobs, "Worker threads (0 = all cores)");
  table->callback([&] { status = cmd_table(path, table_format, jobs); });

  auto* distinguish = app.add_subcommand("distinguish", "Report which invariants tell two knots apart");
  distinguish->add_option("code1", code, "First Gauss code")->required();
  distinguish->add_option("code2", code2, "Second Gauss code")->required();
  distinguish->callback([&] { status = cmd_distinguish(code, code2); });

  auto* symmetries = app.add_subcommand("symmetries", "Invariants of the eight symmetry variants");
  symmetries->add_option("code", code, "Gauss code")->required();
  symmetries->callback([&] { status = cmd_symmetries(code); });

  auto* bounds = app.add_subcommand("bounds", "Crossing number lower bounds");
  bounds->add_option("code", code, "Gauss code")->required();
  bounds->callback([&] { status = cmd_bounds(code); });

  std::size_t steps = 1000, max_chords = kDefaultMaxChords;
  std::uint64_t seed = 1;
  auto* verify = app.add_subcommand("verify", "Random Reidemeister walk checking invariance");
  verify->add_option("code", code, "Gauss code")->required();
  verify->add_option("--steps", steps, "Number of moves")->capture_default_str();
  verify->add_option("--seed", seed, "Random seed")->capture_default_str();
  verify->add_option("--max-chords", max_chords, "Growth cap during the walk")
      ->envname("VKNOT_MAX_CHORDS")
      ->capture_default_str();
  std::string log_path;
  verify->add_option("--log", log_path, "Also write the move log to this file");
  verify->callback([&] { status = cmd_verify(code, steps, seed, max_chords, log_path); });

  auto* replay = app.add_subcommand("replay", "Re-apply a move log printed by verify");
  replay->add_option("code", code, "Starting Gauss code")->required();
  replay->add_option("log", path, "Move log file")->required();
  replay->callback([&] { status = cmd_replay(code, path); });

  auto* selftest = app.add_subcommand("selftest", "Built-in consistency checks");
  selftest->callback([&] { status = cmd_selftest(); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const DomainFailure& e) {
    std::cerr << "vknot: " << e.message << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "vknot: " << e.what() << '\n';
    return 1;
  }
  return status;
}

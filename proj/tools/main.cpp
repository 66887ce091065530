// jacplane: graded invariants of reduced plane curves (Jacobian syzygies,
// mdr, tau, local cohomology dimensions) with an exact multi-prime backend.

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "jacplane/atlas.hpp"
#include "jacplane/parser.hpp"
#include "jacplane/report.hpp"

using namespace jacplane;
using nlohmann::json;

namespace {

u64 env_seed() {
  if (const char* s = std::getenv("JACPLANE_SEED")) {
    try {
      return std::stoull(s);
    } catch (...) {
      throw InputError("JACPLANE_SEED is not an unsigned integer");
    }
  }
  return kDefaultSeed;
}

u64 item_seed(u64 seed, u64 index) {
  u64 z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

struct CommonFlags {
  std::optional<u64> seed;
  bool verify_on = false, verify_off = false;
  bool table = false;
  bool timings = false;
  bool allow_non_reduced = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--seed", seed, "seed for prime selection (reproducible)");
    cmd->add_flag("--verify", verify_on,
                  "force both tau and both n(f) algorithms with agreement");
    cmd->add_flag("--no-verify", verify_off,
                  "skip the cross-check algorithms");
    cmd->add_flag("--table", table, "human-readable output");
    cmd->add_flag("--json", [](std::size_t) {}, "JSON output (default)");
    cmd->add_flag("--timings", timings, "include wall time in JSON output");
    cmd->add_flag("--allow-non-reduced", allow_non_reduced,
                  "skip the reducedness gate; raw dimensions only");
  }

  AnalyzeOptions options(int degree) const {
    AnalyzeOptions o;
    o.seed = seed.value_or(env_seed());
    o.verify = verify_on || (!verify_off && degree <= 16);
    o.allow_non_reduced = allow_non_reduced;
    return o;
  }
};

void emit_report(const AnalysisReport& rep, const CommonFlags& flags) {
  if (flags.table)
    std::cout << report_to_table(rep);
  else
    std::cout << report_to_json(rep, flags.timings).dump() << "\n";
}

int run_single(const HomogPoly& f, const CommonFlags& flags,
               std::optional<i64> mu, bool irreducible) {
  const AnalysisReport rep =
      build_report(f, flags.options(f.degree()), mu, irreducible);
  emit_report(rep, flags);
  if (rep.analysis.escalations > 0)
    std::cerr << "jacplane: note: " << rep.analysis.escalations
              << " prime escalation(s) before agreement\n";
  if (rep.any_check_failed()) {
    std::cerr << "jacplane: theorem check failed; dimensions dumped above\n";
    return 2;
  }
  return 0;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ---------------------------------------------------------------- analyze

int cmd_analyze(const std::string& poly_text, const std::string& file,
                const CommonFlags& flags, std::optional<i64> mu,
                bool irreducible) {
  if (!poly_text.empty() && !file.empty())
    throw InputError("give either a polynomial or --file, not both");
  std::string text = poly_text;
  if (!file.empty()) text = read_file(file);
  if (text.empty()) throw InputError("no polynomial given");
  const HomogPoly f = parse_poly(text);
  return run_single(f, flags, mu, irreducible);
}

// ---------------------------------------------------------------- generate

int cmd_generate(const std::string& family,
                 const std::vector<std::string>& params, bool analyze_too,
                 const CommonFlags& flags) {
  HomogPoly f = HomogPoly::zero(0);
  auto int_param = [&](std::size_t i) {
    if (i >= params.size())
      throw InputError("family '" + family + "' needs more parameters");
    try {
      return std::stoi(params[i]);
    } catch (...) {
      throw InputError("parameter '" + params[i] + "' is not an integer");
    }
  };
  if (family == "binomial") {
    f = binomial_curve(int_param(0), int_param(1));
  } else if (family == "bplus") {
    f = b_plus_curve(int_param(0));
  } else if (family == "named") {
    if (params.empty()) throw InputError("'named' needs an example name");
    f = named_example(params[0]);
  } else {
    throw InputError("unknown family '" + family +
                     "'; valid: binomial d k | bplus k | named NAME");
  }
  if (analyze_too) return run_single(f, flags, std::nullopt, false);
  std::cout << f.to_string() << "\n";
  return 0;
}

// ---------------------------------------------------------------- batch

int cmd_batch(const std::string& path, unsigned jobs,
              const CommonFlags& flags) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open batch file: " + path);
  std::vector<std::string> items;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    items.push_back(line);
  }

  const u64 seed = flags.seed.value_or(env_seed());
  std::vector<json> results(items.size());
  std::atomic<std::size_t> next{0};
  std::atomic<int> input_errors{0}, internal_errors{0}, check_failures{0};
  std::atomic<i64> escalations{0};

  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= items.size()) return;
      json out;
      try {
        const HomogPoly f = parse_poly(items[i]);
        CommonFlags item_flags = flags;
        item_flags.seed = item_seed(seed, i);
        const AnalysisReport rep =
            build_report(f, item_flags.options(f.degree()));
        out = report_to_json(rep, flags.timings);
        if (rep.any_check_failed()) ++check_failures;
        escalations += rep.analysis.escalations;
      } catch (const InternalError& e) {
        out = {{"input", items[i]},
               {"error", {{"type", "internal"}, {"message", e.what()}}}};
        ++internal_errors;
      } catch (const InputError& e) {
        out = {{"input", items[i]},
               {"error", {{"type", "input"}, {"message", e.what()}}}};
        ++input_errors;
      } catch (const std::exception& e) {
        out = {{"input", items[i]},
               {"error", {{"type", "internal"}, {"message", e.what()}}}};
        ++internal_errors;
      }
      results[i] = std::move(out);
    }
  };

  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  for (const auto& r : results) std::cout << r.dump() << "\n";
  const json footer = {
      {"summary",
       {{"items", items.size()},
        {"input_errors", input_errors.load()},
        {"internal_errors", internal_errors.load()},
        {"check_failures", check_failures.load()},
        {"escalations", escalations.load()}}}};
  std::cout << footer.dump() << "\n";
  return (internal_errors.load() > 0 || check_failures.load() > 0) ? 2 : 0;
}

// ------------------------------------------------------------ arrangement

json lattice_to_json(const IntersectionLattice& lat) {
  json points = json::array();
  for (const auto& p : lat.points)
    points.push_back({{"point", p.point},
                      {"lines", p.lines},
                      {"multiplicity", p.multiplicity()}});
  return {{"line_count", lat.line_count},
          {"points", points},
          {"multiplicities", lat.multiplicities()}};
}

int cmd_arrangement(const std::string& path, const CommonFlags& flags) {
  const Arrangement arr = load_arrangement(path);
  const IntersectionLattice lat = intersection_lattice(arr);
  const i64 tau_comb = combinatorial_tau(lat);
  const HomogPoly f = arrangement_poly(arr);
  const AnalysisReport rep = build_report(f, flags.options(f.degree()));
  const bool tau_match = tau_comb == rep.analysis.tau;

  if (flags.table) {
    std::cout << "arrangement " << path << ": " << lat.line_count
              << " lines, " << lat.points.size() << " points\n";
    std::cout << "  multiplicities ";
    for (int m : lat.multiplicities()) std::cout << m << " ";
    std::cout << "\n  tau_combinatorial " << tau_comb
              << (tau_match ? " (matches analysis)" : " (MISMATCH)") << "\n";
    std::cout << report_to_table(rep);
  } else {
    json j = {{"file", path},
              {"lattice", lattice_to_json(lat)},
              {"tau_combinatorial", tau_comb},
              {"tau_matches", tau_match},
              {"analysis", report_to_json(rep, flags.timings)}};
    std::cout << j.dump() << "\n";
  }
  if (!tau_match || rep.any_check_failed()) {
    std::cerr << "jacplane: arrangement check failed\n";
    return 2;
  }
  return 0;
}

// ------------------------------------------------------------- conjecture

std::string dirname_of(const std::string& path) {
  const auto slash = path.find_last_of('/');
  return slash == std::string::npos ? std::string(".")
                                    : path.substr(0, slash);
}

int cmd_conjecture(const std::vector<std::string>& group_files,
                   const CommonFlags& flags) {
  int worst = 0;
  for (const auto& gf : group_files) {
    const json group_json = json::parse(read_file(gf));
    if (!group_json.is_array() || group_json.empty())
      throw InputError("group file must be a nonempty JSON array of paths: " +
                       gf);
    std::vector<Arrangement> group;
    std::vector<std::string> names;
    for (const auto& item : group_json) {
      std::string p = item.get<std::string>();
      if (!p.empty() && p[0] != '/') p = dirname_of(gf) + "/" + p;
      names.push_back(p);
      group.push_back(load_arrangement(p));
    }
    const auto results =
        conjecture_harness({group}, flags.options(int(group[0].lines.size())));
    const HarnessGroup& g = results[0];

    json members = json::array();
    for (std::size_t i = 0; i < g.members.size(); ++i) {
      const HarnessMember& m = g.members[i];
      members.push_back({{"file", names[i]},
                         {"mdr", m.mdr},
                         {"tau", m.tau},
                         {"tau_combinatorial", m.tau_comb},
                         {"nu", m.nu},
                         {"class", m.label.name()},
                         {"splitting_type",
                          m.mdr >= 1 ? json::array({m.split.d1, m.split.d2})
                                     : json(nullptr)}});
    }
    const json out = {{"group", gf},
                      {"members", members},
                      {"nu_constant", g.nu_constant},
                      {"splitting_constant", g.splitting_constant},
                      {"mdr_constant", g.mdr_constant},
                      {"tau_matches_combinatorial", g.tau_matches_combinatorial},
                      {"counterexample", g.counterexample}};
    if (flags.table) {
      std::cout << "group " << gf << "\n";
      for (const auto& m : members)
        std::cout << "  " << m["file"].get<std::string>() << ": mdr "
                  << m["mdr"] << ", tau " << m["tau"] << ", nu " << m["nu"]
                  << ", class " << m["class"].get<std::string>() << "\n";
      std::cout << "  nu constant: " << (g.nu_constant ? "yes" : "NO")
                << ", splitting constant: "
                << (g.splitting_constant ? "yes" : "NO")
                << ", mdr constant: " << (g.mdr_constant ? "yes" : "no")
                << "\n";
    } else {
      std::cout << out.dump() << "\n";
    }
    if (g.counterexample) {
      std::cerr << "jacplane: POSSIBLE COUNTEREXAMPLE: nu or splitting type "
                   "is not constant on the lattice class in "
                << gf << "\n";
      worst = std::max(worst, 2);
    }
    if (!g.tau_matches_combinatorial) {
      std::cerr << "jacplane: combinatorial tau disagrees with the computed "
                   "tau in "
                << gf << "\n";
      worst = std::max(worst, 2);
    }
  }
  return worst;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graded invariants of reduced plane curves"};
  app.require_subcommand(1);

  // analyze
  auto* analyze_cmd =
      app.add_subcommand("analyze", "analyze one curve from text or file");
  std::string poly_text, poly_file;
  analyze_cmd->add_option("poly", poly_text, "polynomial in x, y, z");
  analyze_cmd->add_option("--file", poly_file, "read the polynomial from a file");
  CommonFlags analyze_flags;
  analyze_flags.attach(analyze_cmd);
  std::optional<i64> mu;
  bool irreducible = false;
  analyze_cmd->add_option("--mu", mu, "total Milnor number (user-supplied)");
  analyze_cmd->add_flag("--irreducible", irreducible,
                        "assert the curve is irreducible");

  // generate
  auto* gen_cmd = app.add_subcommand(
      "generate", "emit a curve family member (binomial d k | bplus k | named NAME)");
  std::string family;
  std::vector<std::string> params;
  bool gen_analyze = false;
  gen_cmd->add_option("family", family)->required();
  gen_cmd->add_option("params", params, "family parameters");
  gen_cmd->add_flag("--analyze", gen_analyze, "analyze instead of printing");
  CommonFlags gen_flags;
  gen_flags.attach(gen_cmd);

  // batch
  auto* batch_cmd =
      app.add_subcommand("batch", "analyze a file of polynomials, one per line");
  std::string batch_file;
  unsigned jobs = 1;
  batch_cmd->add_option("file", batch_file)->required();
  batch_cmd->add_option("--jobs", jobs, "worker threads");
  CommonFlags batch_flags;
  batch_flags.attach(batch_cmd);

  // arrangement
  auto* arr_cmd = app.add_subcommand(
      "arrangement", "lattice + analysis of a line arrangement file");
  std::string arr_file;
  arr_cmd->add_option("file", arr_file)->required();
  CommonFlags arr_flags;
  arr_flags.attach(arr_cmd);

  // conjecture
  auto* conj_cmd = app.add_subcommand(
      "conjecture", "nu-constancy harness over lattice-equal arrangements");
  std::vector<std::string> group_files;
  conj_cmd->add_option("groups", group_files, "JSON group files")->required();
  CommonFlags conj_flags;
  conj_flags.attach(conj_cmd);

  // schema
  auto* schema_cmd =
      app.add_subcommand("schema", "print the report JSON schema");

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze_cmd->parsed())
      return cmd_analyze(poly_text, poly_file, analyze_flags, mu, irreducible);
    if (gen_cmd->parsed())
      return cmd_generate(family, params, gen_analyze, gen_flags);
    if (batch_cmd->parsed()) return cmd_batch(batch_file, jobs, batch_flags);
    if (arr_cmd->parsed()) return cmd_arrangement(arr_file, arr_flags);
    if (conj_cmd->parsed()) return cmd_conjecture(group_files, conj_flags);
    if (schema_cmd->parsed()) {
      std::cout << report_schema_text();
      return 0;
    }
  } catch (const InternalError& e) {
    std::cerr << "jacplane: internal: " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    std::cerr << "jacplane: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "jacplane: internal: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

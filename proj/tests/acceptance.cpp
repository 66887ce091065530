// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Usage: acceptance <path-to-cli> <data-dir>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "jacplane/atlas.hpp"
#include "jacplane/parser.hpp"
#include "jacplane/report.hpp"

using namespace jacplane;

namespace {

int g_failures = 0;

class Timer {
public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double secs() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

private:
  std::chrono::steady_clock::time_point start_;
};

void report(int num, const std::string& what, bool ok, double secs,
            const std::string& detail = "") {
  std::printf("%s criterion %d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", num,
              what.c_str(), secs, detail.empty() ? "" : " -- ",
              detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

AnalyzeOptions opts_with_seed(u64 seed) {
  AnalyzeOptions o;
  o.seed = seed;
  o.verify = true;
  return o;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_cli(const std::string& cli, const std::string& args,
            const std::string& out_path) {
  const std::string cmd = cli + " " + args + " > " + out_path + " 2>/dev/null";
  return std::system(cmd.c_str());
}

// phi(d)/2 by brute force, independent of the library's totient.
i64 phi_half(int d) {
  int phi = 0;
  for (int m = 1; m < d; ++m)
    if (std::gcd(m, d) == 1) ++phi;
  return phi / 2;
}

std::vector<i64> fermat_hilbert_oracle(int d) {
  std::vector<i64> base(std::size_t(d - 1), 1), out{1};
  for (int rep = 0; rep < 3; ++rep) {
    std::vector<i64> next(out.size() + base.size() - 1, 0);
    for (std::size_t i = 0; i < out.size(); ++i)
      for (std::size_t j = 0; j < base.size(); ++j)
        next[i + j] += out[i] * base[j];
    out = std::move(next);
  }
  return out;
}

struct CorpusItem {
  std::string name;
  HomogPoly f;
  CurveAnalysis analysis;
};

std::vector<HomogPoly> random_perturbed_binomials(std::size_t count,
                                                  u64 seed) {
  std::mt19937_64 rng(seed);
  PrimeField F(1073741827);
  std::vector<HomogPoly> out;
  while (out.size() < count) {
    const int d = 3 + int(out.size() % 6);
    const int k = 1 + int(rng() % u64(d - 1));
    HomogPoly f = add(HomogPoly::monomial({0, d, 0}, 1),
                      HomogPoly::monomial({k, 0, d - k}, 1));
    const int extras = int(rng() % 3);
    for (int e = 0; e < extras; ++e) {
      const int a = int(rng() % u64(d + 1));
      const int b = int(rng() % u64(d - a + 1));
      i64 c = i64(rng() % 7) - 3;
      if (c == 0) c = 1;
      f = add(f, HomogPoly::monomial({a, b, d - a - b}, c));
    }
    if (f.is_zero()) continue;
    std::mt19937_64 check_rng(rng());
    if (!reduced_check(f, F, check_rng)) continue;
    out.push_back(f);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::fprintf(stderr, "usage: acceptance <cli-binary> <data-dir>\n");
    return 99;
  }
  const std::string cli = argv[1];
  const std::string data = argv[2];
  const std::string tmp = "acceptance_tmp";

  // 1. the two rational cuspidal quartics
  {
    Timer t;
    Timer t1;
    const CurveAnalysis c = analyze(named_example("quartic_C"), opts_with_seed(1));
    const double s1 = t1.secs();
    Timer t2;
    const CurveAnalysis cp =
        analyze(named_example("quartic_Cprime"), opts_with_seed(1));
    const double s2 = t2.secs();
    const bool ok = c.r == 1 && c.tau == 6 && c.nu == 1 &&
                    classify(c).kind == CurveClass::NearlyFree && cp.r == 2 &&
                    cp.tau == 6 && cp.nu == 1 &&
                    classify(cp).kind == CurveClass::NearlyFree && s1 < 1.0 &&
                    s2 < 1.0;
    report(1, "cuspidal quartics: mdr 1/2, tau 6, nearly free", ok, t.secs());
  }

  // 2. the four-cusp quintic
  {
    Timer t;
    const CurveAnalysis q =
        analyze(named_example("quintic_4cusp"), opts_with_seed(1));
    const SplittingType st = splitting_type(q.d, q.r);
    const bool ok = q.r == 2 && q.tau == 12 &&
                    tau_bounds(5, 2).tau_max == 12 && q.nu == 0 &&
                    classify(q).kind == CurveClass::Free && st.d1 == 2 &&
                    st.d2 == 2 && t.secs() < 1.0;
    report(2, "4-cusp quintic: mdr 2, tau 12 = tau(5,2)_max, free, (2,2)", ok,
           t.secs());
  }

  std::vector<CorpusItem> corpus;
  corpus.push_back({"quartic_C", named_example("quartic_C"), {}});
  corpus.push_back({"quartic_Cprime", named_example("quartic_Cprime"), {}});
  corpus.push_back({"quintic_4cusp", named_example("quintic_4cusp"), {}});

  // 3. binomial model sweep, d = 6..12
  {
    Timer t;
    bool ok = true;
    std::string detail;
    for (int d = 6; d <= 12 && ok; ++d) {
      i64 admissible = 0;
      for (int k = 1; 2 * k < d; ++k) {
        if (std::gcd(k, d) != 1) continue;
        ++admissible;
        const HomogPoly f = binomial_curve(d, k);
        const CurveAnalysis a = analyze(f, opts_with_seed(3));
        corpus.push_back({"binomial_" + std::to_string(d) + "_" +
                              std::to_string(k),
                          f, a});
        if (a.r != 1 || a.tau != i64(d) * d - 3 * d + 2 ||
            classify(a).kind != CurveClass::NearlyFree) {
          ok = false;
          detail = "failed at d=" + std::to_string(d) + " k=" +
                   std::to_string(k);
          break;
        }
      }
      if (admissible != phi_half(d) || admissible != model_count(d)) {
        ok = false;
        detail = "model count mismatch at d=" + std::to_string(d);
      }
    }
    ok = ok && t.secs() < 30.0;
    report(3, "binomial sweep d=6..12: mdr 1, tau=d^2-3d+2, phi(d)/2 models",
           ok, t.secs(), detail);
  }

  // 4. odd-exponent family, k = 3 and 5
  {
    Timer t;
    const CurveAnalysis c3 = analyze(b_plus_curve(3), opts_with_seed(4));
    const CurveAnalysis c5 = analyze(b_plus_curve(5), opts_with_seed(4));
    corpus.push_back({"bplus_3", b_plus_curve(3), c3});
    corpus.push_back({"bplus_5", b_plus_curve(5), c5});
    const bool ok = c3.tau == 18 && c3.r == 3 && c3.nu == 1 && c5.tau == 60 &&
                    c5.r == 5 && c5.nu == 1 && t.secs() < 20.0;
    report(4, "even-degree family: (tau,r,nu) = (18,3,1) and (60,5,1)", ok,
           t.secs());
  }

  // analyses for the named corpus members reused below
  for (auto& item : corpus)
    if (item.analysis.d == 0) item.analysis = analyze(item.f, opts_with_seed(5));

  // 5. oracle equivalence over the full corpus (+50 random reduced curves)
  {
    Timer t;
    const auto randoms = random_perturbed_binomials(50, 2026);
    for (std::size_t i = 0; i < randoms.size(); ++i)
      corpus.push_back({"random_" + std::to_string(i), randoms[i],
                        analyze(randoms[i], opts_with_seed(6 + i))});
    int violations = 0;
    std::string detail;
    std::mt19937_64 prime_rng(99);
    for (const auto& item : corpus) {
      u64 p = random_prime(prime_rng);
      while (!item.f.compatible_with(PrimeField(p))) p = random_prime(prime_rng);
      const PrimeField F(p);
      const i64 t1 = tjurina_chi(item.f, F);
      const i64 t2 = tjurina_stable(item.f, F);
      const auto n1 = n_dims_saturation(item.f, F);
      const auto n2 = n_dims_chi(item.f, F, t1);
      if (t1 != t2 || n1 != n2 || t1 != item.analysis.tau ||
          n1 != item.analysis.n_dims) {
        ++violations;
        if (detail.empty()) detail = "first violation: " + item.name;
      }
    }
    report(5, "tau and n(f) oracle equivalence on " +
                  std::to_string(corpus.size()) + " curves",
           violations == 0, t.secs(), detail);
  }

  // 6. structural properties over the corpus
  {
    Timer t;
    int violations = 0;
    std::string detail;
    for (const auto& item : corpus) {
      const auto checks = theorem_checks(item.analysis);
      if (!all_pass(checks)) {
        ++violations;
        for (const auto& c : checks)
          if (c.status == CheckResult::Fail && detail.empty())
            detail = item.name + ": " + c.name + " " + c.detail;
      }
    }
    report(6,
           "duality, unimodality, chi identity, syzygy count, tau window, nu "
           "formula, biconditionals",
           violations == 0, t.secs(), detail);
  }

  // 7. smooth Fermat curves against the hand-expanded Hilbert series
  {
    Timer t;
    const CurveAnalysis f3 =
        analyze(parse_poly("x^3 + y^3 + z^3"), opts_with_seed(7));
    const CurveAnalysis f4 =
        analyze(parse_poly("x^4 + y^4 + z^4"), opts_with_seed(7));
    const auto h3 = fermat_hilbert_oracle(3);
    const auto h4 = fermat_hilbert_oracle(4);
    bool ok = f3.tau == 0 && f3.r == 2 && f3.nu == 3 && f3.n_dims == h3;
    ok = ok && f4.tau == 0 && f4.nu == 7 &&
         predicted_nu(4, f4.r, 0).value == 7 && f4.n_dims == h4;
    corpus.push_back({"fermat_3", parse_poly("x^3 + y^3 + z^3"), f3});
    corpus.push_back({"fermat_4", parse_poly("x^4 + y^4 + z^4"), f4});
    report(7, "fermat cubic n=(1,3,3,1), nu 3; fermat quartic nu 7", ok,
           t.secs());
  }

  // 8. arrangements
  {
    Timer t;
    bool ok = true;
    std::string detail;
    try {
      const Arrangement a6 = load_arrangement(data + "/generic6_a.lines");
      const Arrangement b6 = load_arrangement(data + "/generic6_b.lines");
      const auto lat = intersection_lattice(a6);
      const CurveAnalysis an = analyze(arrangement_poly(a6), opts_with_seed(8));
      const auto terao = prop_terao_nu(6, combinatorial_tau(lat));
      ok = combinatorial_tau(lat) == 15 && an.tau == 15 && terao &&
           *terao == 4 && an.nu == 4;
      if (!ok) detail = "generic 6-line invariants";

      const auto harness = conjecture_harness({{a6, b6}}, opts_with_seed(8));
      if (!(harness[0].nu_constant && harness[0].members[0].nu == 4)) {
        ok = false;
        detail = "nu constancy across realizations";
      }

      const Arrangement conc = load_arrangement(data + "/concurrent3.lines");
      const CurveAnalysis ca = analyze(arrangement_poly(conc), opts_with_seed(8));
      if (!(ca.r == 0 && ca.degenerate && ca.tau == 4 &&
            combinatorial_tau(intersection_lattice(conc)) == 4 &&
            classify(ca).kind == CurveClass::LinesThroughPoint)) {
        ok = false;
        detail = "concurrent-lines degenerate path";
      }
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    report(8, "6 generic lines: tau 15 both ways, nu 4 two ways; mdr=0 path",
           ok, t.secs(), detail);
  }

  // 9. reproducibility and two-prime agreement
  {
    Timer t;
    bool ok = true;
    std::string detail;

    if (run_cli(cli, "analyze --seed 7 \"y^4 - x*z^3\"", tmp + "_a1") != 0 ||
        run_cli(cli, "analyze --seed 7 \"y^4 - x*z^3\"", tmp + "_a2") != 0) {
      ok = false;
      detail = "cli analyze failed";
    } else if (slurp(tmp + "_a1") != slurp(tmp + "_a2") ||
               slurp(tmp + "_a1").empty()) {
      ok = false;
      detail = "repeated runs differ";
    }

    {
      std::ofstream batch(tmp + "_in.txt");
      batch << "y^6 + x*z^5\nx^3 + y^3 + z^3\ny^4 - x*z^3\nx*y*z\n"
            << "y^7 + x^2*z^5\nx^4 + y^4 + z^4\n";
    }
    if (ok) {
      if (run_cli(cli, "batch --seed 11 --jobs 1 " + tmp + "_in.txt",
                  tmp + "_b1") != 0 ||
          run_cli(cli, "batch --seed 11 --jobs 4 " + tmp + "_in.txt",
                  tmp + "_b2") != 0) {
        ok = false;
        detail = "cli batch failed";
      } else if (slurp(tmp + "_b1") != slurp(tmp + "_b2") ||
                 slurp(tmp + "_b1").empty()) {
        ok = false;
        detail = "jobs 1 vs 4 outputs differ";
      }
    }

    i64 escalations = 0;
    for (const auto& item : corpus) escalations += item.analysis.escalations;
    if (escalations != 0) {
      ok = false;
      detail = "prime escalations: " + std::to_string(escalations);
    }
    report(9, "byte-identical JSON across runs and jobs; zero escalations",
           ok, t.secs(), detail);
  }

  for (const char* suffix : {"_a1", "_a2", "_in.txt", "_b1", "_b2"})
    std::remove((tmp + suffix).c_str());

  if (g_failures)
    std::printf("%d criterion(s) FAILED\n", g_failures);
  else
    std::printf("all acceptance criteria passed\n");
  return g_failures;
}

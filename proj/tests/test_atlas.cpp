#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <sstream>

#include "jacplane/atlas.hpp"
#include "jacplane/parser.hpp"

using namespace jacplane;

namespace {

Arrangement generic_lines_a() {
  return make_arrangement(
      {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {1, 2, 4}, {1, 3, 9}});
}

Arrangement generic_lines_b() {
  return make_arrangement(
      {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {3, 1, 1}, {1, 5, 2}, {2, 1, 7}});
}

// The 9-line / 6-triple-point pair: lines join pairs of points on the conic
// xz = y^2 (parameters {-1, 0, 1} x {2, 3, 5}); the second realization moves
// the parameter-5 point off the conic to (1, 5, 26).
Arrangement ziegler_on_conic() {
  return make_arrangement({{-2, -1, 1},
                           {-3, -2, 1},
                           {-5, -4, 1},
                           {0, -2, 1},
                           {0, -3, 1},
                           {0, -5, 1},
                           {2, -3, 1},
                           {3, -4, 1},
                           {5, -6, 1}});
}

Arrangement ziegler_off_conic() {
  return make_arrangement({{-2, -1, 1},
                           {-3, -2, 1},
                           {0, -2, 1},
                           {0, -3, 1},
                           {2, -3, 1},
                           {3, -4, 1},
                           {-31, -25, 6},
                           {0, -26, 5},
                           {21, -25, 4}});
}

}  // namespace

TEST_CASE("binomial curve family") {
  CHECK(binomial_curve(6, 1) == parse_poly("y^6 + x*z^5"));
  CHECK(binomial_curve(7, 3) == parse_poly("y^7 + x^3*z^4"));
  CHECK_THROWS_WITH_AS(binomial_curve(6, 2), doctest::Contains("gcd"),
                       InputError);
  CHECK_THROWS_AS(binomial_curve(6, 3), InputError);  // k >= d/2
  CHECK_THROWS_AS(binomial_curve(2, 1), InputError);
}

TEST_CASE("model count is half the totient") {
  CHECK(model_count(6) == 1);
  CHECK(model_count(7) == 3);
  CHECK(model_count(12) == 2);
  CHECK(model_count(9) == 3);
  // matches the number of admissible generator parameters
  for (int d = 3; d <= 16; ++d) {
    i64 count = 0;
    for (int k = 1; 2 * k < d; ++k) {
      try {
        binomial_curve(d, k);
        ++count;
      } catch (const InputError&) {
      }
    }
    CHECK(count == model_count(d));
  }
}

TEST_CASE("odd-exponent nearly free family") {
  const HomogPoly c6 = b_plus_curve(3);
  CHECK(c6.degree() == 6);
  CHECK(c6 == parse_poly(
                  "x^6 + y^6 + z^6 - 2*(x^3*y^3 + x^3*z^3 + y^3*z^3)"));
  CHECK(b_plus_curve(5).degree() == 10);
  CHECK_THROWS_AS(b_plus_curve(2), InputError);
  CHECK_THROWS_AS(b_plus_curve(1), InputError);
}

TEST_CASE("named examples") {
  CHECK(named_example("quartic_C") == parse_poly("y^4 - x*z^3"));
  CHECK(named_example("quartic_Cprime") == parse_poly("y^4 - x*z^3 - y^3*z"));
  CHECK(named_example("quintic_4cusp").term_count() == 6);
  CHECK(named_example("quintic_4cusp").degree() == 5);
  CHECK_THROWS_WITH_AS(named_example("nope"), doctest::Contains("quartic_C"),
                       InputError);
}

TEST_CASE("arrangement validation and product polynomial") {
  const Arrangement triangle =
      make_arrangement({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(arrangement_poly(triangle) == parse_poly("x*y*z"));

  CHECK_THROWS_WITH_AS(
      make_arrangement({{1, 0, 0}, {2, 0, 0}}),
      doctest::Contains("proportional"), InputError);
  CHECK_THROWS_AS(make_arrangement({{0, 0, 0}}), InputError);

  const Arrangement four = make_arrangement(
      {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}});
  CHECK(arrangement_poly(four).degree() == 4);
}

TEST_CASE("pencil of lines has mdr zero") {
  const Arrangement pencil = make_arrangement({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}});
  AnalyzeOptions opts;
  opts.seed = 3;
  const CurveAnalysis a = analyze(arrangement_poly(pencil), opts);
  CHECK(a.r == 0);
  CHECK(a.degenerate);
  CHECK(a.tau == 4);
}

TEST_CASE("intersection lattices") {
  const auto generic3 =
      intersection_lattice(make_arrangement({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  CHECK(generic3.points.size() == 3);
  CHECK(generic3.multiplicities() == std::vector<int>{2, 2, 2});

  const auto concurrent3 = intersection_lattice(
      make_arrangement({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}}));
  CHECK(concurrent3.points.size() == 1);
  CHECK(concurrent3.multiplicities() == std::vector<int>{3});

  const auto generic6 = intersection_lattice(generic_lines_a());
  CHECK(generic6.points.size() == 15);
  CHECK(generic6.multiplicities() == std::vector<int>(15, 2));
}

TEST_CASE("combinatorial tjurina number") {
  CHECK(combinatorial_tau(intersection_lattice(generic_lines_a())) == 15);
  CHECK(combinatorial_tau(intersection_lattice(
            make_arrangement({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}}))) == 4);
  // one multiplicity-4 point plus doubles: 4 lines through [0:0:1] + z
  const Arrangement mix = make_arrangement(
      {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {1, -1, 0}, {0, 0, 1}});
  const auto lat = intersection_lattice(mix);
  CHECK(combinatorial_tau(lat) == 9 + 4);  // (4-1)^2 + four double points
}

TEST_CASE("combinatorial tau equals the computed tau") {
  AnalyzeOptions opts;
  opts.seed = 17;
  for (const Arrangement& arr :
       {generic_lines_a(), generic_lines_b(),
        make_arrangement({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}),
        make_arrangement({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}})}) {
    const CurveAnalysis a = analyze(arrangement_poly(arr), opts);
    CHECK(combinatorial_tau(intersection_lattice(arr)) == a.tau);
  }
}

TEST_CASE("lattice isomorphism") {
  const auto g6a = intersection_lattice(generic_lines_a());
  const auto g6b = intersection_lattice(generic_lines_b());
  CHECK(lattice_isomorphic(g6a, g6a));
  CHECK(lattice_isomorphic(g6a, g6b));
  CHECK(lattice_isomorphic(g6b, g6a));

  const auto generic3 =
      intersection_lattice(make_arrangement({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  const auto concurrent3 = intersection_lattice(
      make_arrangement({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}}));
  CHECK_FALSE(lattice_isomorphic(generic3, concurrent3));

  // two generic 5-line realizations
  const auto p5a = intersection_lattice(make_arrangement(
      {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {1, 2, 4}}));
  const auto p5b = intersection_lattice(make_arrangement(
      {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {2, 3, 1}, {5, 1, 3}}));
  CHECK(lattice_isomorphic(p5a, p5b));

  const auto za = intersection_lattice(ziegler_on_conic());
  const auto zb = intersection_lattice(ziegler_off_conic());
  CHECK(za.multiplicities() ==
        ([] { std::vector<int> m(6, 3); m.resize(24, 2); return m; })());
  CHECK(lattice_isomorphic(za, zb));
}

TEST_CASE("conjecture harness on generic realizations") {
  AnalyzeOptions opts;
  opts.seed = 23;
  const auto res =
      conjecture_harness({{generic_lines_a(), generic_lines_b()}}, opts);
  REQUIRE(res.size() == 1);
  const HarnessGroup& g = res[0];
  CHECK(g.nu_constant);
  CHECK(g.members[0].nu == 4);
  CHECK(g.members[1].nu == 4);
  CHECK(g.tau_matches_combinatorial);
  CHECK_FALSE(g.counterexample);

  // single-member group is trivially constant
  const auto single = conjecture_harness({{generic_lines_a()}}, opts);
  CHECK(single[0].nu_constant);

  // mixed lattices are an input error
  CHECK_THROWS_AS(
      conjecture_harness(
          {{generic_lines_a(),
            make_arrangement({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1},
                              {1, 2, 4}, {1, 1, 2}})}},
          opts),
      InputError);
}

TEST_CASE("ziegler pair: same lattice, different mdr, equal nu") {
  AnalyzeOptions opts;
  opts.seed = 29;
  const auto res =
      conjecture_harness({{ziegler_on_conic(), ziegler_off_conic()}}, opts);
  const HarnessGroup& g = res[0];
  REQUIRE(g.members.size() == 2);
  CHECK(g.members[0].tau == 42);
  CHECK(g.members[1].tau == 42);
  CHECK(g.tau_matches_combinatorial);
  // the classical phenomenon: mdr depends on the realization
  CHECK_FALSE(g.mdr_constant);
  CHECK(std::set<int>{g.members[0].mdr, g.members[1].mdr} ==
        std::set<int>{5, 6});
  // ... while nu (and so the splitting type) does not
  CHECK(g.nu_constant);
  CHECK(g.splitting_constant);
  CHECK_FALSE(g.counterexample);
}

TEST_CASE("arrangement file parsing") {
  std::istringstream in(
      "# comment\n"
      "1 0 0\n"
      "0 1 0   # trailing comment\n"
      "\n"
      "0 0 1\n");
  const Arrangement a = parse_arrangement(in);
  CHECK(a.lines.size() == 3);

  std::istringstream bad("1 0\n");
  CHECK_THROWS_AS(parse_arrangement(bad), InputError);
  std::istringstream dup("1 0 0\n-2 0 0\n");
  CHECK_THROWS_AS(parse_arrangement(dup), InputError);
}

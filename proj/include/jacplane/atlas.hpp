#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "jacplane/classify.hpp"
#include "jacplane/jacobian.hpp"

namespace jacplane {

// A list of projective lines a x + b y + c z = 0 with integer coefficients,
// pairwise non-proportional (a repeated line would make the product curve
// non-reduced).
struct Arrangement {
  std::vector<std::array<i64, 3>> lines;
};

// Validates and normalizes; throws InputError on a zero or repeated line.
Arrangement make_arrangement(std::vector<std::array<i64, 3>> lines);

// One line per text row: three integers; '#' starts a comment.
Arrangement parse_arrangement(std::istream& in);
Arrangement load_arrangement(const std::string& path);

struct LatticePoint {
  std::array<i64, 3> point;    // primitive integer representative
  std::vector<int> lines;      // incident line indices, sorted
  int multiplicity() const { return int(lines.size()); }
};

struct IntersectionLattice {
  int line_count = 0;
  std::vector<LatticePoint> points;

  std::vector<int> multiplicities() const;  // sorted descending
};

// y^d + x^k z^{d-k}; requires d >= 3, 1 <= k < d/2, gcd(k, d) = 1.
HomogPoly binomial_curve(int d, int k);

// Number of admissible k above: phi(d)/2.
i64 model_count(int d);  // d >= 3

// x^{2k} + y^{2k} + z^{2k} - 2(x^k y^k + x^k z^k + y^k z^k), k odd >= 3.
HomogPoly b_plus_curve(int k);

// quartic_C, quartic_Cprime, quintic_4cusp.
HomogPoly named_example(std::string_view name);
std::vector<std::string> named_example_list();

HomogPoly arrangement_poly(const Arrangement& a);

// Exact pairwise intersections over Z, grouped into projective points.
IntersectionLattice intersection_lattice(const Arrangement& a);

// Sum over points of (multiplicity - 1)^2: tau of the product curve when
// every vertex is an ordinary multiple point, which is always the case for
// line arrangements.
i64 combinatorial_tau(const IntersectionLattice& l);

// Line-relabelling bijection carrying one incidence structure onto the
// other; backtracking with multiplicity-signature pruning.
bool lattice_isomorphic(const IntersectionLattice& l1,
                        const IntersectionLattice& l2);

struct HarnessMember {
  std::string name;
  int mdr = 0;
  i64 tau = 0;
  i64 tau_comb = 0;
  i64 nu = 0;
  SplittingType split;
  ClassLabel label;
  CurveAnalysis analysis;
};

struct HarnessGroup {
  std::vector<HarnessMember> members;
  bool nu_constant = true;
  bool splitting_constant = true;
  bool mdr_constant = true;
  bool tau_matches_combinatorial = true;
  // A non-constant nu over one lattice class would contradict the
  // combinatorial-determination conjecture; it is surfaced, never swallowed.
  bool counterexample = false;
};

// Each group must be a set of realizations of one intersection lattice
// (checked pairwise; InputError otherwise).  Computes the full analysis per
// member and reports whether nu and the splitting type are constant; mdr is
// reported per member since it is known not to be combinatorial.
std::vector<HarnessGroup> conjecture_harness(
    const std::vector<std::vector<Arrangement>>& groups,
    const AnalyzeOptions& opts = {});

}  // namespace jacplane

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jacplane/jacobian.hpp"

namespace jacplane {

// du Plessis-Wall window for tau given (d, r), with the sharper cap that
// applies once r >= d/2.
struct DpwReport {
  int d = 0, r = 0;
  i64 tau_min = 0;
  i64 tau_max = 0;
  std::optional<i64> stronger_max;  // tau_max - C(2r+2-d, 2), iff 2r >= d
  i64 observed_tau = -1;
  bool within_min = false, within_max = false, within_stronger = true;

  void evaluate(i64 tau);
};

DpwReport tau_bounds(int d, int r);  // d >= 2, 1 <= r <= d-1

enum class CurveClass { Free, NearlyFree, Other, LinesThroughPoint };

struct ClassLabel {
  CurveClass kind = CurveClass::Other;
  i64 nu = 0;
  bool smooth = false;  // tau == 0 annotation

  std::string name() const;  // "free", "nearly_free", ...
};

// Splitting type of the log bundle along a generic line, derived from (d, r).
struct SplittingType {
  int d1 = 0, d2 = 0;  // d1 <= d2, d1 + d2 = d - 1
};

struct NuPrediction {
  i64 value = 0;
  enum Branch { LowRange, HighRange, Overlap } branch = LowRange;
};

// nu from (d, r, tau): (d-1)^2 - r(d-1-r) - tau when 2r < d, and
// ceil(3(d-1)^2/4) - tau when 2r >= d-2; both branches agree on the overlap
// (asserted).
NuPrediction predicted_nu(int d, int r, i64 tau);

// Label from nu alone (no assertions); used where failures must surface as
// reports instead of exceptions.
ClassLabel label_of(const CurveAnalysis& a);

// Label from nu, with the tau-characterization biconditionals asserted
// (tau == tau_max iff free; tau == tau_max - 1 iff nearly free).  Throws
// InternalError on mismatch; degenerate analyses are labelled without
// assertions.
ClassLabel classify(const CurveAnalysis& a);

SplittingType splitting_type(int d, int r);  // r >= 1

// (d-1)^2 - d1 d2 == tau + nu; the generic-splitting accounting identity.
bool splitting_identity_holds(const SplittingType& st, int d, i64 tau, i64 nu);

// When tau is below the lattice-determined threshold, nu is a function of
// (d, tau) alone: ceil(3(d-1)^2/4) - tau.  Absent when the hypothesis fails.
std::optional<i64> prop_terao_nu(int d, i64 tau);  // d >= 4

// Consistency report for the rational-cuspidal characterization at d >= 6:
// tau >= d^2-4d+8 holds iff mdr == 1 (for irreducible curves), and mdr == 1
// forces tau = d^2-3d+2 and the nearly-free class.
struct RccReport {
  bool applicable = false;  // irreducible_hint given, d >= 6
  bool equivalence_ok = true;
  bool tau_formula_ok = true;      // only meaningful when r == 1
  bool nearly_free_ok = true;      // only meaningful when r == 1
  std::optional<bool> mu_equals_tau;
  std::string note;

  bool ok() const { return equivalence_ok && tau_formula_ok && nearly_free_ok; }
};

RccReport prop_rcc_consistency(const CurveAnalysis& a,
                               std::optional<i64> mu_hint,
                               bool irreducible_hint);

// One theorem/structure check, as reported by the CLI.
struct CheckResult {
  std::string name;
  enum Status { Pass, Fail, Skipped } status = Pass;
  std::string detail;
};

// The full battery run on a completed analysis: duality, unimodality, the
// Euler-characteristic identity, the low-degree syzygy dimension count, the
// du Plessis-Wall window, the nu formula, and the free/nearly-free
// biconditionals.  Degenerate analyses get a single "skipped" row.
std::vector<CheckResult> theorem_checks(const CurveAnalysis& a);

bool all_pass(const std::vector<CheckResult>& checks);

}  // namespace jacplane

#pragma once

#include <string>
#include <vector>

#include "jacplane/graded_maps.hpp"

namespace jacplane {

inline constexpr u64 kDefaultSeed = 1;

struct AnalyzeOptions {
  u64 seed = kDefaultSeed;
  // Run the cross-check algorithms (stabilized tau, chi-route n-vector) and
  // require agreement with the algorithms of record.
  bool verify = true;
  // Skip the reducedness test and every validity assertion; raw dimensions
  // only.
  bool allow_non_reduced = false;
  int reduced_trials = 3;
  int max_primes = 6;
};

// Complete invariant record for one curve.
struct CurveAnalysis {
  HomogPoly f;
  int d = 0;   // degree
  int r = 0;   // minimal degree of a Jacobian syzygy
  int T = 0;   // 3d - 6, top degree of N(f)
  i64 tau = 0;
  i64 nu = 0;
  std::vector<i64> ar_dims;         // k = 0 .. 2d-4
  std::vector<i64> n_dims;          // k = 0 .. T (empty for d < 3)
  std::vector<i64> milnor_hilbert;  // k = 0 .. 3d-4
  std::vector<u64> primes_used;
  int escalations = 0;
  bool degenerate = false;  // r == 0 or d <= 2: theorem checks do not apply
  std::string degenerate_reason;
  bool verified = false;  // cross-check algorithms ran and agreed

  i64 ar(i64 k) const;  // 0 outside the stored window
  i64 n(i64 k) const;   // 0 outside [0, T]
};

// Single-field primitives.
i64 ar_dim(const HomogPoly& f, const PrimeField& F, i64 k);
int mdr(const HomogPoly& f, const PrimeField& F);
i64 milnor_hilbert(const HomogPoly& f, const PrimeField& F, i64 k);

// tau(C) from the Euler characteristic of the log bundle evaluated where the
// h^1 and h^2 terms vanish: tau = ar(2d-4) - 3 C(2d-2,2) + C(3d-3,2).
i64 tjurina_chi(const HomogPoly& f, const PrimeField& F);

// Independent route: dim M(f)_k stabilizes at tau once k > 3d-6; iterate
// from k = 3d-5 until two consecutive values agree (cap (d-1)^2 + 1).
i64 tjurina_stable(const HomogPoly& f, const PrimeField& F);

// n(f)_k for k = 0..T by descending saturation: the ideal piece at 3d-5
// anchors the recursion (I)_k = { g : xg, yg, zg in (I)_{k+1} }.
std::vector<i64> n_dims_saturation(const HomogPoly& f, const PrimeField& F);

// n(f)_{d+k} = ar(k+1) + ar(d-5-k) - [3 binom2(k+3) - binom2(d+k+2) + tau].
std::vector<i64> n_dims_chi(const HomogPoly& f, const PrimeField& F, i64 tau);

// max of n_dims; asserts it equals the middle entry (d = 2m) or the two
// middle entries (d = 2m+1).
i64 nu_of(const std::vector<i64>& n_dims, int d);

// Full record under the two-prime agreement protocol.
CurveAnalysis analyze(const HomogPoly& f, const AnalyzeOptions& opts = {});

}  // namespace jacplane

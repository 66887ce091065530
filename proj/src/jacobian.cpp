#include "jacplane/jacobian.hpp"

#include <algorithm>
#include <optional>

namespace jacplane {

i64 CurveAnalysis::ar(i64 k) const {
  if (k < 0 || k >= i64(ar_dims.size())) return 0;
  return ar_dims[std::size_t(k)];
}

i64 CurveAnalysis::n(i64 k) const {
  if (k < 0 || k >= i64(n_dims.size())) return 0;
  return n_dims[std::size_t(k)];
}

i64 ar_dim(const HomogPoly& f, const PrimeField& F, i64 k) {
  if (k < 0) return 0;
  const GradedMap m = jacobian_relation_map(f, F, int(k));
  return i64(m.matrix.cols()) - i64(m.matrix.rank());
}

int mdr(const HomogPoly& f, const PrimeField& F) {
  const int d = f.degree();
  for (int k = 0; k <= std::max(d - 1, 0); ++k)
    if (ar_dim(f, F, k) > 0) return k;
  throw InternalError("no Jacobian syzygy up to degree d-1 (Koszul floor)");
}

i64 milnor_hilbert(const HomogPoly& f, const PrimeField& F, i64 k) {
  if (k < 0) throw InputError("milnor_hilbert needs k >= 0");
  const int cap = std::max(4 * f.degree(),
                           (f.degree() - 1) * (f.degree() - 1) + 2);
  const GradedMap m = ideal_piece_matrix(f, F, int(k), cap);
  return graded_dim(k) - i64(m.matrix.rank());
}

namespace {

i64 tau_from_ar(int d, i64 ar_top) {
  // chi(T<C>(2d-5)) has vanishing h^1 and h^2, so it equals ar(f)_{2d-4}.
  return ar_top - 3 * binom2(2 * d - 2) + binom2(3 * d - 3);
}

i64 stable_from(const HomogPoly& f, const PrimeField& F, int d,
                const std::vector<i64>& milnor) {
  const i64 cap = i64(d - 1) * (d - 1) + 1;
  std::optional<i64> prev;
  for (i64 k = 3 * d - 5; k <= cap; ++k) {
    const i64 v = k < i64(milnor.size()) ? milnor[std::size_t(k)]
                                         : milnor_hilbert(f, F, k);
    if (prev && *prev == v) return v;
    prev = v;
  }
  throw InternalError(
      "Milnor algebra dimensions did not stabilize below the cap "
      "(bad prime or non-reduced input)");
}

// n(f)_k for k = 0..T given dim M(f)_k; anchored at (I)_{3d-5} = (J)_{3d-5}.
std::vector<i64> descent_from(const HomogPoly& f, const PrimeField& F, int d,
                              const std::vector<i64>& milnor) {
  if (d < 3) return {};
  const int T = 3 * d - 6;
  const int k0 = 3 * d - 5;
  std::vector<i64> n(std::size_t(T + 1), 0);

  // Rows of W span the annihilator of (I_f)_{k+1} in the dual of S_{k+1}.
  ExactMatrix W = ideal_piece_matrix(f, F, k0).matrix.left_annihilator();
  for (int k = T; k >= 0; --k) {
    const std::size_t cols = std::size_t(graded_dim(k));
    const std::size_t w = W.rows();
    ExactMatrix A(F, 3 * w, cols);
    for (int var = 0; var < 3; ++var)
      for (std::size_t j = 0; j < cols; ++j) {
        const std::size_t src = std::size_t(shifted_index(k, int(j), var));
        for (std::size_t i = 0; i < w; ++i)
          A.set(std::size_t(var) * w + i, j, W.at(i, src));
      }
    // ker A = (I_f)_k, and the echelon rows span its annihilator.
    ExactMatrix echelon = A.row_echelon();
    const i64 dim_I = i64(cols) - i64(echelon.rows());
    const i64 dim_J = graded_dim(k) - milnor[std::size_t(k)];
    const i64 nk = dim_I - dim_J;
    if (nk < 0)
      throw InternalError("negative local cohomology dimension at degree " +
                          std::to_string(k) + " (bad prime?)");
    n[std::size_t(k)] = nk;
    W = std::move(echelon);
  }
  return n;
}

std::vector<i64> milnor_vector(const HomogPoly& f, const PrimeField& F,
                               int d, i64 top) {
  std::vector<i64> mil(std::size_t(top + 1), 0);
  for (i64 k = 0; k <= top; ++k) mil[std::size_t(k)] = milnor_hilbert(f, F, k);
  return mil;
}

std::vector<i64> chi_from(int d, i64 tau, const std::vector<i64>& ar_dims) {
  if (d < 3) return {};
  const int T = 3 * d - 6;
  auto ar = [&](i64 k) -> i64 {
    return (k < 0 || k >= i64(ar_dims.size())) ? 0 : ar_dims[std::size_t(k)];
  };
  std::vector<i64> n(std::size_t(T + 1), 0);
  for (i64 j = 0; j <= T; ++j) {
    const i64 k = j - d;
    const i64 chi = 3 * binom2(k + 3) - binom2(d + k + 2) + tau;
    const i64 v = ar(k + 1) + ar(d - 5 - k) - chi;
    if (v < 0)
      throw InternalError("chi route produced a negative n(f)_" +
                          std::to_string(j) + " (inconsistent tau or prime)");
    n[std::size_t(j)] = v;
  }
  return n;
}

}  // namespace

i64 tjurina_chi(const HomogPoly& f, const PrimeField& F) {
  const int d = f.degree();
  if (d < 2) throw InputError("tjurina_chi needs degree >= 2");
  return tau_from_ar(d, ar_dim(f, F, 2 * d - 4));
}

i64 tjurina_stable(const HomogPoly& f, const PrimeField& F) {
  const int d = f.degree();
  if (d < 2) throw InputError("tjurina_stable needs degree >= 2");
  return stable_from(f, F, d, {});
}

std::vector<i64> n_dims_saturation(const HomogPoly& f, const PrimeField& F) {
  const int d = f.degree();
  if (d < 3) return {};
  return descent_from(f, F, d, milnor_vector(f, F, d, 3 * d - 6));
}

std::vector<i64> n_dims_chi(const HomogPoly& f, const PrimeField& F,
                            i64 tau) {
  const int d = f.degree();
  if (d < 3) return {};
  std::vector<i64> ar_dims(std::size_t(2 * d - 3), 0);
  for (i64 k = 0; k <= 2 * d - 4; ++k) ar_dims[std::size_t(k)] = ar_dim(f, F, k);
  return chi_from(d, tau, ar_dims);
}

i64 nu_of(const std::vector<i64>& n_dims, int d) {
  if (n_dims.empty()) return 0;
  const i64 nu = *std::max_element(n_dims.begin(), n_dims.end());
  auto at = [&](i64 k) { return n_dims[std::size_t(k)]; };
  if (d % 2 == 0) {
    const int m = d / 2;
    if (at(3 * m - 3) != nu)
      throw InternalError("nu != n(f)_{3m-3} for even degree");
  } else {
    const int m = (d - 1) / 2;
    if (at(3 * m - 2) != nu || at(3 * m - 1) != nu)
      throw InternalError("nu != n(f)_{3m-2} = n(f)_{3m-1} for odd degree");
  }
  return nu;
}

namespace {

struct PrimeRecord {
  int r = 0;
  i64 tau = 0, nu = 0;
  std::vector<i64> ar_dims, milnor, n_dims;

  friend bool operator==(const PrimeRecord&, const PrimeRecord&) = default;
};

PrimeRecord single_prime_record(const HomogPoly& f, const PrimeField& F,
                                const AnalyzeOptions& opts) {
  const int d = f.degree();
  const int T = 3 * d - 6;
  // The cross-check routes assume a reduced curve (stabilization at tau,
  // vanishing of N(f) above T); with the override we report raw dimensions.
  const bool verify = opts.verify && !opts.allow_non_reduced;
  PrimeRecord rec;

  const i64 ar_top = std::max<i64>(2 * d - 4, d - 1);
  std::vector<i64> ar_full(std::size_t(ar_top + 1), 0);
  for (i64 k = 0; k <= ar_top; ++k) ar_full[std::size_t(k)] = ar_dim(f, F, k);

  rec.ar_dims.assign(ar_full.begin(), ar_full.begin() + (2 * d - 4) + 1);
  rec.r = -1;
  for (i64 k = 0; k <= ar_top; ++k)
    if (ar_full[std::size_t(k)] > 0) {
      rec.r = int(k);
      break;
    }
  if (rec.r < 0)
    throw InternalError("no Jacobian syzygy up to degree d-1 (Koszul floor)");

  rec.milnor = milnor_vector(f, F, d, 3 * d - 4);
  rec.tau = tau_from_ar(d, ar_full[std::size_t(2 * d - 4)]);
  if (rec.tau < 0) throw InternalError("negative tau (bad prime?)");

  if (verify) {
    const i64 tau2 = stable_from(f, F, d, rec.milnor);
    if (tau2 != rec.tau)
      throw InternalError("tau cross-check failed: chi route " +
                          std::to_string(rec.tau) + " vs stabilized " +
                          std::to_string(tau2));
  }

  rec.n_dims = descent_from(f, F, d, rec.milnor);
  if (verify && d >= 3) {
    const std::vector<i64> n2 = chi_from(d, rec.tau, ar_full);
    if (n2 != rec.n_dims)
      throw InternalError("n(f) cross-check failed between saturation and "
                          "chi routes");
  }

  if (!opts.allow_non_reduced && d >= 3) {
    for (int k = 0; k <= T; ++k)
      if (rec.n_dims[std::size_t(k)] != rec.n_dims[std::size_t(T - k)])
        throw InternalError("n(f) duality violated at degree " +
                            std::to_string(k));
    for (int k = 0; k + 1 <= T; ++k) {
      const bool rising = k < T / 2;
      const i64 a = rec.n_dims[std::size_t(k)], b = rec.n_dims[std::size_t(k + 1)];
      if (rising ? a > b : a < b)
        throw InternalError("n(f) unimodality violated at degree " +
                            std::to_string(k));
    }
  }

  rec.nu = rec.n_dims.empty()
               ? 0
               : (opts.allow_non_reduced
                      ? *std::max_element(rec.n_dims.begin(), rec.n_dims.end())
                      : nu_of(rec.n_dims, d));
  return rec;
}

}  // namespace

CurveAnalysis analyze(const HomogPoly& f, const AnalyzeOptions& opts) {
  const int d = f.degree();
  if (f.is_zero()) throw InputError("cannot analyze the zero polynomial");
  if (d < 2) throw InputError("analysis needs a curve of degree >= 2");

  std::mt19937_64 rng(opts.seed);
  std::vector<PrimeRecord> records;
  std::vector<u64> primes;
  bool reduced_done = false;
  int attempts = 0;
  std::string last_error;

  while (attempts < opts.max_primes) {
    u64 p = 0;
    for (;;) {
      p = random_prime(rng);
      if (std::find(primes.begin(), primes.end(), p) != primes.end()) continue;
      if (f.compatible_with(PrimeField(p))) break;
    }
    const PrimeField F(p);
    ++attempts;

    if (!reduced_done && !opts.allow_non_reduced) {
      if (!reduced_check(f, F, rng, opts.reduced_trials))
        throw InputError(
            "input curve is not reduced (a random line restriction has a "
            "repeated root); pass the non-reduced override to force raw "
            "dimensions");
      reduced_done = true;
    }

    try {
      PrimeRecord rec = single_prime_record(f, F, opts);
      for (std::size_t i = 0; i < records.size(); ++i) {
        if (records[i] == rec) {
          CurveAnalysis out;
          out.f = f;
          out.d = d;
          out.T = 3 * d - 6;
          out.r = rec.r;
          out.tau = rec.tau;
          out.nu = rec.nu;
          out.ar_dims = std::move(rec.ar_dims);
          out.milnor_hilbert = std::move(rec.milnor);
          out.n_dims = std::move(rec.n_dims);
          out.primes_used = {primes[i], p};
          out.escalations = attempts - 2;
          out.verified = opts.verify && !opts.allow_non_reduced;
          if (out.r == 0) {
            out.degenerate = true;
            out.degenerate_reason =
                "mdr = 0: union of lines through one point";
          } else if (d <= 2) {
            out.degenerate = true;
            out.degenerate_reason = "degree <= 2";
          }
          return out;
        }
      }
      records.push_back(std::move(rec));
      primes.push_back(p);
    } catch (const InternalError& e) {
      last_error = e.what();  // bad-prime artifact: try a fresh prime
    }
  }
  throw InternalError(
      "no two primes agreed after " + std::to_string(opts.max_primes) +
      " attempts" + (last_error.empty() ? "" : "; last failure: " + last_error));
}

}  // namespace jacplane

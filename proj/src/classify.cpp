#include "jacplane/classify.hpp"

#include <algorithm>

namespace jacplane {

namespace {

i64 ceil_three_quarters_sq(int d) {
  // ceil(3(d-1)^2 / 4)
  const i64 n = 3 * i64(d - 1) * (d - 1);
  return (n + 3) / 4;
}

i64 binom_std(i64 n) { return n < 2 ? 0 : n * (n - 1) / 2; }

}  // namespace

void DpwReport::evaluate(i64 tau) {
  observed_tau = tau;
  within_min = tau >= tau_min;
  within_max = tau <= tau_max;
  within_stronger = !stronger_max || tau <= *stronger_max;
}

DpwReport tau_bounds(int d, int r) {
  if (d < 2) throw InputError("tau_bounds needs d >= 2");
  if (r == 0)
    throw InputError(
        "tau_bounds does not apply to mdr = 0 (lines through a point); use "
        "the degenerate path");
  if (r < 1 || r > d - 1)
    throw InputError("tau_bounds needs 1 <= r <= d-1");
  DpwReport rep;
  rep.d = d;
  rep.r = r;
  rep.tau_min = i64(d - 1) * (d - r - 1);
  rep.tau_max = i64(d - 1) * (d - 1) - i64(r) * (d - 1 - r);
  if (2 * r >= d)
    rep.stronger_max = rep.tau_max - binom_std(2 * r + 2 - d);
  return rep;
}

std::string ClassLabel::name() const {
  switch (kind) {
    case CurveClass::Free: return "free";
    case CurveClass::NearlyFree: return "nearly_free";
    case CurveClass::LinesThroughPoint: return "lines_through_point";
    case CurveClass::Other: break;
  }
  return "other";
}

NuPrediction predicted_nu(int d, int r, i64 tau) {
  if (d < 3) throw InputError("predicted_nu needs d >= 3");
  if (r < 1) throw InputError("predicted_nu needs r >= 1");
  const bool low = 2 * r < d;        // r < d/2
  const bool high = 2 * r >= d - 2;  // r >= (d-2)/2
  NuPrediction out;
  const i64 v1 = i64(d - 1) * (d - 1) - i64(r) * (d - 1 - r) - tau;
  const i64 v2 = ceil_three_quarters_sq(d) - tau;
  if (low && high) {
    if (v1 != v2)
      throw InternalError("nu formula branches disagree on the overlap");
    out.value = v1;
    out.branch = NuPrediction::Overlap;
  } else if (low) {
    out.value = v1;
    out.branch = NuPrediction::LowRange;
  } else {
    out.value = v2;
    out.branch = NuPrediction::HighRange;
  }
  return out;
}

ClassLabel label_of(const CurveAnalysis& a) {
  ClassLabel label;
  label.nu = a.nu;
  label.smooth = a.tau == 0;
  if (a.r == 0) {
    label.kind = CurveClass::LinesThroughPoint;
    return label;
  }
  if (a.degenerate) {
    label.kind = CurveClass::Other;
    return label;
  }
  label.kind = a.nu == 0   ? CurveClass::Free
               : a.nu == 1 ? CurveClass::NearlyFree
                           : CurveClass::Other;
  return label;
}

ClassLabel classify(const CurveAnalysis& a) {
  const ClassLabel label = label_of(a);
  if (a.r == 0 || a.degenerate) return label;

  DpwReport dpw = tau_bounds(a.d, a.r);
  dpw.evaluate(a.tau);
  const bool tau_at_max = a.tau == dpw.tau_max;
  const bool tau_at_max_m1 = a.tau == dpw.tau_max - 1;
  if (tau_at_max != (a.nu == 0))
    throw InternalError("free characterization mismatch: tau == tau_max is " +
                        std::string(tau_at_max ? "true" : "false") +
                        " but nu = " + std::to_string(a.nu));
  if (tau_at_max && !(2 * a.r < a.d))
    throw InternalError("free curve with r >= d/2");
  if (tau_at_max_m1 != (a.nu == 1))
    throw InternalError(
        "nearly-free characterization mismatch: tau == tau_max - 1 is " +
        std::string(tau_at_max_m1 ? "true" : "false") +
        " but nu = " + std::to_string(a.nu));
  if (tau_at_max_m1 && !(2 * a.r <= a.d))
    throw InternalError("nearly free curve with r > d/2");
  return label;
}

SplittingType splitting_type(int d, int r) {
  if (r < 1) throw InputError("splitting_type needs r >= 1");
  SplittingType st;
  st.d1 = 2 * r < d - 2 ? r : (d - 1) / 2;
  st.d2 = d - 1 - st.d1;
  return st;
}

bool splitting_identity_holds(const SplittingType& st, int d, i64 tau,
                              i64 nu) {
  return i64(d - 1) * (d - 1) - i64(st.d1) * st.d2 == tau + nu;
}

std::optional<i64> prop_terao_nu(int d, i64 tau) {
  if (d < 4) throw InputError("prop_terao_nu needs d >= 4");
  const i64 m = d / 2;
  const i64 threshold =
      d % 2 == 0 ? (m + 1) * (2 * m - 1) : 2 * m * (m + 1);
  if (tau >= threshold) return std::nullopt;
  return ceil_three_quarters_sq(d) - tau;
}

RccReport prop_rcc_consistency(const CurveAnalysis& a,
                               std::optional<i64> mu_hint,
                               bool irreducible_hint) {
  if (a.d < 6) throw InputError("prop_rcc_consistency needs d >= 6");
  RccReport rep;
  if (!irreducible_hint) {
    rep.applicable = false;
    rep.note = "irreducibility not asserted by the caller; equivalence not "
               "checked";
    if (mu_hint) rep.mu_equals_tau = (*mu_hint == a.tau);
    return rep;
  }
  rep.applicable = true;
  const i64 threshold = i64(a.d) * a.d - 4 * a.d + 8;
  const bool big_tau = a.tau >= threshold;
  const bool r_one = a.r == 1;
  rep.equivalence_ok = big_tau == r_one;
  if (!rep.equivalence_ok)
    rep.note = "tau >= d^2-4d+8 is " + std::string(big_tau ? "true" : "false") +
               " but mdr = " + std::to_string(a.r);
  if (r_one) {
    rep.tau_formula_ok = a.tau == i64(a.d) * a.d - 3 * a.d + 2;
    rep.nearly_free_ok = a.nu == 1;
  }
  if (mu_hint) rep.mu_equals_tau = (*mu_hint == a.tau);
  return rep;
}

namespace {

void push(std::vector<CheckResult>& v, const std::string& name, bool ok,
          std::string detail = "") {
  v.push_back({name, ok ? CheckResult::Pass : CheckResult::Fail,
               std::move(detail)});
}

}  // namespace

std::vector<CheckResult> theorem_checks(const CurveAnalysis& a) {
  std::vector<CheckResult> out;
  if (a.degenerate) {
    out.push_back({"theorem_checks", CheckResult::Skipped,
                   "degenerate input: " + a.degenerate_reason});
    return out;
  }

  const int d = a.d, T = a.T;

  bool dual = true;
  for (int k = 0; k <= T; ++k)
    dual &= a.n(k) == a.n(T - k);
  push(out, "duality", dual);

  bool unimodal = true;
  for (int k = 0; k + 1 <= T; ++k) {
    if (k < T / 2)
      unimodal &= a.n(k) <= a.n(k + 1);
    else
      unimodal &= a.n(k) >= a.n(k + 1);
  }
  push(out, "lefschetz_unimodality", unimodal);

  bool euler = true;
  for (i64 k = -d - 1; k <= 2 * d - 5; ++k) {
    const i64 lhs = a.ar(k + 1) - a.n(d + k) + a.ar(d - 5 - k);
    const i64 rhs = 3 * binom2(k + 3) - binom2(d + k + 2) + a.tau;
    euler &= lhs == rhs;
  }
  push(out, "euler_characteristic_identity", euler);

  bool st_count = true;
  for (i64 k = 0; k + a.r < d - 1 && k <= 2 * d - 4; ++k)
    st_count &= a.ar(k) == graded_dim(k - a.r);
  push(out, "low_degree_syzygy_count", st_count);

  push(out, "mdr_bound", a.r <= d - 1,
       "mdr = " + std::to_string(a.r) + ", d = " + std::to_string(d));

  DpwReport dpw = tau_bounds(d, a.r);
  dpw.evaluate(a.tau);
  push(out, "dpw_tau_min", dpw.within_min,
       std::to_string(dpw.tau_min) + " <= " + std::to_string(a.tau));
  push(out, "dpw_tau_max", dpw.within_max,
       std::to_string(a.tau) + " <= " + std::to_string(dpw.tau_max));
  if (dpw.stronger_max)
    push(out, "dpw_stronger_max", dpw.within_stronger,
         std::to_string(a.tau) + " <= " + std::to_string(*dpw.stronger_max));

  if (d >= 3) {
    const NuPrediction pred = predicted_nu(d, a.r, a.tau);
    push(out, "nu_formula", pred.value == a.nu,
         "predicted " + std::to_string(pred.value) + ", computed " +
             std::to_string(a.nu));
  }

  const bool tau_at_max = a.tau == dpw.tau_max;
  push(out, "free_iff_tau_max",
       tau_at_max == (a.nu == 0) && (!tau_at_max || 2 * a.r < d));
  const bool tau_at_max_m1 = a.tau == dpw.tau_max - 1;
  push(out, "nearly_free_iff_tau_max_minus_1",
       tau_at_max_m1 == (a.nu == 1) && (!tau_at_max_m1 || 2 * a.r <= d));

  const SplittingType st = splitting_type(d, a.r);
  push(out, "splitting_identity",
       splitting_identity_holds(st, d, a.tau, a.nu),
       "(d-1)^2 - d1*d2 = " +
           std::to_string(i64(d - 1) * (d - 1) - i64(st.d1) * st.d2) +
           ", tau + nu = " + std::to_string(a.tau + a.nu));

  if (d >= 4) {
    if (auto nu = prop_terao_nu(d, a.tau))
      push(out, "low_tau_nu_formula", *nu == a.nu,
           "predicted " + std::to_string(*nu));
  }
  return out;
}

bool all_pass(const std::vector<CheckResult>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) {
    return c.status != CheckResult::Fail;
  });
}

}  // namespace jacplane

#include "jacplane/report.hpp"

#include <chrono>
#include <sstream>

#include "jacplane/parser.hpp"

namespace jacplane {

using nlohmann::json;

bool AnalysisReport::any_check_failed() const {
  return !all_pass(checks) ||
         (rcc && rcc->applicable && !rcc->ok());
}

AnalysisReport build_report(const HomogPoly& f, const AnalyzeOptions& opts,
                            std::optional<i64> mu_hint,
                            bool irreducible_hint) {
  const auto t0 = std::chrono::steady_clock::now();
  AnalysisReport rep;
  rep.seed = opts.seed;
  rep.mu_hint = mu_hint;
  rep.irreducible_hint = irreducible_hint;
  rep.analysis = analyze(f, opts);
  rep.label = label_of(rep.analysis);
  if (!rep.analysis.degenerate && rep.analysis.r >= 1) {
    DpwReport dpw = tau_bounds(rep.analysis.d, rep.analysis.r);
    dpw.evaluate(rep.analysis.tau);
    rep.dpw = dpw;
    rep.split = splitting_type(rep.analysis.d, rep.analysis.r);
  }
  rep.checks = theorem_checks(rep.analysis);
  if (rep.analysis.d >= 6 && (irreducible_hint || mu_hint))
    rep.rcc = prop_rcc_consistency(rep.analysis, mu_hint, irreducible_hint);
  rep.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
  return rep;
}

namespace {

json vec_to_json(const std::vector<i64>& v) { return json(v); }

const char* status_name(CheckResult::Status s) {
  switch (s) {
    case CheckResult::Pass: return "pass";
    case CheckResult::Fail: return "fail";
    case CheckResult::Skipped: return "skipped";
  }
  return "fail";
}

CheckResult::Status status_from(const std::string& s) {
  if (s == "pass") return CheckResult::Pass;
  if (s == "skipped") return CheckResult::Skipped;
  return CheckResult::Fail;
}

}  // namespace

json report_to_json(const AnalysisReport& r, bool include_timing) {
  const CurveAnalysis& a = r.analysis;
  json j;
  j["input"] = a.f.to_string();
  j["d"] = a.d;
  j["mdr"] = a.r;
  j["T"] = a.T;
  j["tau"] = a.tau;
  j["nu"] = a.nu;
  j["ar_dims"] = vec_to_json(a.ar_dims);
  j["n_dims"] = vec_to_json(a.n_dims);
  j["milnor_hilbert"] = vec_to_json(a.milnor_hilbert);
  j["class"] = r.label.name();
  j["smooth"] = r.label.smooth;
  j["degenerate"] = a.degenerate;
  if (a.degenerate) j["degenerate_reason"] = a.degenerate_reason;
  j["verified"] = a.verified;
  if (r.split)
    j["splitting_type"] = json::array({r.split->d1, r.split->d2});
  else
    j["splitting_type"] = nullptr;
  if (r.dpw) {
    json d;
    d["d"] = r.dpw->d;
    d["r"] = r.dpw->r;
    d["tau_min"] = r.dpw->tau_min;
    d["tau_max"] = r.dpw->tau_max;
    d["stronger_max"] =
        r.dpw->stronger_max ? json(*r.dpw->stronger_max) : json(nullptr);
    d["observed_tau"] = r.dpw->observed_tau;
    d["within_min"] = r.dpw->within_min;
    d["within_max"] = r.dpw->within_max;
    d["within_stronger"] = r.dpw->within_stronger;
    j["dpw"] = d;
  } else {
    j["dpw"] = nullptr;
  }
  if (r.label.kind == CurveClass::Free && r.split)
    j["exponents"] = json::array({r.split->d1, r.split->d2});
  json checks = json::array();
  for (const auto& c : r.checks) {
    json cj;
    cj["name"] = c.name;
    cj["status"] = status_name(c.status);
    if (!c.detail.empty()) cj["detail"] = c.detail;
    checks.push_back(cj);
  }
  j["checks"] = checks;
  if (r.rcc) {
    json rc;
    rc["applicable"] = r.rcc->applicable;
    rc["equivalence_ok"] = r.rcc->equivalence_ok;
    rc["tau_formula_ok"] = r.rcc->tau_formula_ok;
    rc["nearly_free_ok"] = r.rcc->nearly_free_ok;
    rc["mu_equals_tau"] =
        r.rcc->mu_equals_tau ? json(*r.rcc->mu_equals_tau) : json(nullptr);
    if (!r.rcc->note.empty()) rc["note"] = r.rcc->note;
    j["rcc"] = rc;
  }
  if (r.mu_hint) j["mu"] = *r.mu_hint;
  if (r.irreducible_hint) j["irreducible"] = true;
  j["primes"] = a.primes_used;
  j["seed"] = r.seed;
  j["escalations"] = a.escalations;
  if (include_timing) j["time_ms"] = r.wall_ms;
  return j;
}

AnalysisReport report_from_json(const json& j) {
  AnalysisReport r;
  CurveAnalysis& a = r.analysis;
  a.f = parse_poly(j.at("input").get<std::string>());
  a.d = j.at("d").get<int>();
  a.r = j.at("mdr").get<int>();
  a.T = j.at("T").get<int>();
  a.tau = j.at("tau").get<i64>();
  a.nu = j.at("nu").get<i64>();
  a.ar_dims = j.at("ar_dims").get<std::vector<i64>>();
  a.n_dims = j.at("n_dims").get<std::vector<i64>>();
  a.milnor_hilbert = j.at("milnor_hilbert").get<std::vector<i64>>();
  a.degenerate = j.at("degenerate").get<bool>();
  if (j.contains("degenerate_reason"))
    a.degenerate_reason = j.at("degenerate_reason").get<std::string>();
  a.verified = j.at("verified").get<bool>();
  a.primes_used = j.at("primes").get<std::vector<u64>>();
  a.escalations = j.at("escalations").get<int>();
  r.label = label_of(a);
  if (!j.at("splitting_type").is_null()) {
    SplittingType st;
    st.d1 = j.at("splitting_type")[0].get<int>();
    st.d2 = j.at("splitting_type")[1].get<int>();
    r.split = st;
  }
  if (!j.at("dpw").is_null()) {
    const json& d = j.at("dpw");
    DpwReport dpw;
    dpw.d = d.at("d").get<int>();
    dpw.r = d.at("r").get<int>();
    dpw.tau_min = d.at("tau_min").get<i64>();
    dpw.tau_max = d.at("tau_max").get<i64>();
    if (!d.at("stronger_max").is_null())
      dpw.stronger_max = d.at("stronger_max").get<i64>();
    dpw.observed_tau = d.at("observed_tau").get<i64>();
    dpw.within_min = d.at("within_min").get<bool>();
    dpw.within_max = d.at("within_max").get<bool>();
    dpw.within_stronger = d.at("within_stronger").get<bool>();
    r.dpw = dpw;
  }
  for (const auto& cj : j.at("checks")) {
    CheckResult c;
    c.name = cj.at("name").get<std::string>();
    c.status = status_from(cj.at("status").get<std::string>());
    if (cj.contains("detail")) c.detail = cj.at("detail").get<std::string>();
    r.checks.push_back(c);
  }
  if (j.contains("rcc")) {
    RccReport rc;
    rc.applicable = j["rcc"].at("applicable").get<bool>();
    rc.equivalence_ok = j["rcc"].at("equivalence_ok").get<bool>();
    rc.tau_formula_ok = j["rcc"].at("tau_formula_ok").get<bool>();
    rc.nearly_free_ok = j["rcc"].at("nearly_free_ok").get<bool>();
    if (!j["rcc"].at("mu_equals_tau").is_null())
      rc.mu_equals_tau = j["rcc"].at("mu_equals_tau").get<bool>();
    if (j["rcc"].contains("note"))
      rc.note = j["rcc"].at("note").get<std::string>();
    r.rcc = rc;
  }
  if (j.contains("mu")) r.mu_hint = j.at("mu").get<i64>();
  if (j.contains("irreducible")) r.irreducible_hint = true;
  r.seed = j.at("seed").get<u64>();
  return r;
}

std::string report_to_table(const AnalysisReport& r) {
  const CurveAnalysis& a = r.analysis;
  std::ostringstream os;
  auto row = [&os](const std::string& k, const std::string& v) {
    os << "  " << k;
    for (std::size_t i = k.size(); i < 18; ++i) os << ' ';
    os << v << "\n";
  };
  auto vec = [](const std::vector<i64>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i)
      s += (i ? " " : "") + std::to_string(v[i]);
    return s + "]";
  };
  os << "curve " << a.f.to_string() << "\n";
  row("d", std::to_string(a.d));
  row("mdr", std::to_string(a.r));
  row("tau", std::to_string(a.tau));
  row("nu", std::to_string(a.nu));
  row("T", std::to_string(a.T));
  row("class", r.label.name() + (r.label.smooth ? " (smooth)" : ""));
  if (a.degenerate) row("degenerate", a.degenerate_reason);
  row("ar_dims", vec(a.ar_dims));
  row("n_dims", vec(a.n_dims));
  row("milnor", vec(a.milnor_hilbert));
  if (r.split)
    row("splitting_type",
        "(" + std::to_string(r.split->d1) + ", " + std::to_string(r.split->d2) + ")");
  if (r.dpw) {
    row("dpw", std::to_string(r.dpw->tau_min) + " <= tau <= " +
                   std::to_string(r.dpw->tau_max) +
                   (r.dpw->stronger_max
                        ? " (stronger: " + std::to_string(*r.dpw->stronger_max) + ")"
                        : ""));
  }
  std::string primes;
  for (std::size_t i = 0; i < a.primes_used.size(); ++i)
    primes += (i ? ", " : "") + std::to_string(a.primes_used[i]);
  row("primes", primes);
  row("time", std::to_string(r.wall_ms) + " ms");
  int failed = 0, skipped = 0;
  for (const auto& c : r.checks) {
    if (c.status == CheckResult::Fail) ++failed;
    if (c.status == CheckResult::Skipped) ++skipped;
  }
  row("checks", std::to_string(r.checks.size() - std::size_t(failed) -
                               std::size_t(skipped)) +
                    " pass, " + std::to_string(failed) + " fail, " +
                    std::to_string(skipped) + " skipped");
  for (const auto& c : r.checks)
    if (c.status == CheckResult::Fail)
      os << "  FAILED CHECK " << c.name << (c.detail.empty() ? "" : ": " + c.detail)
         << "\n";
  if (r.rcc && r.rcc->applicable)
    row("rcc_consistency", r.rcc->ok() ? "ok" : ("FAILED " + r.rcc->note));
  if (r.rcc && r.rcc->mu_equals_tau)
    row("mu == tau", *r.rcc->mu_equals_tau ? "yes" : "no");
  return os.str();
}

const char* report_schema_text() {
  // Kept byte-identical with schema/analysis_report.schema.json (tested).
  static const char* text = R"JSON({
  "$schema": "http://json-schema.org/draft-07/schema#",
  "title": "jacplane analysis report",
  "type": "object",
  "required": ["input", "d", "mdr", "T", "tau", "nu", "ar_dims", "n_dims",
               "milnor_hilbert", "class", "smooth", "degenerate", "verified",
               "splitting_type", "dpw", "checks", "primes", "seed",
               "escalations"],
  "properties": {
    "input": {"type": "string"},
    "d": {"type": "integer", "minimum": 2},
    "mdr": {"type": "integer", "minimum": 0},
    "T": {"type": "integer"},
    "tau": {"type": "integer", "minimum": 0},
    "nu": {"type": "integer", "minimum": 0},
    "ar_dims": {"type": "array", "items": {"type": "integer", "minimum": 0}},
    "n_dims": {"type": "array", "items": {"type": "integer", "minimum": 0}},
    "milnor_hilbert": {"type": "array", "items": {"type": "integer", "minimum": 0}},
    "class": {"enum": ["free", "nearly_free", "other", "lines_through_point"]},
    "smooth": {"type": "boolean"},
    "degenerate": {"type": "boolean"},
    "degenerate_reason": {"type": "string"},
    "verified": {"type": "boolean"},
    "splitting_type": {
      "type": ["array", "null"],
      "items": {"type": "integer"},
      "minItems": 2,
      "maxItems": 2
    },
    "dpw": {
      "type": ["object", "null"],
      "required": ["d", "r", "tau_min", "tau_max", "stronger_max",
                   "observed_tau", "within_min", "within_max",
                   "within_stronger"],
      "properties": {
        "d": {"type": "integer"},
        "r": {"type": "integer"},
        "tau_min": {"type": "integer"},
        "tau_max": {"type": "integer"},
        "stronger_max": {"type": ["integer", "null"]},
        "observed_tau": {"type": "integer"},
        "within_min": {"type": "boolean"},
        "within_max": {"type": "boolean"},
        "within_stronger": {"type": "boolean"}
      },
      "additionalProperties": false
    },
    "exponents": {
      "type": "array",
      "items": {"type": "integer"},
      "minItems": 2,
      "maxItems": 2
    },
    "checks": {
      "type": "array",
      "items": {
        "type": "object",
        "required": ["name", "status"],
        "properties": {
          "name": {"type": "string"},
          "status": {"enum": ["pass", "fail", "skipped"]},
          "detail": {"type": "string"}
        },
        "additionalProperties": false
      }
    },
    "rcc": {
      "type": "object",
      "required": ["applicable", "equivalence_ok", "tau_formula_ok",
                   "nearly_free_ok", "mu_equals_tau"],
      "properties": {
        "applicable": {"type": "boolean"},
        "equivalence_ok": {"type": "boolean"},
        "tau_formula_ok": {"type": "boolean"},
        "nearly_free_ok": {"type": "boolean"},
        "mu_equals_tau": {"type": ["boolean", "null"]},
        "note": {"type": "string"}
      },
      "additionalProperties": false
    },
    "mu": {"type": "integer"},
    "irreducible": {"type": "boolean"},
    "primes": {"type": "array", "items": {"type": "integer", "minimum": 2}},
    "seed": {"type": "integer"},
    "escalations": {"type": "integer", "minimum": 0},
    "time_ms": {"type": "number"}
  },
  "additionalProperties": false
}
)JSON";
  return text;
}

}  // namespace jacplane

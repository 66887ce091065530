#include "jacplane/atlas.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace jacplane {

namespace {

using i128 = __int128;

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

i64 narrow(i128 v) {
  if (v > i128(INT64_MAX) || v < i128(INT64_MIN))
    throw InputError("arrangement coordinates overflow 64 bits");
  return i64(v);
}

// Primitive integer representative with the first nonzero entry positive.
std::array<i64, 3> normalize_point(i128 x, i128 y, i128 z) {
  i128 g = gcd128(gcd128(x, y), z);
  if (g == 0) throw InternalError("zero cross product for distinct lines");
  x /= g;
  y /= g;
  z /= g;
  i128 lead = x ? x : (y ? y : z);
  if (lead < 0) {
    x = -x;
    y = -y;
    z = -z;
  }
  return {narrow(x), narrow(y), narrow(z)};
}

bool proportional(const std::array<i64, 3>& u, const std::array<i64, 3>& v) {
  return i128(u[0]) * v[1] == i128(u[1]) * v[0] &&
         i128(u[0]) * v[2] == i128(u[2]) * v[0] &&
         i128(u[1]) * v[2] == i128(u[2]) * v[1];
}

}  // namespace

Arrangement make_arrangement(std::vector<std::array<i64, 3>> lines) {
  constexpr i64 kCoeffCap = (i64(1) << 31) - 1;  // keeps cross products exact
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto& l = lines[i];
    if (l[0] == 0 && l[1] == 0 && l[2] == 0)
      throw InputError("line " + std::to_string(i) + " is the zero triple");
    for (i64 c : l)
      if (c > kCoeffCap || c < -kCoeffCap)
        throw InputError("line " + std::to_string(i) +
                         ": coefficients must fit in 31 bits");
  }
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j)
      if (proportional(lines[i], lines[j]))
        throw InputError("lines " + std::to_string(i) + " and " +
                         std::to_string(j) +
                         " are proportional (non-reduced arrangement)");
  return Arrangement{std::move(lines)};
}

Arrangement parse_arrangement(std::istream& in) {
  std::vector<std::array<i64, 3>> lines;
  std::string row;
  std::size_t lineno = 0;
  while (std::getline(in, row)) {
    ++lineno;
    const auto hash = row.find('#');
    if (hash != std::string::npos) row.erase(hash);
    std::istringstream ss(row);
    i64 a, b, c;
    if (!(ss >> a)) continue;  // blank or comment-only row
    if (!(ss >> b >> c))
      throw InputError("arrangement row " + std::to_string(lineno) +
                       ": expected three integers");
    i64 extra;
    if (ss >> extra)
      throw InputError("arrangement row " + std::to_string(lineno) +
                       ": expected exactly three integers");
    lines.push_back({a, b, c});
  }
  return make_arrangement(std::move(lines));
}

Arrangement load_arrangement(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open arrangement file: " + path);
  return parse_arrangement(in);
}

std::vector<int> IntersectionLattice::multiplicities() const {
  std::vector<int> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(p.multiplicity());
  std::sort(out.rbegin(), out.rend());
  return out;
}

HomogPoly binomial_curve(int d, int k) {
  if (d < 3) throw InputError("binomial_curve needs d >= 3");
  if (k < 1 || 2 * k >= d)
    throw InputError("binomial_curve needs 1 <= k < d/2");
  if (std::gcd(k, d) != 1)
    throw InputError("binomial_curve needs gcd(k, d) = 1, got gcd(" +
                     std::to_string(k) + ", " + std::to_string(d) + ") = " +
                     std::to_string(std::gcd(k, d)));
  return add(HomogPoly::monomial({0, d, 0}, 1),
             HomogPoly::monomial({k, 0, d - k}, 1));
}

i64 model_count(int d) {
  if (d < 3) throw InputError("model_count needs d >= 3");
  i64 phi = d;
  int n = d;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    phi -= phi / p;
    while (n % p == 0) n /= p;
  }
  if (n > 1) phi -= phi / n;
  return phi / 2;
}

HomogPoly b_plus_curve(int k) {
  if (k < 3 || k % 2 == 0)
    throw InputError("b_plus_curve needs an odd k >= 3");
  HomogPoly f = HomogPoly::monomial({2 * k, 0, 0}, 1);
  f = add(f, HomogPoly::monomial({0, 2 * k, 0}, 1));
  f = add(f, HomogPoly::monomial({0, 0, 2 * k}, 1));
  f = add(f, HomogPoly::monomial({k, k, 0}, -2));
  f = add(f, HomogPoly::monomial({k, 0, k}, -2));
  f = add(f, HomogPoly::monomial({0, k, k}, -2));
  return f;
}

HomogPoly named_example(std::string_view name) {
  if (name == "quartic_C")
    return add(HomogPoly::monomial({0, 4, 0}, 1),
               HomogPoly::monomial({1, 0, 3}, -1));
  if (name == "quartic_Cprime")
    return add(add(HomogPoly::monomial({0, 4, 0}, 1),
                   HomogPoly::monomial({1, 0, 3}, -1)),
               HomogPoly::monomial({0, 3, 1}, -1));
  if (name == "quintic_4cusp") {
    HomogPoly f = HomogPoly::monomial({4, 1, 0}, 16);
    f = add(f, HomogPoly::monomial({2, 2, 1}, 128));
    f = add(f, HomogPoly::monomial({3, 0, 2}, -4));
    f = add(f, HomogPoly::monomial({0, 3, 2}, 256));
    f = add(f, HomogPoly::monomial({1, 1, 3}, -144));
    f = add(f, HomogPoly::monomial({0, 0, 5}, 27));
    return f;
  }
  std::string valid;
  for (const auto& n : named_example_list()) valid += " " + n;
  throw InputError("unknown example '" + std::string(name) + "'; valid:" +
                   valid);
}

std::vector<std::string> named_example_list() {
  return {"quartic_C", "quartic_Cprime", "quintic_4cusp"};
}

HomogPoly arrangement_poly(const Arrangement& a) {
  make_arrangement(a.lines);  // revalidate: callers may have built it by hand
  HomogPoly f = HomogPoly::monomial({0, 0, 0}, 1);
  for (const auto& l : a.lines)
    f = multiply(f, HomogPoly::linear_form(l[0], l[1], l[2]));
  return f;
}

IntersectionLattice intersection_lattice(const Arrangement& a) {
  const int n = int(a.lines.size());
  std::map<std::array<i64, 3>, std::set<int>> groups;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const auto& u = a.lines[std::size_t(i)];
      const auto& v = a.lines[std::size_t(j)];
      const auto p = normalize_point(i128(u[1]) * v[2] - i128(u[2]) * v[1],
                                     i128(u[2]) * v[0] - i128(u[0]) * v[2],
                                     i128(u[0]) * v[1] - i128(u[1]) * v[0]);
      groups[p].insert(i);
      groups[p].insert(j);
    }
  IntersectionLattice lat;
  lat.line_count = n;
  for (const auto& [pt, incident] : groups)
    lat.points.push_back(
        {pt, std::vector<int>(incident.begin(), incident.end())});
  // Each unordered pair of lines must be counted by exactly one point.
  i64 pair_count = 0;
  for (const auto& p : lat.points)
    pair_count += i64(p.lines.size()) * (i64(p.lines.size()) - 1) / 2;
  if (pair_count != i64(n) * (n - 1) / 2)
    throw InternalError("lattice pair-count identity failed");
  return lat;
}

i64 combinatorial_tau(const IntersectionLattice& l) {
  i64 tau = 0;
  for (const auto& p : l.points) {
    const i64 m = p.multiplicity();
    tau += (m - 1) * (m - 1);
  }
  return tau;
}

namespace {

// Meet matrix: multiplicity of the unique point shared by lines i and j.
std::vector<std::vector<int>> meet_matrix(const IntersectionLattice& l) {
  std::vector<std::vector<int>> m(std::size_t(l.line_count),
                                  std::vector<int>(std::size_t(l.line_count), 0));
  for (const auto& p : l.points)
    for (std::size_t i = 0; i < p.lines.size(); ++i)
      for (std::size_t j = i + 1; j < p.lines.size(); ++j) {
        m[std::size_t(p.lines[i])][std::size_t(p.lines[j])] = p.multiplicity();
        m[std::size_t(p.lines[j])][std::size_t(p.lines[i])] = p.multiplicity();
      }
  return m;
}

std::vector<int> line_signature(const std::vector<std::vector<int>>& m,
                                int i) {
  std::vector<int> sig;
  for (std::size_t j = 0; j < m.size(); ++j)
    if (int(j) != i) sig.push_back(m[std::size_t(i)][j]);
  std::sort(sig.begin(), sig.end());
  return sig;
}

std::set<std::vector<int>> point_sets(const IntersectionLattice& l) {
  std::set<std::vector<int>> out;
  for (const auto& p : l.points) out.insert(p.lines);
  return out;
}

bool extend(const std::vector<std::vector<int>>& m1,
            const std::vector<std::vector<int>>& m2,
            const std::vector<std::vector<int>>& sig_ok,
            std::vector<int>& perm, std::vector<bool>& used, std::size_t i) {
  const std::size_t n = m1.size();
  if (i == n) return true;
  for (int cand : sig_ok[i]) {
    if (used[std::size_t(cand)]) continue;
    bool ok = true;
    for (std::size_t j = 0; j < i && ok; ++j)
      ok = m2[std::size_t(cand)][std::size_t(perm[j])] == m1[i][j];
    if (!ok) continue;
    perm[i] = cand;
    used[std::size_t(cand)] = true;
    if (extend(m1, m2, sig_ok, perm, used, i + 1)) return true;
    used[std::size_t(cand)] = false;
  }
  return false;
}

}  // namespace

bool lattice_isomorphic(const IntersectionLattice& l1,
                        const IntersectionLattice& l2) {
  if (l1.line_count != l2.line_count) return false;
  if (l1.multiplicities() != l2.multiplicities()) return false;
  const auto m1 = meet_matrix(l1);
  const auto m2 = meet_matrix(l2);
  const std::size_t n = m1.size();

  std::vector<std::vector<int>> sig1(n), candidates(n);
  std::vector<std::vector<int>> sig2(n);
  for (std::size_t i = 0; i < n; ++i) {
    sig1[i] = line_signature(m1, int(i));
    sig2[i] = line_signature(m2, int(i));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      if (sig1[i] == sig2[j]) candidates[i].push_back(int(j));
    if (candidates[i].empty()) return false;
  }

  std::vector<int> perm(n, -1);
  std::vector<bool> used(n, false);
  if (!extend(m1, m2, candidates, perm, used, 0)) return false;

  // The meet matrix determines pairwise multiplicities; confirm whole points
  // map to whole points.
  const auto target = point_sets(l2);
  for (const auto& p : l1.points) {
    std::vector<int> mapped;
    mapped.reserve(p.lines.size());
    for (int li : p.lines) mapped.push_back(perm[std::size_t(li)]);
    std::sort(mapped.begin(), mapped.end());
    if (!target.count(mapped)) return false;
  }
  return true;
}

std::vector<HarnessGroup> conjecture_harness(
    const std::vector<std::vector<Arrangement>>& groups,
    const AnalyzeOptions& opts) {
  std::vector<HarnessGroup> out;
  for (const auto& group : groups) {
    if (group.empty()) throw InputError("empty arrangement group");
    std::vector<IntersectionLattice> lattices;
    lattices.reserve(group.size());
    for (const auto& a : group) lattices.push_back(intersection_lattice(a));
    for (std::size_t i = 0; i < group.size(); ++i)
      for (std::size_t j = i + 1; j < group.size(); ++j)
        if (!lattice_isomorphic(lattices[i], lattices[j]))
          throw InputError("group members " + std::to_string(i) + " and " +
                           std::to_string(j) +
                           " have non-isomorphic intersection lattices");

    HarnessGroup g;
    for (std::size_t i = 0; i < group.size(); ++i) {
      HarnessMember m;
      m.name = "member " + std::to_string(i);
      m.tau_comb = combinatorial_tau(lattices[i]);
      m.analysis = analyze(arrangement_poly(group[i]), opts);
      m.mdr = m.analysis.r;
      m.tau = m.analysis.tau;
      m.nu = m.analysis.nu;
      m.label = classify(m.analysis);
      if (m.analysis.r >= 1)
        m.split = splitting_type(m.analysis.d, m.analysis.r);
      if (m.tau != m.tau_comb) g.tau_matches_combinatorial = false;
      g.members.push_back(std::move(m));
    }
    const HarnessMember& first = g.members.front();
    for (const auto& m : g.members) {
      if (m.nu != first.nu) g.nu_constant = false;
      if (m.split.d1 != first.split.d1 || m.split.d2 != first.split.d2)
        g.splitting_constant = false;
      if (m.mdr != first.mdr) g.mdr_constant = false;
    }
    g.counterexample = !g.nu_constant || !g.splitting_constant;
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace jacplane

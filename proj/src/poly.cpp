#include "jacplane/poly.hpp"

#include <algorithm>
#include <map>

namespace jacplane {

i64 checked_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r))
    throw InputError("integer coefficient overflow (64-bit limit)");
  return r;
}

i64 checked_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r))
    throw InputError("integer coefficient overflow (64-bit limit)");
  return r;
}

HomogPoly HomogPoly::zero(int degree) {
  if (degree < 0) throw InputError("negative polynomial degree");
  return HomogPoly(degree);
}

HomogPoly HomogPoly::monomial(const Monomial& m, i64 coeff) {
  HomogPoly p(m.degree());
  if (coeff != 0) p.terms_.push_back({m, coeff});
  return p;
}

HomogPoly HomogPoly::variable(int var) {
  Monomial m;
  switch (var) {
    case 0: m = {1, 0, 0}; break;
    case 1: m = {0, 1, 0}; break;
    case 2: m = {0, 0, 1}; break;
    default: throw InternalError("variable index out of range");
  }
  return monomial(m, 1);
}

HomogPoly HomogPoly::linear_form(i64 cx, i64 cy, i64 cz) {
  HomogPoly p(1);  // term order: (0,0,1) < (0,1,0) < (1,0,0)
  if (cz) p.terms_.push_back({{0, 0, 1}, cz});
  if (cy) p.terms_.push_back({{0, 1, 0}, cy});
  if (cx) p.terms_.push_back({{1, 0, 0}, cx});
  return p;
}

i64 HomogPoly::coeff_of(const Monomial& m) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), m,
      [](const Term& t, const Monomial& key) { return t.mon < key; });
  return (it != terms_.end() && it->mon == m) ? it->coeff : 0;
}

void HomogPoly::push_term(const Monomial& m, i64 c) {
  if (c == 0) return;
  if (m.degree() != degree_)
    throw InternalError("push_term: degree mismatch");
  terms_.push_back({m, c});
}

HomogPoly HomogPoly::scaled(i64 s) const {
  HomogPoly p(degree_);
  if (s == 0) return p;
  p.terms_.reserve(terms_.size());
  for (const Term& t : terms_) p.terms_.push_back({t.mon, checked_mul(t.coeff, s)});
  return p;
}

std::array<HomogPoly, 3> HomogPoly::partials() const {
  if (degree_ < 1)
    throw InputError("partial derivatives need degree >= 1");
  std::array<HomogPoly, 3> out = {HomogPoly(degree_ - 1),
                                  HomogPoly(degree_ - 1),
                                  HomogPoly(degree_ - 1)};
  for (const Term& t : terms_) {
    if (t.mon.a)
      out[0].terms_.push_back(
          {{t.mon.a - 1, t.mon.b, t.mon.c}, checked_mul(t.coeff, t.mon.a)});
    if (t.mon.b)
      out[1].terms_.push_back(
          {{t.mon.a, t.mon.b - 1, t.mon.c}, checked_mul(t.coeff, t.mon.b)});
    if (t.mon.c)
      out[2].terms_.push_back(
          {{t.mon.a, t.mon.b, t.mon.c - 1}, checked_mul(t.coeff, t.mon.c)});
  }
  for (auto& p : out)
    std::sort(p.terms_.begin(), p.terms_.end(),
              [](const Term& l, const Term& r) { return l.mon < r.mon; });
  return out;
}

std::vector<u32> HomogPoly::dense_coeffs(const PrimeField& F) const {
  std::vector<u32> v(std::size_t(graded_dim(degree_)), 0);
  for (const Term& t : terms_) v[std::size_t(monomial_index(t.mon))] = F.from_i64(t.coeff);
  return v;
}

bool HomogPoly::compatible_with(const PrimeField& F) const {
  if (degree_ >= 1 && i64(degree_) % i64(F.modulus()) == 0) return false;
  for (const Term& t : terms_)
    if (t.coeff % i64(F.modulus()) == 0) return false;
  return true;
}

std::string HomogPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const Term& t : terms_) {
    const bool negative = t.coeff < 0;
    const i64 mag = negative ? -t.coeff : t.coeff;
    if (first) {
      if (negative) out += "-";
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    std::string mono;
    auto append_var = [&mono](char v, int e) {
      if (e == 0) return;
      if (!mono.empty()) mono += "*";
      mono += v;
      if (e > 1) mono += "^" + std::to_string(e);
    };
    append_var('x', t.mon.a);
    append_var('y', t.mon.b);
    append_var('z', t.mon.c);
    if (mono.empty()) {
      out += std::to_string(mag);
    } else {
      if (mag != 1) out += std::to_string(mag) + "*";
      out += mono;
    }
  }
  return out;
}

HomogPoly add(const HomogPoly& g, const HomogPoly& h) {
  if (g.degree() != h.degree())
    throw InputError("cannot add polynomials of degrees " +
                     std::to_string(g.degree()) + " and " +
                     std::to_string(h.degree()));
  HomogPoly out(g.degree());
  auto gi = g.terms_.begin(), hi = h.terms_.begin();
  while (gi != g.terms_.end() || hi != h.terms_.end()) {
    if (hi == h.terms_.end() || (gi != g.terms_.end() && gi->mon < hi->mon)) {
      out.terms_.push_back(*gi++);
    } else if (gi == g.terms_.end() || hi->mon < gi->mon) {
      out.terms_.push_back(*hi++);
    } else {
      const i64 c = checked_add(gi->coeff, hi->coeff);
      if (c != 0) out.terms_.push_back({gi->mon, c});
      ++gi;
      ++hi;
    }
  }
  return out;
}

HomogPoly multiply(const HomogPoly& g, const HomogPoly& h) {
  HomogPoly out(g.degree() + h.degree());
  std::map<Monomial, i64> acc;
  for (const auto& gt : g.terms_)
    for (const auto& ht : h.terms_) {
      const Monomial m{gt.mon.a + ht.mon.a, gt.mon.b + ht.mon.b,
                       gt.mon.c + ht.mon.c};
      auto [it, inserted] = acc.try_emplace(m, 0);
      it->second = checked_add(it->second, checked_mul(gt.coeff, ht.coeff));
    }
  for (const auto& [m, c] : acc)
    if (c != 0) out.terms_.push_back({m, c});
  return out;
}

namespace {

// Univariate polynomials over GF(p), low degree first.
using UPoly = std::vector<u32>;

int udeg(const UPoly& p) {
  for (int i = int(p.size()) - 1; i >= 0; --i)
    if (p[i]) return i;
  return -1;
}

UPoly umul(const PrimeField& F, const UPoly& a, const UPoly& b) {
  UPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b[j]) out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
  }
  return out;
}

UPoly uderiv(const PrimeField& F, const UPoly& a) {
  if (a.size() <= 1) return {0};
  UPoly out(a.size() - 1, 0);
  for (std::size_t i = 1; i < a.size(); ++i)
    out[i - 1] = F.reduce(u64(a[i]) * (i % F.modulus()));
  return out;
}

UPoly umod(const PrimeField& F, UPoly a, const UPoly& b) {
  const int db = udeg(b);
  const u32 lead_inv = F.inv(b[std::size_t(db)]);
  for (int da = udeg(a); da >= db; da = udeg(a)) {
    const u32 q = F.mul(a[std::size_t(da)], lead_inv);
    for (int i = 0; i <= db; ++i)
      a[std::size_t(da - db + i)] =
          F.sub(a[std::size_t(da - db + i)], F.mul(q, b[std::size_t(i)]));
  }
  return a;
}

int ugcd_degree(const PrimeField& F, UPoly a, UPoly b) {
  if (udeg(a) < udeg(b)) std::swap(a, b);
  while (udeg(b) >= 0) {
    UPoly r = umod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return udeg(a);
}

}  // namespace

bool reduced_check(const HomogPoly& f, const PrimeField& F,
                   std::mt19937_64& rng, int trials) {
  if (f.degree() < 1) throw InputError("reduced_check needs degree >= 1");
  if (f.is_zero()) return false;
  const int d = f.degree();
  auto rand_elem = [&]() { return u32(rng() % F.modulus()); };

  int done = 0;
  int attempts = 0;
  while (done < trials) {
    if (++attempts > trials + 40)
      throw InternalError("reduced_check: could not find full-degree lines");
    // Parametrize a random line as P + t Q and expand f(P + t Q).
    std::array<u32, 3> P = {rand_elem(), rand_elem(), rand_elem()};
    std::array<u32, 3> Q = {rand_elem(), rand_elem(), rand_elem()};
    // pw[v][e] = (P_v + t Q_v)^e
    std::array<std::vector<UPoly>, 3> pw;
    for (int v = 0; v < 3; ++v) {
      pw[v].resize(std::size_t(d + 1));
      pw[v][0] = {1};
      const UPoly lin = {P[std::size_t(v)], Q[std::size_t(v)]};
      for (int e = 1; e <= d; ++e) pw[v][std::size_t(e)] = umul(F, pw[v][std::size_t(e - 1)], lin);
    }
    UPoly g(std::size_t(d + 1), 0);
    for (const auto& t : f.terms()) {
      UPoly tm = umul(F, pw[0][std::size_t(t.mon.a)], pw[1][std::size_t(t.mon.b)]);
      tm = umul(F, tm, pw[2][std::size_t(t.mon.c)]);
      const u32 c = F.from_i64(t.coeff);
      for (std::size_t i = 0; i < tm.size() && i < g.size(); ++i)
        if (tm[i]) g[i] = F.add(g[i], F.mul(c, tm[i]));
    }
    if (udeg(g) != d) continue;  // line through a root of the top form; retry
    if (ugcd_degree(F, g, uderiv(F, g)) > 0) return false;
    ++done;
  }
  return true;
}

}  // namespace jacplane

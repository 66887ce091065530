#include "jacplane/graded_maps.hpp"

namespace jacplane {

namespace {

struct ReducedTerm {
  int index;  // monomial index within its graded piece
  Monomial mon;
  u32 coeff;
};

std::vector<ReducedTerm> reduce_terms(const HomogPoly& g, const PrimeField& F) {
  std::vector<ReducedTerm> out;
  out.reserve(g.term_count());
  for (const auto& t : g.terms()) {
    const u32 c = F.from_i64(t.coeff);
    if (c) out.push_back({monomial_index(t.mon), t.mon, c});
  }
  return out;
}

void check_cap(int codomain_degree, int d, int degree_cap) {
  const int cap = degree_cap >= 0 ? degree_cap : 4 * std::max(d, 1);
  if (codomain_degree > cap)
    throw InternalError("graded map request at degree " +
                        std::to_string(codomain_degree) +
                        " exceeds the cap " + std::to_string(cap));
}

// Scatter g * (each basis monomial of S_j) into the columns [col0, ...).
void fill_multiplication_block(ExactMatrix& m, const HomogPoly& g,
                               const PrimeField& F, int j,
                               std::size_t col0) {
  if (j < 0) return;
  const auto terms = reduce_terms(g, F);
  const i64 dim = graded_dim(j);
  for (i64 col = 0; col < dim; ++col) {
    const Monomial mu = monomial_at(j, int(col));
    for (const auto& t : terms) {
      const Monomial prod{mu.a + t.mon.a, mu.b + t.mon.b, mu.c + t.mon.c};
      m.add_at(std::size_t(monomial_index(prod)), col0 + std::size_t(col),
               t.coeff);
    }
  }
}

}  // namespace

GradedMap jacobian_relation_map(const HomogPoly& f, const PrimeField& F,
                                int m, int degree_cap) {
  const int d = f.degree();
  if (d < 1) throw InputError("jacobian_relation_map needs degree >= 1");
  const int cod = m + d - 1;
  check_cap(cod, d, degree_cap);
  const std::size_t rows = std::size_t(graded_dim(cod));
  const std::size_t block = m >= 0 ? std::size_t(graded_dim(m)) : 0;
  ExactMatrix mat(F, rows, 3 * block);
  if (m >= 0) {
    const auto parts = f.partials();
    for (int v = 0; v < 3; ++v)
      fill_multiplication_block(mat, parts[std::size_t(v)], F, m,
                                std::size_t(v) * block);
  }
  return GradedMap{{{m, 3}}, cod, std::move(mat)};
}

GradedMap multiplication_map(const HomogPoly& g, const PrimeField& F, int j,
                             int degree_cap) {
  if (j < 0) throw InputError("multiplication_map needs j >= 0");
  const int cod = j + g.degree();
  check_cap(cod, g.degree(), degree_cap);
  ExactMatrix mat(F, std::size_t(graded_dim(cod)), std::size_t(graded_dim(j)));
  fill_multiplication_block(mat, g, F, j, 0);
  return GradedMap{{{j, 1}}, cod, std::move(mat)};
}

GradedMap ideal_piece_matrix(const HomogPoly& f, const PrimeField& F, int k,
                             int degree_cap) {
  const int d = f.degree();
  if (d < 1) throw InputError("ideal_piece_matrix needs degree >= 1");
  if (k < 0) throw InputError("ideal_piece_matrix needs k >= 0");
  check_cap(k, d, degree_cap);
  const int j = k - d + 1;
  const std::size_t block = j >= 0 ? std::size_t(graded_dim(j)) : 0;
  ExactMatrix mat(F, std::size_t(graded_dim(k)), 3 * block);
  if (j >= 0) {
    const auto parts = f.partials();
    for (int v = 0; v < 3; ++v)
      fill_multiplication_block(mat, parts[std::size_t(v)], F, j,
                                std::size_t(v) * block);
  }
  return GradedMap{{{j, 3}}, k, std::move(mat)};
}

}  // namespace jacplane

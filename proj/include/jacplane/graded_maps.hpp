#pragma once

#include <utility>
#include <vector>

#include "jacplane/matrix.hpp"
#include "jacplane/poly.hpp"

namespace jacplane {

// A linear map between graded pieces, carried as an exact matrix plus the
// degree bookkeeping of its domain and codomain.
struct GradedMap {
  std::vector<std::pair<int, int>> domain_degrees;  // (degree, multiplicity)
  int codomain_degree = 0;
  ExactMatrix matrix;

  std::size_t domain_dim() const { return matrix.cols(); }
};

// S_m^3 -> S_{m+d-1}, (a,b,c) |-> a f_x + b f_y + c f_z.  The kernel is the
// degree-m piece of the Jacobian syzygy module.
GradedMap jacobian_relation_map(const HomogPoly& f, const PrimeField& F,
                                int m, int degree_cap = -1);

// S_j -> S_{j+deg g}, h |-> g h.
GradedMap multiplication_map(const HomogPoly& g, const PrimeField& F, int j,
                             int degree_cap = -1);

// Columns span the degree-k piece of the Jacobian ideal (the three
// multiplication maps by the partials, stacked side by side).
GradedMap ideal_piece_matrix(const HomogPoly& f, const PrimeField& F, int k,
                             int degree_cap = -1);

}  // namespace jacplane

#pragma once

#include "jacplane/common.hpp"

namespace jacplane {

// Exponent triple (a, b, c) for x^a y^b z^c.
struct Monomial {
  int a = 0, b = 0, c = 0;

  int degree() const { return a + b + c; }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  // Ascending lex on (a, b, c); also the basis order within each S_k.
  friend auto operator<=>(const Monomial& l, const Monomial& r) {
    if (auto cmp = l.a <=> r.a; cmp != 0) return cmp;
    if (auto cmp = l.b <=> r.b; cmp != 0) return cmp;
    return l.c <=> r.c;
  }
};

// dim S_k = C(k+2, 2) for k >= 0, and 0 for k < 0.
inline i64 graded_dim(i64 k) { return k < 0 ? 0 : (k + 2) * (k + 1) / 2; }

// Position of m in the lex-ordered basis of S_{deg m}.
int monomial_index(const Monomial& m);

// Inverse of monomial_index on S_k.
Monomial monomial_at(int k, int index);

// Index in S_{k+1} of x_var * (the index-th monomial of S_k); var in {0,1,2}.
int shifted_index(int k, int index, int var);

}  // namespace jacplane

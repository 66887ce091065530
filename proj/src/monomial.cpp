#include "jacplane/monomial.hpp"

namespace jacplane {

namespace {
// Monomials with first exponent < a come before (a, b, c) in lex order.
inline int lex_prefix(int k, int a) { return a * (k + 1) - a * (a - 1) / 2; }
}  // namespace

int monomial_index(const Monomial& m) {
  const int k = m.degree();
  return lex_prefix(k, m.a) + m.b;
}

Monomial monomial_at(int k, int index) {
  if (k < 0 || index < 0 || index >= graded_dim(k))
    throw InternalError("monomial_at: index out of range");
  int a = 0;
  while (index >= k - a + 1) {
    index -= k - a + 1;
    ++a;
  }
  return Monomial{a, index, k - a - index};
}

int shifted_index(int k, int index, int var) {
  Monomial m = monomial_at(k, index);
  switch (var) {
    case 0: ++m.a; break;
    case 1: ++m.b; break;
    case 2: ++m.c; break;
    default: throw InternalError("shifted_index: bad variable");
  }
  return monomial_index(m);
}

}  // namespace jacplane

#pragma once

#include <array>
#include <random>
#include <string>
#include <vector>

#include "jacplane/field.hpp"
#include "jacplane/monomial.hpp"

namespace jacplane {

// Homogeneous trivariate polynomial with exact integer coefficients.
// Terms are kept sorted in the basis order, zero coefficients are never
// stored; the zero polynomial is an empty term list with a declared degree.
// Coefficients stay over Z so the same curve can be reduced into several
// prime fields (the multi-prime agreement protocol).
class HomogPoly {
public:
  struct Term {
    Monomial mon;
    i64 coeff;

    friend bool operator==(const Term&, const Term&) = default;
  };

  HomogPoly() = default;  // the zero polynomial of degree 0

  static HomogPoly zero(int degree);
  static HomogPoly monomial(const Monomial& m, i64 coeff);
  static HomogPoly variable(int var);  // x, y or z
  static HomogPoly linear_form(i64 cx, i64 cy, i64 cz);

  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  i64 coeff_of(const Monomial& m) const;

  HomogPoly scaled(i64 s) const;
  std::array<HomogPoly, 3> partials() const;  // degree >= 1

  // Coefficient vector indexed by monomial_index, reduced into F.
  std::vector<u32> dense_coeffs(const PrimeField& F) const;

  // False when p divides the degree or some nonzero coefficient, i.e. the
  // reduction mod p is a different curve.
  bool compatible_with(const PrimeField& F) const;

  // Canonical text form; parses back to the same polynomial.
  std::string to_string() const;

  friend bool operator==(const HomogPoly&, const HomogPoly&) = default;

  friend HomogPoly add(const HomogPoly& g, const HomogPoly& h);
  friend HomogPoly multiply(const HomogPoly& g, const HomogPoly& h);

private:
  explicit HomogPoly(int degree) : degree_(degree) {}
  void push_term(const Monomial& m, i64 c);  // keeps order, drops zeros

  int degree_ = 0;
  std::vector<Term> terms_;
};

HomogPoly add(const HomogPoly& g, const HomogPoly& h);
HomogPoly multiply(const HomogPoly& g, const HomogPoly& h);

// Probabilistic reducedness test: restrict f to random lines and check the
// degree-d restrictions are squarefree (gcd with the derivative).  A
// non-reduced curve fails every full-degree restriction; a reduced curve
// passes a random one with overwhelming probability over a 31-bit field.
bool reduced_check(const HomogPoly& f, const PrimeField& F,
                   std::mt19937_64& rng, int trials = 3);

// Checked integer helpers shared with the parser and generators.
i64 checked_add(i64 a, i64 b);
i64 checked_mul(i64 a, i64 b);

}  // namespace jacplane

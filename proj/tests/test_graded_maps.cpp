#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "jacplane/graded_maps.hpp"
#include "jacplane/parser.hpp"
#include "oracle.hpp"

using namespace jacplane;

namespace {
const u64 kP = 2147483587;

std::vector<u32> koszul_vector(const PrimeField& F, const HomogPoly& a,
                               const HomogPoly& b, int m, int which) {
  // (a, -b, 0)-style triple laid out in the stacked S_m^3 coordinates
  const std::size_t block = std::size_t(graded_dim(m));
  std::vector<u32> v(3 * block, 0);
  const auto da = a.dense_coeffs(F);
  const auto db = b.dense_coeffs(F);
  const int slots[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  for (std::size_t i = 0; i < block; ++i) {
    v[std::size_t(slots[which][0]) * block + i] = da[i];
    v[std::size_t(slots[which][1]) * block + i] = F.neg(db[i]);
  }
  return v;
}
}  // namespace

TEST_CASE("jacobian relation map shapes and kernels") {
  PrimeField F(kP);
  const HomogPoly conic = parse_poly("x^2 + y^2 + z^2");
  const GradedMap m0 = jacobian_relation_map(conic, F, 0);
  CHECK(m0.matrix.cols() == 3);
  CHECK(m0.matrix.rows() == 3);  // dim S_1
  CHECK(m0.matrix.rank() == 3);
  CHECK(m0.matrix.kernel_basis().empty());
  CHECK(m0.codomain_degree == 1);

  // f_z = 0, so (0,0,1) is a degree-0 relation
  const HomogPoly pencil = parse_poly("x^5 + y^5");
  const GradedMap p0 = jacobian_relation_map(pencil, F, 0);
  CHECK(p0.matrix.apply({0, 0, 1}) ==
        std::vector<u32>(p0.matrix.rows(), 0));

  const HomogPoly quartic = parse_poly("y^4 - x*z^3");
  const GradedMap q1 = jacobian_relation_map(quartic, F, 1);
  CHECK(q1.matrix.cols() - q1.matrix.rank() == 1);

  const GradedMap empty = jacobian_relation_map(quartic, F, -1);
  CHECK(empty.matrix.cols() == 0);
}

TEST_CASE("multiplication map") {
  PrimeField F(kP);
  const GradedMap mx = multiplication_map(parse_poly("x"), F, 0);
  CHECK(mx.matrix.cols() == 1);
  CHECK(mx.matrix.rows() == 3);
  CHECK(mx.matrix.rank() == 1);

  const GradedMap mz = multiplication_map(HomogPoly::zero(4), F, 2);
  CHECK(mz.matrix.rank() == 0);
  CHECK(mz.matrix.rows() == graded_dim(6));

  // multiplication by a nonzero linear form is injective
  const GradedMap ml = multiplication_map(parse_poly("x + y + z"), F, 1);
  CHECK(ml.matrix.cols() == 3);
  CHECK(ml.matrix.rank() == 3);
}

TEST_CASE("ideal piece matrix") {
  PrimeField F(kP);
  const HomogPoly fermat = parse_poly("x^3 + y^3 + z^3");
  CHECK(ideal_piece_matrix(fermat, F, 2).matrix.rank() == 3);
  CHECK(ideal_piece_matrix(fermat, F, 1).matrix.cols() == 0);
  CHECK(ideal_piece_matrix(fermat, F, 1).matrix.rank() == 0);
}

TEST_CASE("ideal piece rank against the exact integer oracle") {
  PrimeField F(kP);
  const HomogPoly quartic = parse_poly("y^4 - x*z^3");
  // dim M(f)_6 computed by rational-arithmetic elimination; also forced by
  // tau-stabilization (tau = 6 and n(f)_6 = n(f)_0 = 0).
  const long long oracle_m6 = oracle::milnor_dim_exact(quartic, 6);
  CHECK(oracle_m6 == 6);
  const GradedMap p6 = ideal_piece_matrix(quartic, F, 6);
  CHECK(graded_dim(6) - i64(p6.matrix.rank()) == oracle_m6);

  // a denser curve, a few degrees
  const HomogPoly g = parse_poly("x^4 + y^4 + z^4 - 3*x*y*z^2 + 2*x^2*y^2");
  for (int k = 3; k <= 8; ++k) {
    const GradedMap pk = ideal_piece_matrix(g, F, k);
    CHECK(graded_dim(k) - i64(pk.matrix.rank()) ==
          oracle::milnor_dim_exact(g, k));
  }
}

TEST_CASE("koszul relations lie in the kernel at degree d-1") {
  PrimeField F(kP);
  std::mt19937_64 rng(211);
  const char* curves[] = {"y^4 - x*z^3", "x^3 + y^3 + z^3",
                          "x^4*y + y^5 - z^5 + x^2*y^2*z",
                          "x^6 + y^6 + z^6 - 2*x^3*y^3"};
  for (const char* text : curves) {
    const HomogPoly f = parse_poly(text);
    const int d = f.degree();
    const auto p = f.partials();
    const GradedMap map = jacobian_relation_map(f, F, d - 1);
    const std::vector<u32> zero(map.matrix.rows(), 0);
    CHECK(map.matrix.apply(koszul_vector(F, p[1], p[0], d - 1, 0)) == zero);
    CHECK(map.matrix.apply(koszul_vector(F, p[2], p[0], d - 1, 1)) == zero);
    CHECK(map.matrix.apply(koszul_vector(F, p[2], p[1], d - 1, 2)) == zero);
  }
}

TEST_CASE("rank-nullity for relation maps") {
  PrimeField F(kP);
  const HomogPoly f = parse_poly("x^4*y + y^5 - z^5");
  for (int m = 0; m <= 5; ++m) {
    const GradedMap map = jacobian_relation_map(f, F, m);
    CHECK(i64(map.matrix.rank()) + i64(map.matrix.kernel_basis().size()) ==
          3 * graded_dim(m));
  }
}

TEST_CASE("ideal pieces grow: (x,y,z) * J_{k-1} inside J_k") {
  PrimeField F(kP);
  std::mt19937_64 rng(223);
  const HomogPoly f = parse_poly("y^5 - x^2*z^3 + x*y*z^3");
  const int d = f.degree();
  for (int k = d; k <= d + 3; ++k) {
    const ExactMatrix prev = ideal_piece_matrix(f, F, k - 1).matrix;
    const ExactMatrix cur = ideal_piece_matrix(f, F, k).matrix;
    std::vector<u32> w(prev.cols());
    for (auto& e : w) e = u32(rng() % F.modulus());
    const std::vector<u32> member = prev.apply(w);  // random element of J_{k-1}
    for (int var = 0; var < 3; ++var) {
      std::vector<u32> shifted(cur.rows(), 0);
      for (std::size_t i = 0; i < member.size(); ++i)
        shifted[std::size_t(shifted_index(k - 1, int(i), var))] = member[i];
      CHECK(cur.in_column_span(shifted));
    }
  }
}

TEST_CASE("degree cap rejects runaway requests") {
  PrimeField F(kP);
  const HomogPoly f = parse_poly("y^4 - x*z^3");
  CHECK_THROWS_AS(jacobian_relation_map(f, F, 14), InternalError);  // 17 > 16
  CHECK_THROWS_AS(ideal_piece_matrix(f, F, 17), InternalError);
  CHECK_NOTHROW(ideal_piece_matrix(f, F, 17, 40));  // explicit higher cap
  CHECK_NOTHROW(ideal_piece_matrix(f, F, 16));
}

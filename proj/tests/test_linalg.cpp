#include <doctest.h>

#include "predraw/linalg.hpp"
#include "predraw/rng.hpp"

using namespace predraw;

namespace {

// Independent determinant oracle: Laplace expansion along the first row.
template <typename Mat, typename Scalar>
Scalar laplace_det(const Mat& m) {
  const Index n = m.rows();
  if (n == 0) return Scalar(1);
  if (n == 1) return m(0, 0);
  Scalar acc(0);
  int sign = 1;
  for (Index j = 0; j < n; ++j) {
    Mat sub(n - 1, n - 1);
    for (Index r = 1; r < n; ++r) {
      Index cc = 0;
      for (Index c = 0; c < n; ++c) {
        if (c == j) continue;
        sub(r - 1, cc++) = m(r, c);
      }
    }
    Scalar term = m(0, j) * laplace_det<Mat, Scalar>(sub);
    if (sign < 0) term = -term;
    acc += term;
    sign = -sign;
  }
  return acc;
}

PolyMat random_poly_matrix(SeededRng& rng, Index n, int vars) {
  PolyMat m(n, n);
  for (Index r = 0; r < n; ++r)
    for (Index c = 0; c < n; ++c) {
      Polynomial e(static_cast<long>(rng.uniform(-2, 2)));
      if (rng.uniform(0, 2) > 0) {
        e = e + Polynomial::variable(
                    static_cast<int>(rng.uniform(0, vars - 1)))
                    .times(Int(static_cast<long>(rng.uniform(-2, 2))));
      }
      m(r, c) = e;
    }
  return m;
}

RatMat random_rat_matrix(SeededRng& rng, Index rows, Index cols) {
  RatMat m(rows, cols);
  for (Index r = 0; r < rows; ++r)
    for (Index c = 0; c < cols; ++c) m(r, c) = random_rational(rng);
  return m;
}

}  // namespace

TEST_CASE("det_polynomial: 2x2 symbolic matrix gives the bracket") {
  PolyMat m(2, 2);
  m(0, 0) = Polynomial::variable(0);
  m(0, 1) = Polynomial::variable(1);
  m(1, 0) = Polynomial::variable(2);
  m(1, 1) = Polynomial::variable(3);
  Polynomial expect = Polynomial::variable(0) * Polynomial::variable(3) -
                      Polynomial::variable(1) * Polynomial::variable(2);
  CHECK(det_polynomial(m) == expect);
}

TEST_CASE("det_polynomial: identity and pinned G1 shape") {
  PolyMat id(5, 5);
  for (Index r = 0; r < 5; ++r)
    for (Index c = 0; c < 5; ++c) id(r, c) = Polynomial(r == c ? 1 : 0);
  CHECK(det_polynomial(id) == Polynomial(1));

  // rows (1, f0, g0), (0,1,0), (0,0,1)
  PolyMat g1(3, 3);
  for (Index r = 0; r < 3; ++r)
    for (Index c = 0; c < 3; ++c) g1(r, c) = Polynomial(0);
  g1(0, 0) = Polynomial(1);
  g1(0, 1) = Polynomial::variable(0);
  g1(0, 2) = Polynomial::variable(1);
  g1(1, 1) = Polynomial(1);
  g1(2, 2) = Polynomial(1);
  CHECK(det_polynomial(g1) == Polynomial(1));
}

TEST_CASE("det_polynomial agrees with Laplace expansion up to 6x6") {
  SeededRng rng(3);
  for (Index n = 1; n <= 6; ++n) {
    for (int rep = 0; rep < 4; ++rep) {
      PolyMat m = random_poly_matrix(rng, n, 4);
      CHECK(det_polynomial(m) == laplace_det<PolyMat, Polynomial>(m));
    }
  }
}

TEST_CASE("det_rational and det_integer agree with Laplace") {
  SeededRng rng(5);
  for (int rep = 0; rep < 8; ++rep) {
    RatMat m = random_rat_matrix(rng, 4, 4);
    CHECK(det_rational(m) == laplace_det<RatMat, Rational>(m));
  }
  IntMat z(3, 3);
  z << Int(2), Int(-1), Int(0), Int(3), Int(4), Int(5), Int(1), Int(1), Int(1);
  CHECK(det_integer(z) == laplace_det<IntMat, Int>(z));
  CHECK_THROWS_AS(det_rational(RatMat(2, 3)), Error);
}

TEST_CASE("kernel_basis examples") {
  RatMat wide(1, 3);
  wide << Rational(1), Rational(2), Rational(-4);
  auto basis = kernel_basis(wide);
  REQUIRE(basis.size() == 2);
  for (const auto& v : basis) CHECK((wide * v).isZero(0));

  RatMat inv(3, 3);
  inv << Rational(2), Rational(0), Rational(1), Rational(1), Rational(1),
      Rational(0), Rational(0), Rational(3), Rational(1);
  REQUIRE(det_rational(inv) != 0);
  CHECK(kernel_basis(inv).empty());
}

TEST_CASE("rank examples and rank-nullity") {
  RatMat zero = RatMat::Zero(4, 4);
  CHECK(rank(zero) == 0);
  RatMat id = RatMat::Identity(7, 7);
  CHECK(rank(id) == 7);

  SeededRng rng(9);
  for (int rep = 0; rep < 10; ++rep) {
    const Index rows = 2 + rep % 4, cols = 2 + (rep * 7) % 5;
    RatMat m = random_rat_matrix(rng, rows, cols);
    auto basis = kernel_basis(m);
    CHECK(rank(m) + static_cast<int>(basis.size()) == cols);
    for (const auto& v : basis) CHECK((m * v).isZero(0));
  }
}

TEST_CASE("finite-field rank bounds the rational rank") {
  SeededRng rng(13);
  int equal_count = 0;
  const int reps = 20;
  for (int rep = 0; rep < reps; ++rep) {
    RatMat m = random_rat_matrix(rng, 4, 5);
    const int rq = rank(m);
    const int rp = rank_mod_p(reduce_mod_p(clear_denominators_rows(m),
                                           kDefaultPrime),
                              kDefaultPrime);
    CHECK(rp <= rq);
    if (rp == rq) ++equal_count;
  }
  CHECK(equal_count == reps);  // a rank drop mod 2^31-1 is astronomically rare
}

TEST_CASE("rank_mod_p validates the modulus") {
  CHECK_THROWS_AS(rank_mod_p(FpMat::Zero(1, 1), 91), ValidationError);
  CHECK(is_prime_u64(kDefaultPrime));
  CHECK(is_prime_u64(2));
  CHECK_FALSE(is_prime_u64(1));
  CHECK_FALSE(is_prime_u64(561));  // Carmichael
}

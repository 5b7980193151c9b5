#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <vector>

#include "predraw/polynomial.hpp"
#include "predraw/rational.hpp"

namespace predraw {

using RatMat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RatVec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using IntMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using PolyMat = Eigen::Matrix<Polynomial, Eigen::Dynamic, Eigen::Dynamic>;
using FpMat = Eigen::Matrix<std::uint64_t, Eigen::Dynamic, Eigen::Dynamic>;
using Index = Eigen::Index;

constexpr std::uint64_t kDefaultPrime = 2147483647ULL;  // 2^31 - 1

// Exact rank over Q.
int rank(const RatMat& m);

// Exact right-kernel basis, in the reduced-echelon parametrization
// (one vector per free column, unit at the free coordinate). Empty
// exactly when m has full column rank.
std::vector<RatVec> kernel_basis(const RatMat& m);

// Exact determinant over Q (square input).
Rational det_rational(const RatMat& m);

// Fraction-free Bareiss determinant over Z (square input).
Int det_integer(IntMat m);

// Exact determinant of a square matrix over Z[n_{h,k}].
// Strategy: repeatedly expand along rows/columns with a single nonzero
// entry and turn same-constant columns into such by row subtraction
// (this consumes the incidence y-columns and pin rows), then run
// fraction-free Bareiss on the residual block, with direct cofactor
// expansion below size 4.
Polynomial det_polynomial(const PolyMat& m);

// Rank over F_p. Entries must already be reduced mod p.
// Throws if p is not prime.
int rank_mod_p(FpMat m, std::uint64_t p);

// Row-wise denominator clearing: returns an integer matrix with the same
// row space (each row scaled by the positive lcm of its denominators).
IntMat clear_denominators_rows(const RatMat& m);

// Entry-wise reduction of an integer matrix mod p.
FpMat reduce_mod_p(const IntMat& m, std::uint64_t p);

bool is_prime_u64(std::uint64_t n);

}  // namespace predraw

#pragma once

#include <Eigen/Core>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "predraw/rational.hpp"

namespace predraw {

// Sparse exponent vector: (variable, exponent) pairs, variables strictly
// increasing, exponents positive.
class Monomial {
 public:
  Monomial() = default;
  static Monomial variable(int var, int exp = 1);

  bool is_one() const { return factors_.empty(); }
  int total_degree() const;
  int degree_in(int var) const;
  int max_exponent() const;
  const std::vector<std::pair<int, int>>& factors() const { return factors_; }

  Monomial operator*(const Monomial& rhs) const;
  bool divides(const Monomial& other) const;
  // Requires divides(other).
  Monomial quotient_of(const Monomial& other) const;

  bool operator==(const Monomial&) const = default;

 private:
  std::vector<std::pair<int, int>> factors_;
};

// Graded lexicographic order. Total degree first; ties broken at the
// highest variable where the exponents differ, larger exponent winning,
// so later variables rank above earlier ones.
int grlex_compare(const Monomial& a, const Monomial& b);

struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return grlex_compare(a, b) < 0;
  }
};

// Sparse multivariate polynomial with integer coefficients.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Int, GrlexLess>;

  Polynomial() = default;
  Polynomial(long value);  // NOLINT: implicit by design (Eigen literals)
  explicit Polynomial(const Int& value);
  static Polynomial variable(int var, int exp = 1);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  int total_degree() const;  // -1 for the zero polynomial
  int degree_in(int var) const;
  int max_exponent() const;
  bool is_multilinear() const { return max_exponent() <= 1; }
  std::vector<int> variables() const;

  const Monomial& leading_monomial() const;  // throws on zero
  const Int& leading_coefficient() const;

  // gcd of the coefficients, nonnegative; 0 for the zero polynomial.
  Int content() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator*(const Polynomial& rhs) const;
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial times(const Int& scalar) const;
  void add_term(const Monomial& m, const Int& coeff);

  // Exact division in Z[x]; throws Error if the division is not exact.
  Polynomial exact_div(const Polynomial& divisor) const;

  Rational evaluate(const std::vector<Rational>& values) const;

  std::string to_string(
      const std::function<std::string(int)>& var_name) const;

  bool operator==(const Polynomial&) const = default;

 private:
  TermMap terms_;
};

// Splits p as c * q with q primitive and its leading coefficient positive
// under the global graded-lex order. Throws on p = 0.
std::pair<Polynomial, Rational> poly_canonicalize(const Polynomial& p);

// Variable naming used in all printed polynomials: for d = 2 the two rows
// are written f_<label> and g_<label>, otherwise n_<label>_<k> with k in
// 1..d. Variable index convention: var = hyperplane_index * d + (k - 1).
std::function<std::string(int)> normal_variable_namer(
    const std::vector<std::string>& hyperplane_labels, int d);

inline int normal_variable_index(int hyperplane, int coordinate, int d) {
  return hyperplane * d + coordinate;
}

}  // namespace predraw

namespace Eigen {

template <>
struct NumTraits<predraw::Polynomial> {
  using Self = predraw::Polynomial;
  using Real = Self;
  using NonInteger = Self;
  using Nested = Self;
  using Literal = long;
  static inline Self epsilon() { return Self(); }
  static inline Self dummy_precision() { return Self(); }
  static inline int digits10() { return 0; }
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 200,
    MulCost = 1000
  };
};

}  // namespace Eigen

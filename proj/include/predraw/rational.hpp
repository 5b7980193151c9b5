#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <string>

#include "predraw/errors.hpp"

namespace predraw {

// Exact scalar types. All arithmetic in the library is exact; no
// floating point is accepted anywhere.
using Int = mpz_class;
using Rational = mpq_class;

// mpq_class(num, den) does not canonicalize on its own.
inline Rational make_rational(const Int& num, const Int& den) {
  if (den == 0) throw ValidationError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Accepts "123", "-7", "3/4", "-3/4". Anything else (including
// floating-point syntax) is rejected.
Rational parse_rational(const std::string& text);

// Canonical form: "n" for integers, "a/b" otherwise, denominator positive.
std::string format_rational(const Rational& q);

inline int sign_of(const Rational& q) { return sgn(q); }
inline int sign_of(const Int& n) { return sgn(n); }

}  // namespace predraw

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Nested = mpq_class;
  using Literal = long;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 30,
    MulCost = 50
  };
};

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpq_class;
  using Nested = mpz_class;
  using Literal = long;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 30,
    MulCost = 50
  };
};

}  // namespace Eigen

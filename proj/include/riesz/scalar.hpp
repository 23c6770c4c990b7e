#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <optional>
#include <string>
#include <string_view>

namespace riesz {

// Exact scalar. GMP keeps values canonical after arithmetic; construction
// from raw numerator/denominator goes through rat() so lowest terms and a
// positive denominator hold from birth.
using Rational = mpq_class;

Rational rat(long num, long den = 1);

// Accepts "a" and "a/b" with optional sign, nothing else.
Rational parse_rational(std::string_view text);

// "a" or "a/b", denominator printed only when it is not 1.
std::string to_string(const Rational& x);

bool is_integer(const Rational& x);
double to_double(const Rational& x);

// x^k for k >= 0.
Rational pow_int(const Rational& x, unsigned long k);

// Exact k-th root of x >= 0, k >= 1; empty when the root is irrational.
std::optional<Rational> exact_root(const Rational& x, unsigned long k);

// floor(2^j * x) / 2^j.
Rational dyadic_floor(const Rational& x, unsigned j);

}  // namespace riesz

namespace Eigen {

// Dense-matrix scalar traits for the exact rational. Costs are rough GMP
// estimates; they only steer expression evaluation heuristics.
template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Nested = mpq_class;
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen

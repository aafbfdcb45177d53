#pragma once

#include <concepts>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace reachkit {

using Integer = mpz_class;
using Rational = mpq_class;

// The two scalar backends: analysis-grade doubles and exact rationals.
template <class T>
concept Scalar = std::same_as<T, double> || std::same_as<T, Rational>;

// Parses "7", "-0.125", "1.5e-3" or "22/7" into an exact rational. Decimal
// strings are read exactly, so "0.1" is 1/10 rather than the nearest double.
Rational parse_rational(std::string_view text);

// Exact conversion of a finite double (every double is a dyadic rational).
Rational exact_rational(double value);

// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

// n! from a process-wide table built once on first use.
Integer factorial(int n);

template <Scalar T>
T scalar_from(const Rational& value) {
  if constexpr (std::same_as<T, double>) {
    return value.get_d();
  } else {
    return value;
  }
}

inline double to_double(double value) { return value; }
inline double to_double(const Rational& value) { return value.get_d(); }

inline double abs_value(double value) { return value < 0 ? -value : value; }
inline Rational abs_value(const Rational& value) { return abs(value); }

template <Scalar T>
T int_power(const T& base, int exponent) {
  T result(1);
  for (int k = 0; k < exponent; ++k) result *= base;
  return result;
}

double inverse_factorial_double(int n);

// 1/n! in the requested backend.
template <Scalar T>
T inverse_factorial(int n) {
  if constexpr (std::same_as<T, double>) {
    return inverse_factorial_double(n);
  } else {
    return Rational(Integer(1), factorial(n));
  }
}

}  // namespace reachkit

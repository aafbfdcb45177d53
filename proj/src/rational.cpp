#include "reachkit/rational.hpp"

#include <cctype>
#include <cmath>
#include <vector>

#include "reachkit/error.hpp"

namespace reachkit {
namespace {

constexpr int kFactorialTableSize = 171;

const std::vector<Integer>& factorial_table() {
  static const std::vector<Integer> table = [] {
    std::vector<Integer> values(kFactorialTableSize);
    values[0] = 1;
    for (int k = 1; k < kFactorialTableSize; ++k) values[k] = values[k - 1] * k;
    return values;
  }();
  return table;
}

const std::vector<double>& inverse_factorial_table() {
  static const std::vector<double> table = [] {
    std::vector<double> values(kFactorialTableSize);
    for (int k = 0; k < kFactorialTableSize; ++k) {
      values[k] = Rational(Integer(1), factorial_table()[k]).get_d();
    }
    return values;
  }();
  return table;
}

[[noreturn]] void bad_number(std::string_view text) {
  throw Error(ErrorCode::kParseError, "not a number: '" + std::string(text) + "'");
}

Integer parse_integer_digits(std::string_view digits, std::string_view whole) {
  if (digits.empty()) bad_number(whole);
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) bad_number(whole);
  }
  return Integer(std::string(digits), 10);
}

Rational parse_decimal(std::string_view text) {
  std::string_view rest = text;
  bool negative = false;
  if (!rest.empty() && (rest.front() == '-' || rest.front() == '+')) {
    negative = rest.front() == '-';
    rest.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = rest.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = rest.substr(e + 1);
    bool exp_negative = false;
    if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
      exp_negative = exp_text.front() == '-';
      exp_text.remove_prefix(1);
    }
    if (exp_text.empty() || exp_text.size() > 6) bad_number(text);
    exponent = parse_integer_digits(exp_text, text).get_si();
    if (exp_negative) exponent = -exponent;
    rest = rest.substr(0, e);
  }
  std::string digits;
  if (auto dot = rest.find('.'); dot != std::string_view::npos) {
    std::string_view integral = rest.substr(0, dot);
    std::string_view fractional = rest.substr(dot + 1);
    if (integral.empty() && fractional.empty()) bad_number(text);
    digits = std::string(integral) + std::string(fractional);
    exponent -= static_cast<long>(fractional.size());
  } else {
    digits = std::string(rest);
  }
  Rational value(parse_integer_digits(digits, text));
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  if (exponent >= 0) {
    value *= scale;
  } else {
    value /= scale;
  }
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) bad_number(text);
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Rational numerator = parse_decimal(text.substr(0, slash));
    Rational denominator = parse_decimal(text.substr(slash + 1));
    if (denominator == 0) {
      throw Error(ErrorCode::kParseError, "zero denominator in '" + std::string(text) + "'");
    }
    return Rational(numerator / denominator);
  }
  return parse_decimal(text);
}

Rational exact_rational(double value) {
  if (!std::isfinite(value)) {
    throw Error(ErrorCode::kInvalidArgument, "non-finite value has no rational form");
  }
  return Rational(value);  // mpq_set_d is exact
}

std::string to_string(const Rational& value) {
  Rational canonical(value);
  canonical.canonicalize();
  if (canonical.get_den() == 1) return canonical.get_num().get_str();
  return canonical.get_num().get_str() + "/" + canonical.get_den().get_str();
}

std::string to_string(const Integer& value) { return value.get_str(); }

Integer factorial(int n) {
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "factorial of a negative number");
  if (n < kFactorialTableSize) return factorial_table()[n];
  Integer value = factorial_table().back();
  for (int k = kFactorialTableSize; k <= n; ++k) value *= k;
  return value;
}

double inverse_factorial_double(int n) {
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "factorial of a negative number");
  if (n < kFactorialTableSize) return inverse_factorial_table()[n];
  return 0.0;  // 1/171! underflows
}

}  // namespace reachkit

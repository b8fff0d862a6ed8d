#include "branchtool/bigint.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace branchtool {

namespace {

// Splits value = mantissa * 2^shift with mantissa holding the top 64 bits.
double log_positive(const BigInt& value) {
  const std::size_t bits = boost::multiprecision::msb(value) + 1;
  if (bits <= 64) {
    return std::log(static_cast<double>(value.convert_to<unsigned long long>()));
  }
  const std::size_t shift = bits - 64;
  const BigInt top = value >> shift;
  const double mantissa = static_cast<double>(top.convert_to<unsigned long long>());
  return std::log(mantissa) + static_cast<double>(shift) * std::log(2.0);
}

}  // namespace

double log_big(const BigInt& value) {
  if (value < 0) {
    throw std::domain_error("log_big: negative argument");
  }
  if (value == 0) {
    return -std::numeric_limits<double>::infinity();
  }
  return log_positive(value);
}

double ratio_to_double(const BigInt& num, const BigInt& den) {
  if (den == 0) {
    throw std::domain_error("ratio_to_double: zero denominator");
  }
  if (num == 0) {
    return 0.0;
  }
  const bool negative = (num < 0) != (den < 0);
  const BigInt a = abs(num);
  const BigInt b = abs(den);
  // Scale so the integer quotient carries at least 64 significant bits.
  const long long na = static_cast<long long>(boost::multiprecision::msb(a));
  const long long nb = static_cast<long long>(boost::multiprecision::msb(b));
  const long long shift = 64 - (na - nb);
  BigInt q;
  if (shift > 0) {
    q = (a << static_cast<unsigned>(shift)) / b;
  } else {
    q = a / (b << static_cast<unsigned>(-shift));
  }
  const double mag = std::ldexp(q.convert_to<double>(), static_cast<int>(-shift));
  return negative ? -mag : mag;
}

}  // namespace branchtool

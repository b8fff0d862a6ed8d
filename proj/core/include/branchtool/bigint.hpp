#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace branchtool {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Natural logarithm of a positive big integer, accurate to double precision
/// for any magnitude. Returns -inf for zero.
double log_big(const BigInt& value);

/// Nearest double to num/den, without overflow for huge operands.
double ratio_to_double(const BigInt& num, const BigInt& den);

inline std::string to_string(const BigInt& value) { return value.str(); }

}  // namespace branchtool

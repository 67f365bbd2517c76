#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace satex {

/// Exact nonnegative subgraph counts. Never rounded.
using BigCount = boost::multiprecision::cpp_int;
/// Exact rationals for the bound evaluators whose formulas are rational.
using Rational = boost::multiprecision::cpp_rational;

BigCount binomial(std::int64_t n, std::int64_t k);
BigCount binomial(const BigCount& n, std::int64_t k);
BigCount factorial(std::int64_t n);
/// n (n-1) ... (n-k+1); zero when k > n.
BigCount falling_factorial(std::int64_t n, std::int64_t k);

double to_double(const BigCount& x);
double to_double(const Rational& x);
std::string to_string(const BigCount& x);
/// "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& x);

/// Parses a decimal nonnegative integer; throws ParameterError otherwise.
BigCount parse_bigcount(const std::string& text);

inline BigCount from_u128(unsigned __int128 v) {
  BigCount hi = static_cast<std::uint64_t>(v >> 64);
  return (hi << 64) + static_cast<std::uint64_t>(v);
}

}  // namespace satex

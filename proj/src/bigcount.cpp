#include "satex/bigcount.hpp"

#include <cctype>

#include "satex/errors.hpp"

namespace satex {

BigCount binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigCount r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigCount binomial(const BigCount& n, std::int64_t k) {
  if (k < 0 || n < 0 || n < k) return 0;
  BigCount r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigCount factorial(std::int64_t n) {
  BigCount r = 1;
  for (std::int64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

BigCount falling_factorial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  BigCount r = 1;
  for (std::int64_t i = 0; i < k; ++i) r *= n - i;
  return r;
}

double to_double(const BigCount& x) { return x.convert_to<double>(); }
double to_double(const Rational& x) { return x.convert_to<double>(); }

std::string to_string(const BigCount& x) { return x.str(); }

std::string to_string(const Rational& x) {
  const BigCount num = boost::multiprecision::numerator(x);
  const BigCount den = boost::multiprecision::denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

BigCount parse_bigcount(const std::string& text) {
  if (text.empty()) throw ParameterError("empty integer");
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) throw ParameterError("not a nonnegative integer: " + text);
  }
  return BigCount(text);
}

}  // namespace satex

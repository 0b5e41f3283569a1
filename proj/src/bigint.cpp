#include "mixmult/bigint.hpp"

#include "mixmult/errors.hpp"

namespace mixmult {

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0) fail(ErrorKind::Internal, "binomial: negative n");
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (std::int64_t j = 1; j <= k; ++j) {
    result *= n - k + j;
    result /= j;
  }
  return result;
}

BigInt factorial(std::int64_t n) {
  if (n < 0) fail(ErrorKind::Internal, "factorial: negative argument");
  BigInt result = 1;
  for (std::int64_t j = 2; j <= n; ++j) result *= j;
  return result;
}

bool is_integral(const BigRat& r) {
  return boost::multiprecision::denominator(r) == 1;
}

BigInt to_integer(const BigRat& r) {
  if (!is_integral(r)) fail(ErrorKind::Internal, "expected integral rational");
  return boost::multiprecision::numerator(r);
}

std::string to_decimal_string(const BigInt& v) { return v.str(); }

std::string to_fraction_string(const BigRat& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace mixmult

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace mixmult {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// C(n, k) over arbitrary-precision integers; 0 for k < 0 or k > n (n >= 0).
BigInt binomial(std::int64_t n, std::int64_t k);

BigInt factorial(std::int64_t n);

/// True iff r has denominator 1.
bool is_integral(const BigRat& r);

/// Numerator of an integral rational.
BigInt to_integer(const BigRat& r);

std::string to_decimal_string(const BigInt& v);

/// "p" for integers, "p/q" otherwise (canonical lowest terms).
std::string to_fraction_string(const BigRat& r);

}  // namespace mixmult

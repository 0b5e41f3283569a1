#pragma once

#include <map>
#include <string>
#include <vector>

#include "mixmult/bigint.hpp"
#include "mixmult/ring.hpp"

namespace mixmult {

/// Univariate polynomial with exact rational coefficients, dense by degree.
class UniPolynomial {
 public:
  UniPolynomial() = default;
  explicit UniPolynomial(std::vector<BigRat> coeffs);

  static UniPolynomial constant(const BigRat& c);
  /// The binomial coefficient C(x - shift, k) expanded in powers of x.
  static UniPolynomial falling_binomial(Exponent shift, std::int64_t k);

  bool is_zero() const { return coeffs_.empty(); }
  std::int64_t degree() const;  // -1 for the zero polynomial
  const std::vector<BigRat>& coefficients() const { return coeffs_; }
  BigRat coefficient(std::size_t k) const;
  BigRat leading_coefficient() const;

  BigRat evaluate(const BigRat& x) const;
  BigInt evaluate_int(Exponent x) const;  // value must be integral

  UniPolynomial operator+(const UniPolynomial& other) const;
  UniPolynomial operator*(const UniPolynomial& other) const;
  UniPolynomial scaled(const BigRat& c) const;

  bool operator==(const UniPolynomial& other) const {
    return coeffs_ == other.coeffs_;
  }

  std::string to_string(const std::string& var = "n") const;

 private:
  void trim();
  std::vector<BigRat> coeffs_;  // coeffs_[k] multiplies x^k
};

/// Polynomial in d counters with exact rational coefficients, plus the point
/// at and beyond which it matches the counting function it was fitted to and
/// the validation window used.
class MultiPolynomial {
 public:
  using Key = std::vector<std::int64_t>;  // exponent of each counter

  MultiPolynomial() = default;
  MultiPolynomial(std::size_t dims, std::map<Key, BigRat> coeffs);

  static MultiPolynomial zero(std::size_t dims);
  static MultiPolynomial constant(std::size_t dims, const BigRat& c);

  std::size_t dims() const { return dims_; }
  const std::map<Key, BigRat>& coefficients() const { return coeffs_; }
  BigRat coefficient(const Key& key) const;
  bool is_zero() const { return coeffs_.empty(); }
  std::int64_t total_degree() const;  // -1 for the zero polynomial

  BigRat evaluate(const MultiDegree& point) const;
  BigInt evaluate_int(const MultiDegree& point) const;  // must be integral

  /// Restriction to equal counters: p(n) = P(n,...,n).
  UniPolynomial diagonal_restriction() const;

  /// Substitutes counter i -> i-th entry of `shift` + counter, i.e. a
  /// translate of the polynomial. Used to express fits made at a base point.
  MultiPolynomial shifted(const MultiDegree& shift) const;

  MultiPolynomial operator+(const MultiPolynomial& other) const;
  MultiPolynomial operator*(const MultiPolynomial& other) const;
  MultiPolynomial scaled(const BigRat& c) const;

  bool operator==(const MultiPolynomial& other) const {
    return dims_ == other.dims_ && coeffs_ == other.coeffs_;
  }

  std::string to_string(const std::vector<std::string>& vars) const;

  /// Fit provenance: the counting function equals the polynomial at every
  /// point componentwise >= base, confirmed on `validated_window` extra
  /// points per axis.
  MultiDegree base;
  int validated_window = 0;

 private:
  std::size_t dims_ = 0;
  std::map<Key, BigRat> coeffs_;  // zero coefficients are never stored
};

}  // namespace mixmult

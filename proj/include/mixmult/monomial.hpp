#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mixmult/ring.hpp"

namespace mixmult {

/// A monomial in a fixed ambient ring, stored as a dense exponent vector of
/// length spec.var_count(). Exponents are non-negative machine integers;
/// products are overflow-checked.
class Monomial {
 public:
  explicit Monomial(std::vector<Exponent> exponents);

  static Monomial unit(std::size_t var_count);
  static Monomial variable(std::size_t var_count, std::size_t var);

  /// Builds x1^e1*...*xk^ek from named factors; unknown names raise a
  /// validation error.
  static Monomial from_named_factors(
      const BlockRingSpec& spec,
      const std::vector<std::pair<std::string, Exponent>>& factors);

  std::size_t var_count() const { return exponents_.size(); }
  Exponent exponent(std::size_t var) const { return exponents_[var]; }
  const std::vector<Exponent>& exponents() const { return exponents_; }

  bool is_unit() const;
  Exponent total_degree() const;

  bool operator==(const Monomial& other) const {
    return exponents_ == other.exponents_;
  }
  /// Lexicographic on exponent vectors; used only as a canonical order.
  bool operator<(const Monomial& other) const {
    return exponents_ < other.exponents_;
  }

 private:
  std::vector<Exponent> exponents_;
};

Monomial multiply(const Monomial& a, const Monomial& b);
Monomial power(const Monomial& a, Exponent k);
bool divides(const Monomial& a, const Monomial& b);  // a | b
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);

/// a / gcd(a, b): the colon quotient of a single generator.
Monomial quotient_by_gcd(const Monomial& a, const Monomial& b);

/// Exponents of a clamped to <= 1.
Monomial squarefree_part(const Monomial& a);

/// a with the exponents of every variable in supp(b) set to zero.
Monomial erase_support(const Monomial& a, const Monomial& b);

/// Blockwise exponent sums of m.
MultiDegree multidegree_of(const Monomial& m, const BlockRingSpec& spec);

std::string to_string(const Monomial& m, const BlockRingSpec& spec);

}  // namespace mixmult

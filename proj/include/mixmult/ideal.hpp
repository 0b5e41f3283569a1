#pragma once

#include <vector>

#include "mixmult/monomial.hpp"

namespace mixmult {

/// A monomial ideal held by its minimal generators: a divisibility antichain,
/// sorted into a canonical order. The zero ideal has no generators; the unit
/// ideal is generated by the unit monomial. Values are immutable.
class MonomialIdeal {
 public:
  static MonomialIdeal zero(std::size_t var_count);
  static MonomialIdeal unit(std::size_t var_count);

  /// Minimalizes: drops every generator divisible by another. The result
  /// generates the same ideal and is independent of input order.
  static MonomialIdeal from_generators(std::size_t var_count,
                                       std::vector<Monomial> gens);

  std::size_t var_count() const { return var_count_; }
  const std::vector<Monomial>& generators() const { return gens_; }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_unit(); }

  /// Membership: some generator divides m.
  bool contains(const Monomial& m) const;

  /// Ideal containment: every generator of other lies in *this.
  bool contains(const MonomialIdeal& other) const;

  /// Equality of ideals; canonical generators make this structural.
  bool operator==(const MonomialIdeal& other) const {
    return var_count_ == other.var_count_ && gens_ == other.gens_;
  }

  /// Componentwise max of generator multidegrees (all zeros for the zero
  /// ideal).
  MultiDegree max_generator_degree(const BlockRingSpec& spec) const;

  Exponent max_generator_total_degree() const;

 private:
  MonomialIdeal(std::size_t var_count, std::vector<Monomial> gens)
      : var_count_(var_count), gens_(std::move(gens)) {}

  std::size_t var_count_ = 0;
  std::vector<Monomial> gens_;
};

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);

/// power(I, 0) is the unit ideal.
MonomialIdeal power(const MonomialIdeal& a, Exponent k);

/// Generated by pairwise lcms.
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);

/// I : m, computed generator-wise as g / gcd(g, m).
MonomialIdeal colon_by_monomial(const MonomialIdeal& ideal, const Monomial& m);

/// I : m^infinity: supp(m) exponents erased from every generator. Equals the
/// fixed point of repeated colon by m.
MonomialIdeal saturate_by_monomial(const MonomialIdeal& ideal, const Monomial& m);

/// I : Q^infinity as the intersection of the single-monomial saturations over
/// the generators of Q. Q must be nonzero.
MonomialIdeal saturate_by_ideal(const MonomialIdeal& ideal, const MonomialIdeal& q);

/// Squarefree parts of the generators.
MonomialIdeal radical(const MonomialIdeal& ideal);

/// All products of one variable from each block; saturating by this ideal is
/// saturation by the (1,...,1)-graded piece: each of its powers Q^n is
/// spanned by monomials of multidegree (n,...,n) and conversely every such
/// monomial is a multiple of a product of n choices per block, so I : Q^inf
/// agrees with the saturation by all large diagonal pieces.
MonomialIdeal irrelevant_products(const BlockRingSpec& spec);

std::string to_string(const MonomialIdeal& ideal, const BlockRingSpec& spec);

}  // namespace mixmult

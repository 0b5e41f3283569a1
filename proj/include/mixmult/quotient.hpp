#pragma once

#include <cstdint>

#include "mixmult/ideal.hpp"

namespace mixmult {

/// The quotient M = R/I of a multigraded polynomial ring by a monomial ideal.
/// Graded-piece lengths are standard-monomial counts.
struct GradedQuotient {
  GradedQuotient(BlockRingSpec spec_in, MonomialIdeal ideal_in);

  BlockRingSpec spec;
  MonomialIdeal ideal;
};

/// Default cap on the number of monomials a brute-force enumeration may
/// visit.
inline constexpr std::uint64_t kDefaultEnumerationGuard = 4'000'000;

/// Generator count at or below which graded_count uses the subset-lcm
/// inclusion-exclusion traversal.
inline constexpr std::size_t kInclusionExclusionGeneratorLimit = 22;

/// Number of standard monomials of multidegree n (zero if any entry is
/// negative). Inclusion-exclusion over generator subsets with memoized lcm
/// states; falls back to brute-force enumeration past
/// kInclusionExclusionGeneratorLimit generators.
BigInt graded_count(const GradedQuotient& m, const MultiDegree& n);

/// Independent counting oracle: enumerates every monomial of multidegree n
/// and counts non-members of the ideal. Raises a resource error when the
/// enumeration would exceed `guard` monomials.
BigInt brute_force_count(const GradedQuotient& m, const MultiDegree& n,
                         std::uint64_t guard = kDefaultEnumerationGuard);

/// True iff every graded piece in all large multidegrees vanishes:
/// each product of one variable per block lies in the radical of the ideal.
bool vanishing_test(const GradedQuotient& m);

/// Quotient by additionally killing the given variables.
GradedQuotient cut(const GradedQuotient& m, const std::vector<std::size_t>& vars);

}  // namespace mixmult

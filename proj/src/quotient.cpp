#include "mixmult/quotient.hpp"

#include <map>

#include "mixmult/errors.hpp"

namespace mixmult {

GradedQuotient::GradedQuotient(BlockRingSpec spec_in, MonomialIdeal ideal_in)
    : spec(std::move(spec_in)), ideal(std::move(ideal_in)) {
  if (ideal.var_count() != spec.var_count())
    fail(ErrorKind::Validation, "ideal does not live in the given ring");
}

namespace {

/// Signed sum over subsets of gens[i..] extending the accumulated lcm.
/// Cancellation: once some remaining generator divides the lcm, subsets pair
/// off and the branch contributes nothing.
class InclusionExclusion {
 public:
  InclusionExclusion(const BlockRingSpec& spec,
                     const std::vector<Monomial>& gens, const MultiDegree& n)
      : spec_(spec), gens_(gens), target_(n) {}

  BigInt run() {
    return walk(0, Monomial::unit(spec_.var_count()));
  }

 private:
  BigInt walk(std::size_t i, const Monomial& accumulated) {
    const MultiDegree remaining =
        subtract(target_, multidegree_of(accumulated, spec_));
    if (!all_nonnegative(remaining)) return 0;
    if (i == gens_.size()) return count_free_monomials(spec_, remaining);
    const auto key = std::make_pair(i, accumulated.exponents());
    auto hit = memo_.find(key);
    if (hit != memo_.end()) return hit->second;
    BigInt value;
    if (divides(gens_[i], accumulated)) {
      value = 0;
    } else {
      value = walk(i + 1, accumulated) - walk(i + 1, lcm(accumulated, gens_[i]));
    }
    memo_.emplace(key, value);
    return value;
  }

  const BlockRingSpec& spec_;
  const std::vector<Monomial>& gens_;
  const MultiDegree& target_;
  std::map<std::pair<std::size_t, std::vector<Exponent>>, BigInt> memo_;
};

/// Visits every monomial of multidegree n; the callback returns false to
/// abort. Returns the number visited.
template <typename Callback>
std::uint64_t enumerate_monomials(const BlockRingSpec& spec,
                                  const MultiDegree& n, Callback&& callback) {
  // Per-block composition odometer over a shared exponent vector.
  const std::size_t d = spec.block_count();
  std::vector<Exponent> exps(spec.var_count(), 0);
  for (std::size_t b = 0; b < d; ++b) exps[spec.var_index(b, 0)] = n[b];

  std::uint64_t visited = 0;
  while (true) {
    ++visited;
    if (!callback(exps)) return visited;
    // Advance the first block with a next composition; reset earlier ones.
    std::size_t b = 0;
    for (; b < d; ++b) {
      const std::size_t lo = spec.var_index(b, 0);
      const std::size_t width = spec.block_size(b);
      // Next composition of n[b] into `width` parts, lexicographic odometer:
      // move one unit from the first positive entry (after position 0) back,
      // or carry.
      if (width == 1) continue;
      std::size_t k = 0;
      while (k + 1 < width && exps[lo + k] == 0) ++k;
      if (k + 1 == width) continue;  // all mass at the end: block exhausted
      const Exponent head = exps[lo + k];
      exps[lo + k] = 0;
      exps[lo] = head - 1;
      exps[lo + k + 1] += 1;
      break;
    }
    if (b == d) return visited;
    for (std::size_t r = 0; r < b; ++r) {
      const std::size_t lo = spec.var_index(r, 0);
      for (std::size_t k = 0; k < spec.block_size(r); ++k) exps[lo + k] = 0;
      exps[lo] = n[r];
    }
  }
}

}  // namespace

BigInt graded_count(const GradedQuotient& m, const MultiDegree& n) {
  if (n.size() != m.spec.block_count())
    fail(ErrorKind::Validation, "multidegree length does not match ring");
  if (!all_nonnegative(n)) return 0;
  const auto& gens = m.ideal.generators();
  if (gens.size() > kInclusionExclusionGeneratorLimit)
    return brute_force_count(m, n);
  return InclusionExclusion(m.spec, gens, n).run();
}

BigInt brute_force_count(const GradedQuotient& m, const MultiDegree& n,
                         std::uint64_t guard) {
  if (n.size() != m.spec.block_count())
    fail(ErrorKind::Validation, "multidegree length does not match ring");
  if (!all_nonnegative(n)) return 0;
  const BigInt total = count_free_monomials(m.spec, n);
  if (total > guard)
    fail(ErrorKind::Resource,
         "enumeration of " + total.str() + " monomials exceeds the guard of " +
             std::to_string(guard));
  BigInt count = 0;
  enumerate_monomials(m.spec, n, [&](const std::vector<Exponent>& exps) {
    if (!m.ideal.contains(Monomial(exps))) ++count;
    return true;
  });
  return count;
}

bool vanishing_test(const GradedQuotient& m) {
  const MonomialIdeal rad = radical(m.ideal);
  for (const Monomial& q : irrelevant_products(m.spec).generators())
    if (!rad.contains(q)) return false;
  return true;
}

GradedQuotient cut(const GradedQuotient& m, const std::vector<std::size_t>& vars) {
  std::vector<Monomial> gens = m.ideal.generators();
  for (std::size_t v : vars) {
    if (v >= m.spec.var_count())
      fail(ErrorKind::Validation, "variable index out of range");
    gens.push_back(Monomial::variable(m.spec.var_count(), v));
  }
  return GradedQuotient(
      m.spec, MonomialIdeal::from_generators(m.spec.var_count(), std::move(gens)));
}

}  // namespace mixmult

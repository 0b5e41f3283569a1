#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mixmult/bigint.hpp"

namespace mixmult {

using Exponent = std::int64_t;

/// A d-tuple of graded degrees. Entries may go negative in intermediate
/// arithmetic (shifted counts); graded pieces at such degrees are zero.
using MultiDegree = std::vector<Exponent>;

MultiDegree add(const MultiDegree& a, const MultiDegree& b);
MultiDegree subtract(const MultiDegree& a, const MultiDegree& b);
bool all_nonnegative(const MultiDegree& n);
bool componentwise_leq(const MultiDegree& a, const MultiDegree& b);
std::string degree_to_string(const MultiDegree& n);

/// Variable layout of a standard d-graded polynomial ring: block i carries the
/// variables of multidegree e_i. Variables are indexed globally, block-major.
class BlockRingSpec {
 public:
  explicit BlockRingSpec(std::vector<std::vector<std::string>> blocks);

  std::size_t block_count() const { return blocks_.size(); }           // d
  std::size_t block_size(std::size_t i) const { return blocks_[i].size(); }
  std::size_t var_count() const { return names_.size(); }              // q
  const std::vector<std::vector<std::string>>& blocks() const { return blocks_; }

  std::size_t block_of(std::size_t var) const { return block_of_[var]; }
  const std::string& var_name(std::size_t var) const { return names_[var]; }

  /// Global index of a variable name, if declared.
  std::optional<std::size_t> find_var(std::string_view name) const;

  /// Global index, raising a validation error for unknown names.
  std::size_t require_var(std::string_view name) const;

  /// Global index of position `pos` within block `block`.
  std::size_t var_index(std::size_t block, std::size_t pos) const;

  bool operator==(const BlockRingSpec& other) const {
    return blocks_ == other.blocks_;
  }

 private:
  std::vector<std::vector<std::string>> blocks_;
  std::vector<std::string> names_;       // flattened, block-major
  std::vector<std::size_t> block_of_;    // global var index -> block index
  std::vector<std::size_t> block_start_; // block index -> first global index
  std::map<std::string, std::size_t, std::less<>> index_;
};

/// Number of monomials of multidegree n in the free ring:
/// prod_i C(n_i + b_i - 1, b_i - 1). Zero when some entry is negative.
BigInt count_free_monomials(const BlockRingSpec& spec, const MultiDegree& n);

}  // namespace mixmult

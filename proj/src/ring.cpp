#include "mixmult/ring.hpp"

#include <set>
#include <sstream>

#include "mixmult/errors.hpp"

namespace mixmult {

MultiDegree add(const MultiDegree& a, const MultiDegree& b) {
  if (a.size() != b.size()) fail(ErrorKind::Internal, "degree length mismatch");
  MultiDegree out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

MultiDegree subtract(const MultiDegree& a, const MultiDegree& b) {
  if (a.size() != b.size()) fail(ErrorKind::Internal, "degree length mismatch");
  MultiDegree out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

bool all_nonnegative(const MultiDegree& n) {
  for (Exponent e : n)
    if (e < 0) return false;
  return true;
}

bool componentwise_leq(const MultiDegree& a, const MultiDegree& b) {
  if (a.size() != b.size()) fail(ErrorKind::Internal, "degree length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

std::string degree_to_string(const MultiDegree& n) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (i > 0) out << ',';
    out << n[i];
  }
  out << ')';
  return out.str();
}

BlockRingSpec::BlockRingSpec(std::vector<std::vector<std::string>> blocks)
    : blocks_(std::move(blocks)) {
  if (blocks_.empty()) fail(ErrorKind::Validation, "ring needs at least one block");
  std::set<std::string> seen;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (blocks_[b].empty())
      fail(ErrorKind::Validation, "ring block " + std::to_string(b + 1) + " is empty");
    block_start_.push_back(names_.size());
    for (const std::string& name : blocks_[b]) {
      if (name.empty()) fail(ErrorKind::Validation, "empty variable name");
      if (!seen.insert(name).second)
        fail(ErrorKind::Validation, "duplicate variable name '" + name + "'");
      index_.emplace(name, names_.size());
      names_.push_back(name);
      block_of_.push_back(b);
    }
  }
}

std::optional<std::size_t> BlockRingSpec::find_var(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t BlockRingSpec::require_var(std::string_view name) const {
  auto found = find_var(name);
  if (!found)
    fail(ErrorKind::Validation, "unknown variable '" + std::string(name) + "'");
  return *found;
}

std::size_t BlockRingSpec::var_index(std::size_t block, std::size_t pos) const {
  if (block >= blocks_.size() || pos >= blocks_[block].size())
    fail(ErrorKind::Internal, "variable position out of range");
  return block_start_[block] + pos;
}

BigInt count_free_monomials(const BlockRingSpec& spec, const MultiDegree& n) {
  if (n.size() != spec.block_count())
    fail(ErrorKind::Validation, "multidegree length does not match ring");
  BigInt total = 1;
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (n[i] < 0) return 0;
    const auto b = static_cast<std::int64_t>(spec.block_size(i));
    total *= binomial(n[i] + b - 1, b - 1);
  }
  return total;
}

}  // namespace mixmult

#include "mixmult/ideal.hpp"

#include <algorithm>
#include <sstream>

#include "mixmult/errors.hpp"

namespace mixmult {

MonomialIdeal MonomialIdeal::zero(std::size_t var_count) {
  return MonomialIdeal(var_count, {});
}

MonomialIdeal MonomialIdeal::unit(std::size_t var_count) {
  return MonomialIdeal(var_count, {Monomial::unit(var_count)});
}

MonomialIdeal MonomialIdeal::from_generators(std::size_t var_count,
                                             std::vector<Monomial> gens) {
  for (const Monomial& g : gens)
    if (g.var_count() != var_count)
      fail(ErrorKind::Validation, "generator does not live in the given ring");
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> minimal;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
      if (i != j && divides(gens[j], gens[i])) redundant = true;
    if (!redundant) minimal.push_back(gens[i]);
  }
  return MonomialIdeal(var_count, std::move(minimal));
}

bool MonomialIdeal::contains(const Monomial& m) const {
  if (m.var_count() != var_count_)
    fail(ErrorKind::Validation, "monomial does not live in the given ring");
  for (const Monomial& g : gens_)
    if (divides(g, m)) return true;
  return false;
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  for (const Monomial& g : other.gens_)
    if (!contains(g)) return false;
  return true;
}

MultiDegree MonomialIdeal::max_generator_degree(const BlockRingSpec& spec) const {
  MultiDegree out(spec.block_count(), 0);
  for (const Monomial& g : gens_) {
    const MultiDegree d = multidegree_of(g, spec);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::max(out[i], d[i]);
  }
  return out;
}

Exponent MonomialIdeal::max_generator_total_degree() const {
  Exponent out = 0;
  for (const Monomial& g : gens_) out = std::max(out, g.total_degree());
  return out;
}

namespace {
void check_same_ring(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.var_count() != b.var_count())
    fail(ErrorKind::Validation, "ideals from different rings");
}
}  // namespace

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_same_ring(a, b);
  std::vector<Monomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal::from_generators(a.var_count(), std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_same_ring(a, b);
  std::vector<Monomial> gens;
  gens.reserve(a.generators().size() * b.generators().size());
  for (const Monomial& x : a.generators())
    for (const Monomial& y : b.generators()) gens.push_back(multiply(x, y));
  return MonomialIdeal::from_generators(a.var_count(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& a, Exponent k) {
  if (k < 0) fail(ErrorKind::Validation, "negative ideal power");
  MonomialIdeal result = MonomialIdeal::unit(a.var_count());
  for (Exponent j = 0; j < k; ++j) result = product(result, a);
  return result;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_same_ring(a, b);
  std::vector<Monomial> gens;
  gens.reserve(a.generators().size() * b.generators().size());
  for (const Monomial& x : a.generators())
    for (const Monomial& y : b.generators()) gens.push_back(lcm(x, y));
  return MonomialIdeal::from_generators(a.var_count(), std::move(gens));
}

MonomialIdeal colon_by_monomial(const MonomialIdeal& ideal, const Monomial& m) {
  if (m.var_count() != ideal.var_count())
    fail(ErrorKind::Validation, "monomial does not live in the given ring");
  std::vector<Monomial> gens;
  gens.reserve(ideal.generators().size());
  for (const Monomial& g : ideal.generators())
    gens.push_back(quotient_by_gcd(g, m));
  return MonomialIdeal::from_generators(ideal.var_count(), std::move(gens));
}

MonomialIdeal saturate_by_monomial(const MonomialIdeal& ideal, const Monomial& m) {
  if (m.var_count() != ideal.var_count())
    fail(ErrorKind::Validation, "monomial does not live in the given ring");
  std::vector<Monomial> gens;
  gens.reserve(ideal.generators().size());
  for (const Monomial& g : ideal.generators())
    gens.push_back(erase_support(g, m));
  return MonomialIdeal::from_generators(ideal.var_count(), std::move(gens));
}

MonomialIdeal saturate_by_ideal(const MonomialIdeal& ideal, const MonomialIdeal& q) {
  check_same_ring(ideal, q);
  if (q.is_zero())
    fail(ErrorKind::Validation, "saturation by the zero ideal");
  std::vector<MonomialIdeal> parts;
  parts.reserve(q.generators().size());
  for (const Monomial& g : q.generators()) {
    MonomialIdeal part = saturate_by_monomial(ideal, g);
    if (std::find(parts.begin(), parts.end(), part) == parts.end())
      parts.push_back(std::move(part));
  }
  MonomialIdeal result = std::move(parts.front());
  for (std::size_t i = 1; i < parts.size(); ++i)
    result = intersect(result, parts[i]);
  return result;
}

MonomialIdeal radical(const MonomialIdeal& ideal) {
  std::vector<Monomial> gens;
  gens.reserve(ideal.generators().size());
  for (const Monomial& g : ideal.generators())
    gens.push_back(squarefree_part(g));
  return MonomialIdeal::from_generators(ideal.var_count(), std::move(gens));
}

MonomialIdeal irrelevant_products(const BlockRingSpec& spec) {
  std::vector<Monomial> gens;
  std::vector<std::size_t> choice(spec.block_count(), 0);
  while (true) {
    std::vector<Exponent> exps(spec.var_count(), 0);
    for (std::size_t b = 0; b < spec.block_count(); ++b)
      exps[spec.var_index(b, choice[b])] += 1;
    gens.emplace_back(std::move(exps));
    std::size_t b = 0;
    while (b < spec.block_count()) {
      if (++choice[b] < spec.block_size(b)) break;
      choice[b] = 0;
      ++b;
    }
    if (b == spec.block_count()) break;
  }
  return MonomialIdeal::from_generators(spec.var_count(), std::move(gens));
}

std::string to_string(const MonomialIdeal& ideal, const BlockRingSpec& spec) {
  if (ideal.is_zero()) return "(0)";
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < ideal.generators().size(); ++i) {
    if (i > 0) out << ", ";
    out << to_string(ideal.generators()[i], spec);
  }
  out << ')';
  return out.str();
}

}  // namespace mixmult

#include "mixmult/monomial.hpp"

#include <sstream>

#include "mixmult/errors.hpp"

namespace mixmult {

namespace {

// Exponents stay well below this; products of huge powers are rejected
// instead of wrapping.
constexpr Exponent kMaxExponent = Exponent{1} << 40;

Exponent checked_add(Exponent a, Exponent b) {
  const Exponent sum = a + b;
  if (sum > kMaxExponent) fail(ErrorKind::Resource, "monomial exponent overflow");
  return sum;
}

}  // namespace

Monomial::Monomial(std::vector<Exponent> exponents)
    : exponents_(std::move(exponents)) {
  for (Exponent e : exponents_) {
    if (e < 0) fail(ErrorKind::Validation, "negative exponent in monomial");
    if (e > kMaxExponent) fail(ErrorKind::Resource, "monomial exponent overflow");
  }
}

Monomial Monomial::unit(std::size_t var_count) {
  return Monomial(std::vector<Exponent>(var_count, 0));
}

Monomial Monomial::variable(std::size_t var_count, std::size_t var) {
  if (var >= var_count) fail(ErrorKind::Internal, "variable index out of range");
  std::vector<Exponent> exps(var_count, 0);
  exps[var] = 1;
  return Monomial(std::move(exps));
}

Monomial Monomial::from_named_factors(
    const BlockRingSpec& spec,
    const std::vector<std::pair<std::string, Exponent>>& factors) {
  std::vector<Exponent> exps(spec.var_count(), 0);
  for (const auto& [name, exp] : factors) {
    if (exp < 0) fail(ErrorKind::Validation, "negative exponent for '" + name + "'");
    const std::size_t var = spec.require_var(name);
    exps[var] = checked_add(exps[var], exp);
  }
  return Monomial(std::move(exps));
}

bool Monomial::is_unit() const {
  for (Exponent e : exponents_)
    if (e != 0) return false;
  return true;
}

Exponent Monomial::total_degree() const {
  Exponent total = 0;
  for (Exponent e : exponents_) total = checked_add(total, e);
  return total;
}

namespace {
void check_same_ring(const Monomial& a, const Monomial& b) {
  if (a.var_count() != b.var_count())
    fail(ErrorKind::Internal, "monomials from different rings");
}
}  // namespace

Monomial multiply(const Monomial& a, const Monomial& b) {
  check_same_ring(a, b);
  std::vector<Exponent> exps(a.var_count());
  for (std::size_t v = 0; v < exps.size(); ++v)
    exps[v] = checked_add(a.exponent(v), b.exponent(v));
  return Monomial(std::move(exps));
}

Monomial power(const Monomial& a, Exponent k) {
  if (k < 0) fail(ErrorKind::Validation, "negative monomial power");
  std::vector<Exponent> exps(a.var_count());
  for (std::size_t v = 0; v < exps.size(); ++v) {
    const Exponent e = a.exponent(v) * k;
    if (k != 0 && e / k != a.exponent(v))
      fail(ErrorKind::Resource, "monomial exponent overflow");
    if (e > kMaxExponent) fail(ErrorKind::Resource, "monomial exponent overflow");
    exps[v] = e;
  }
  return Monomial(std::move(exps));
}

bool divides(const Monomial& a, const Monomial& b) {
  check_same_ring(a, b);
  for (std::size_t v = 0; v < a.var_count(); ++v)
    if (a.exponent(v) > b.exponent(v)) return false;
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  check_same_ring(a, b);
  std::vector<Exponent> exps(a.var_count());
  for (std::size_t v = 0; v < exps.size(); ++v)
    exps[v] = std::max(a.exponent(v), b.exponent(v));
  return Monomial(std::move(exps));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  check_same_ring(a, b);
  std::vector<Exponent> exps(a.var_count());
  for (std::size_t v = 0; v < exps.size(); ++v)
    exps[v] = std::min(a.exponent(v), b.exponent(v));
  return Monomial(std::move(exps));
}

Monomial quotient_by_gcd(const Monomial& a, const Monomial& b) {
  check_same_ring(a, b);
  std::vector<Exponent> exps(a.var_count());
  for (std::size_t v = 0; v < exps.size(); ++v)
    exps[v] = a.exponent(v) - std::min(a.exponent(v), b.exponent(v));
  return Monomial(std::move(exps));
}

Monomial squarefree_part(const Monomial& a) {
  std::vector<Exponent> exps(a.var_count());
  for (std::size_t v = 0; v < exps.size(); ++v)
    exps[v] = a.exponent(v) > 0 ? 1 : 0;
  return Monomial(std::move(exps));
}

Monomial erase_support(const Monomial& a, const Monomial& b) {
  check_same_ring(a, b);
  std::vector<Exponent> exps(a.var_count());
  for (std::size_t v = 0; v < exps.size(); ++v)
    exps[v] = b.exponent(v) > 0 ? 0 : a.exponent(v);
  return Monomial(std::move(exps));
}

MultiDegree multidegree_of(const Monomial& m, const BlockRingSpec& spec) {
  if (m.var_count() != spec.var_count())
    fail(ErrorKind::Validation, "monomial does not live in the given ring");
  MultiDegree degree(spec.block_count(), 0);
  for (std::size_t v = 0; v < m.var_count(); ++v)
    degree[spec.block_of(v)] += m.exponent(v);
  return degree;
}

std::string to_string(const Monomial& m, const BlockRingSpec& spec) {
  if (m.var_count() != spec.var_count())
    fail(ErrorKind::Validation, "monomial does not live in the given ring");
  if (m.is_unit()) return "1";
  std::ostringstream out;
  bool first = true;
  for (std::size_t v = 0; v < m.var_count(); ++v) {
    if (m.exponent(v) == 0) continue;
    if (!first) out << '*';
    first = false;
    out << spec.var_name(v);
    if (m.exponent(v) > 1) out << '^' << m.exponent(v);
  }
  return out.str();
}

}  // namespace mixmult

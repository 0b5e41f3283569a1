#include "mixmult/polynomial.hpp"

#include <sstream>

#include "mixmult/errors.hpp"

namespace mixmult {

UniPolynomial::UniPolynomial(std::vector<BigRat> coeffs)
    : coeffs_(std::move(coeffs)) {
  trim();
}

UniPolynomial UniPolynomial::constant(const BigRat& c) {
  return UniPolynomial({c});
}

UniPolynomial UniPolynomial::falling_binomial(Exponent shift, std::int64_t k) {
  // C(x - shift, k) = prod_{j=0}^{k-1} (x - shift - j) / k!
  UniPolynomial result = constant(1);
  for (std::int64_t j = 0; j < k; ++j)
    result = result * UniPolynomial({BigRat(-(shift + j)), BigRat(1)});
  return result.scaled(BigRat(1, factorial(k)));
}

void UniPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::int64_t UniPolynomial::degree() const {
  return static_cast<std::int64_t>(coeffs_.size()) - 1;
}

BigRat UniPolynomial::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : BigRat(0);
}

BigRat UniPolynomial::leading_coefficient() const {
  if (coeffs_.empty()) return 0;
  return coeffs_.back();
}

BigRat UniPolynomial::evaluate(const BigRat& x) const {
  BigRat acc = 0;
  for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k];
  return acc;
}

BigInt UniPolynomial::evaluate_int(Exponent x) const {
  return to_integer(evaluate(BigRat(x)));
}

UniPolynomial UniPolynomial::operator+(const UniPolynomial& other) const {
  std::vector<BigRat> out(std::max(coeffs_.size(), other.coeffs_.size()), BigRat(0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) out[k] += coeffs_[k];
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) out[k] += other.coeffs_[k];
  return UniPolynomial(std::move(out));
}

UniPolynomial UniPolynomial::operator*(const UniPolynomial& other) const {
  if (coeffs_.empty() || other.coeffs_.empty()) return UniPolynomial();
  std::vector<BigRat> out(coeffs_.size() + other.coeffs_.size() - 1, BigRat(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
      out[i + j] += coeffs_[i] * other.coeffs_[j];
  return UniPolynomial(std::move(out));
}

UniPolynomial UniPolynomial::scaled(const BigRat& c) const {
  std::vector<BigRat> out = coeffs_;
  for (BigRat& v : out) v *= c;
  return UniPolynomial(std::move(out));
}

std::string UniPolynomial::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    if (coeffs_[k] == 0) continue;
    if (!first) out << " + ";
    first = false;
    out << to_fraction_string(coeffs_[k]);
    if (k >= 1) out << '*' << var;
    if (k >= 2) out << '^' << k;
  }
  return out.str();
}

MultiPolynomial::MultiPolynomial(std::size_t dims, std::map<Key, BigRat> coeffs)
    : dims_(dims), coeffs_(std::move(coeffs)) {
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    if (it->first.size() != dims_)
      fail(ErrorKind::Internal, "polynomial key dimension mismatch");
    it = it->second == 0 ? coeffs_.erase(it) : std::next(it);
  }
}

MultiPolynomial MultiPolynomial::zero(std::size_t dims) {
  return MultiPolynomial(dims, {});
}

MultiPolynomial MultiPolynomial::constant(std::size_t dims, const BigRat& c) {
  if (c == 0) return zero(dims);
  std::map<Key, BigRat> coeffs;
  coeffs.emplace(Key(dims, 0), c);
  return MultiPolynomial(dims, std::move(coeffs));
}

BigRat MultiPolynomial::coefficient(const Key& key) const {
  auto it = coeffs_.find(key);
  return it == coeffs_.end() ? BigRat(0) : it->second;
}

std::int64_t MultiPolynomial::total_degree() const {
  std::int64_t best = -1;
  for (const auto& [key, value] : coeffs_) {
    std::int64_t total = 0;
    for (auto e : key) total += e;
    best = std::max(best, total);
  }
  return best;
}

BigRat MultiPolynomial::evaluate(const MultiDegree& point) const {
  if (point.size() != dims_)
    fail(ErrorKind::Internal, "evaluation point dimension mismatch");
  BigRat acc = 0;
  for (const auto& [key, value] : coeffs_) {
    BigRat term = value;
    for (std::size_t i = 0; i < dims_; ++i) {
      BigRat base(point[i]);
      for (std::int64_t k = 0; k < key[i]; ++k) term *= base;
    }
    acc += term;
  }
  return acc;
}

BigInt MultiPolynomial::evaluate_int(const MultiDegree& point) const {
  return to_integer(evaluate(point));
}

UniPolynomial MultiPolynomial::diagonal_restriction() const {
  UniPolynomial out;
  for (const auto& [key, value] : coeffs_) {
    std::int64_t total = 0;
    for (auto e : key) total += e;
    std::vector<BigRat> mono(static_cast<std::size_t>(total) + 1, BigRat(0));
    mono.back() = value;
    out = out + UniPolynomial(std::move(mono));
  }
  return out;
}

MultiPolynomial MultiPolynomial::shifted(const MultiDegree& shift) const {
  if (shift.size() != dims_)
    fail(ErrorKind::Internal, "shift dimension mismatch");
  MultiPolynomial out = zero(dims_);
  for (const auto& [key, value] : coeffs_) {
    // Expand value * prod_i (n_i + shift_i)^{key_i}.
    MultiPolynomial term = constant(dims_, value);
    for (std::size_t i = 0; i < dims_; ++i) {
      std::map<Key, BigRat> axis;
      for (std::int64_t j = 0; j <= key[i]; ++j) {
        Key k(dims_, 0);
        k[i] = j;
        BigRat c = BigRat(binomial(key[i], j));
        BigRat s(1);
        for (std::int64_t p = 0; p < key[i] - j; ++p) s *= BigRat(shift[i]);
        c *= s;
        if (c != 0) axis.emplace(std::move(k), std::move(c));
      }
      term = term * MultiPolynomial(dims_, std::move(axis));
    }
    out = out + term;
  }
  return out;
}

MultiPolynomial MultiPolynomial::operator+(const MultiPolynomial& other) const {
  if (dims_ != other.dims_) fail(ErrorKind::Internal, "polynomial dimension mismatch");
  std::map<Key, BigRat> out = coeffs_;
  for (const auto& [key, value] : other.coeffs_) out[key] += value;
  return MultiPolynomial(dims_, std::move(out));
}

MultiPolynomial MultiPolynomial::operator*(const MultiPolynomial& other) const {
  if (dims_ != other.dims_) fail(ErrorKind::Internal, "polynomial dimension mismatch");
  std::map<Key, BigRat> out;
  for (const auto& [ka, va] : coeffs_)
    for (const auto& [kb, vb] : other.coeffs_) {
      Key k(dims_);
      for (std::size_t i = 0; i < dims_; ++i) k[i] = ka[i] + kb[i];
      out[k] += va * vb;
    }
  return MultiPolynomial(dims_, std::move(out));
}

MultiPolynomial MultiPolynomial::scaled(const BigRat& c) const {
  std::map<Key, BigRat> out;
  if (c != 0)
    for (const auto& [key, value] : coeffs_) out.emplace(key, value * c);
  return MultiPolynomial(dims_, std::move(out));
}

std::string MultiPolynomial::to_string(const std::vector<std::string>& vars) const {
  if (vars.size() != dims_)
    fail(ErrorKind::Internal, "variable name count mismatch");
  if (coeffs_.empty()) return "0";
  // Highest total degree first, then reverse-lex on keys, for readability.
  std::vector<std::pair<Key, BigRat>> terms(coeffs_.begin(), coeffs_.end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    std::int64_t ta = 0, tb = 0;
    for (auto e : a.first) ta += e;
    for (auto e : b.first) tb += e;
    if (ta != tb) return ta > tb;
    return a.first > b.first;
  });
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, value] : terms) {
    if (!first) out << " + ";
    first = false;
    out << to_fraction_string(value);
    for (std::size_t i = 0; i < dims_; ++i) {
      if (key[i] == 0) continue;
      out << '*' << vars[i];
      if (key[i] > 1) out << '^' << key[i];
    }
  }
  return out.str();
}

}  // namespace mixmult

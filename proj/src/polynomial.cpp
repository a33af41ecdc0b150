#include "spm/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace spm {

// Monomial

Monomial Monomial::variable(std::uint32_t encoding, unsigned exponent) {
  Monomial m;
  if (exponent == 0) return m;
  if (exponent > kExponentMask) throw std::overflow_error("monomial exponent too large");
  m.words_.push_back((encoding << kExponentBits) | exponent);
  m.degree_ = exponent;
  return m;
}

Monomial Monomial::from_pairs(const std::vector<std::pair<std::uint32_t, unsigned>>& pairs) {
  Monomial m;
  for (const auto& [enc, exp] : pairs) m = m.shifted(enc, static_cast<int>(exp));
  return m;
}

unsigned Monomial::exponent_of(std::uint32_t encoding) const {
  const auto it = std::lower_bound(words_.begin(), words_.end(), encoding << kExponentBits);
  if (it != words_.end() && (*it >> kExponentBits) == encoding) return *it & kExponentMask;
  return 0;
}

std::vector<std::pair<std::uint32_t, unsigned>> Monomial::pairs() const {
  std::vector<std::pair<std::uint32_t, unsigned>> out;
  out.reserve(words_.size());
  for (auto w : words_) out.emplace_back(w >> kExponentBits, w & kExponentMask);
  return out;
}

Monomial Monomial::shifted(std::uint32_t encoding, int delta) const {
  if (delta == 0) return *this;
  Monomial out = *this;
  const auto it = std::lower_bound(out.words_.begin(), out.words_.end(), encoding << kExponentBits);
  const bool present = it != out.words_.end() && (*it >> kExponentBits) == encoding;
  const int current = present ? static_cast<int>(*it & kExponentMask) : 0;
  const int updated = current + delta;
  if (updated < 0) throw std::domain_error("negative monomial exponent");
  if (updated > static_cast<int>(kExponentMask)) throw std::overflow_error("monomial exponent too large");
  if (present) {
    if (updated == 0) {
      out.words_.erase(it);
    } else {
      *it = (encoding << kExponentBits) | static_cast<std::uint32_t>(updated);
    }
  } else {
    out.words_.insert(it, (encoding << kExponentBits) | static_cast<std::uint32_t>(updated));
  }
  out.degree_ = static_cast<unsigned>(static_cast<int>(degree_) + delta);
  return out;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out = *this;
  for (auto w : other.words_) {
    out = out.shifted(w >> kExponentBits, static_cast<int>(w & kExponentMask));
  }
  return out;
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const {
  if (auto c = degree_ <=> other.degree_; c != 0) return c;
  return std::lexicographical_compare_three_way(words_.begin(), words_.end(), other.words_.begin(),
                                                other.words_.end());
}

// TensorPolynomial

TensorPolynomial TensorPolynomial::variable(int n, std::uint32_t encoding) {
  if ((encoding & ~full_mask(n)) != 0) throw std::invalid_argument("variable index exceeds 2^n");
  TensorPolynomial p(n);
  p.terms_.emplace(Monomial::variable(encoding), Rational(1));
  return p;
}

TensorPolynomial TensorPolynomial::constant(int n, const Rational& value) {
  TensorPolynomial p(n);
  p.add_term(Monomial(), value);
  return p;
}

unsigned TensorPolynomial::degree() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
}

bool TensorPolynomial::is_homogeneous() const {
  return terms_.empty() || terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

void TensorPolynomial::add_term(const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Rational TensorPolynomial::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

TensorPolynomial& TensorPolynomial::operator+=(const TensorPolynomial& other) {
  if (other.n_ != n_) throw std::invalid_argument("polynomial factor counts differ");
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

TensorPolynomial& TensorPolynomial::operator-=(const TensorPolynomial& other) {
  if (other.n_ != n_) throw std::invalid_argument("polynomial factor counts differ");
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

TensorPolynomial& TensorPolynomial::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

TensorPolynomial TensorPolynomial::normalized() const {
  if (terms_.empty()) return *this;
  std::vector<Rational> coeffs;
  coeffs.reserve(terms_.size());
  for (const auto& [m, c] : terms_) coeffs.push_back(c);
  Rational factor = scale_to_primitive(coeffs);
  if (sgn(terms_.rbegin()->second) < 0) factor = -factor;
  TensorPolynomial out = *this;
  out *= factor;
  return out;
}

TensorPolynomial operator+(TensorPolynomial a, const TensorPolynomial& b) { return a += b; }
TensorPolynomial operator-(TensorPolynomial a, const TensorPolynomial& b) { return a -= b; }

TensorPolynomial operator*(const TensorPolynomial& a, const TensorPolynomial& b) {
  if (a.n() != b.n()) throw std::invalid_argument("polynomial factor counts differ");
  TensorPolynomial out(a.n());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

TensorPolynomial operator*(const Rational& s, TensorPolynomial p) { return p *= s; }

// Operations

Rational evaluate(const TensorPolynomial& p, const MinorVector& z) {
  if (p.n() != z.n()) throw std::invalid_argument("polynomial and point dimensions differ");
  Rational total = 0;
  Rational term;
  for (const auto& [m, c] : p.terms()) {
    term = c;
    for (std::size_t i = 0; i < m.variable_count() && sgn(term) != 0; ++i) {
      term *= power(z[m.variable_at(i)], m.exponent_at(i));
    }
    total += term;
  }
  return total;
}

WeightVector monomial_weight(int n, const Monomial& m) {
  WeightVector w(n, 0);
  for (std::size_t i = 0; i < m.variable_count(); ++i) {
    const auto enc = m.variable_at(i);
    const int e = static_cast<int>(m.exponent_at(i));
    for (int k = 0; k < n; ++k) w[k] += ((enc >> k) & 1u) ? e : -e;
  }
  return w;
}

WeightVector weight_of(const TensorPolynomial& p) {
  if (p.is_zero()) throw std::domain_error("the zero polynomial has no weight");
  auto it = p.terms().begin();
  const WeightVector w = monomial_weight(p.n(), it->first);
  for (++it; it != p.terms().end(); ++it) {
    if (monomial_weight(p.n(), it->first) != w) {
      throw std::domain_error("not a weight vector: monomials carry different weights");
    }
  }
  return w;
}

bool is_weight_vector(const TensorPolynomial& p) {
  if (p.is_zero()) return false;
  try {
    weight_of(p);
    return true;
  } catch (const std::domain_error&) {
    return false;
  }
}

namespace {

// Leibniz extension of X^I -> X^{I xor bit} for variables whose factor-k bit
// equals from_bit.
TensorPolynomial derivation(const TensorPolynomial& p, int k, std::uint32_t from_bit) {
  if (k < 1 || k > p.n()) throw std::out_of_range("factor index out of range");
  const std::uint32_t bit = 1u << (k - 1);
  TensorPolynomial out(p.n());
  for (const auto& [m, c] : p.terms()) {
    for (std::size_t i = 0; i < m.variable_count(); ++i) {
      const auto enc = m.variable_at(i);
      if (((enc & bit) != 0) != (from_bit != 0)) continue;
      const unsigned e = m.exponent_at(i);
      out.add_term(m.shifted(enc, -1).shifted(enc ^ bit, 1), c * e);
    }
  }
  return out;
}

}  // namespace

TensorPolynomial lower(const TensorPolynomial& p, int k) { return derivation(p, k, 0); }

TensorPolynomial raise(const TensorPolynomial& p, int k) { return derivation(p, k, 1); }

TensorPolynomial substitute(const TensorPolynomial& p, int n_out,
                            const std::vector<TensorPolynomial>& images) {
  if (images.size() != (std::size_t{1} << p.n())) {
    throw std::invalid_argument("substitution needs one image per coordinate");
  }
  // Powers of each image are cached per call; degree-4 inputs dominate.
  std::map<std::pair<std::uint32_t, unsigned>, TensorPolynomial> powers;
  auto power_of = [&](std::uint32_t enc, unsigned e) -> const TensorPolynomial& {
    auto key = std::make_pair(enc, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    TensorPolynomial value = TensorPolynomial::constant(n_out, 1);
    for (unsigned i = 0; i < e; ++i) value = value * images[enc];
    return powers.emplace(key, std::move(value)).first->second;
  };
  TensorPolynomial out(n_out);
  for (const auto& [m, c] : p.terms()) {
    TensorPolynomial term = TensorPolynomial::constant(n_out, c);
    for (std::size_t i = 0; i < m.variable_count(); ++i) {
      if (images[m.variable_at(i)].n() != n_out) {
        throw std::invalid_argument("substitution image has the wrong factor count");
      }
      term = term * power_of(m.variable_at(i), m.exponent_at(i));
    }
    out += term;
  }
  return out;
}

unsigned degree_in(const TensorPolynomial& p, std::uint32_t encoding) {
  unsigned best = 0;
  for (const auto& [m, c] : p.terms()) best = std::max(best, m.exponent_of(encoding));
  return best;
}

TopSplit split_by_top_variable(const TensorPolynomial& p) {
  const std::uint32_t top = full_mask(p.n());
  TopSplit out{TensorPolynomial(p.n()), TensorPolynomial(p.n()), TensorPolynomial(p.n())};
  for (const auto& [m, c] : p.terms()) {
    const unsigned e = m.exponent_of(top);
    const Monomial rest = m.shifted(top, -static_cast<int>(e));
    switch (e) {
      case 0:
        out.c.add_term(rest, c);
        break;
      case 1:
        out.b.add_term(rest, c);
        break;
      case 2:
        out.a.add_term(rest, c);
        break;
      default:
        throw std::domain_error("degree in X^[1,...,1] exceeds 2");
    }
  }
  return out;
}

std::map<unsigned, TensorPolynomial> homogeneous_components(const TensorPolynomial& p) {
  std::map<unsigned, TensorPolynomial> out;
  for (const auto& [m, c] : p.terms()) {
    auto it = out.try_emplace(m.degree(), TensorPolynomial(p.n())).first;
    it->second.add_term(m, c);
  }
  return out;
}

std::string index_label(int n, std::uint32_t encoding) {
  std::string s;
  for (int k = 0; k < n; ++k) s += ((encoding >> k) & 1u) ? '1' : '0';
  return s;
}

std::string to_string(const TensorPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1 && !m.is_constant();
    if (!unit) os << mag.get_str();
    for (std::size_t i = 0; i < m.variable_count(); ++i) {
      if (!unit || i > 0) os << "*";
      os << "X[" << index_label(p.n(), m.variable_at(i)) << "]";
      if (m.exponent_at(i) > 1) os << "^" << m.exponent_at(i);
    }
  }
  return os.str();
}

}  // namespace spm

#pragma once

// Sparse polynomials in the 2^n tensor coordinates X^I, with the sl(2)
// derivations used to move between weight spaces.
//
// Weight convention: x^0 carries weight -1 and x^1 weight +1 in each factor.
// The lowering operator of factor k sends X^I with i_k = 0 to X^I with
// i_k = 1 (and kills i_k = 1), so lowering *increases* weight component k by
// two. Highest weight vectors therefore have the smallest weights, e.g. the
// Cayley hyperdeterminant on factors {1,2,3} of four has weight (0,0,0,-4).

#include "spm/index.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace spm {

/// Product of variables. Stored as sorted packed words
/// (encoding << kExponentBits) | exponent, one word per distinct variable.
class Monomial {
 public:
  static constexpr unsigned kExponentBits = 12;
  static constexpr std::uint32_t kExponentMask = (1u << kExponentBits) - 1u;

  Monomial() = default;
  static Monomial variable(std::uint32_t encoding, unsigned exponent = 1);
  static Monomial from_pairs(const std::vector<std::pair<std::uint32_t, unsigned>>& pairs);

  unsigned degree() const { return degree_; }
  bool is_constant() const { return words_.empty(); }
  unsigned exponent_of(std::uint32_t encoding) const;
  std::size_t variable_count() const { return words_.size(); }
  std::uint32_t variable_at(std::size_t i) const { return words_[i] >> kExponentBits; }
  unsigned exponent_at(std::size_t i) const { return words_[i] & kExponentMask; }
  std::vector<std::pair<std::uint32_t, unsigned>> pairs() const;

  /// Multiplies by X^encoding raised to delta (delta may be negative as long as
  /// the exponent stays nonnegative).
  Monomial shifted(std::uint32_t encoding, int delta) const;
  Monomial operator*(const Monomial& other) const;

  bool operator==(const Monomial&) const = default;
  /// Graded lexicographic: degree first, then the packed word sequence.
  std::strong_ordering operator<=>(const Monomial& other) const;

 private:
  std::vector<std::uint32_t> words_;
  unsigned degree_ = 0;
};

class TensorPolynomial {
 public:
  using Terms = std::map<Monomial, Rational>;

  TensorPolynomial() = default;
  explicit TensorPolynomial(int n) : n_(n) {}
  static TensorPolynomial variable(int n, std::uint32_t encoding);
  static TensorPolynomial constant(int n, const Rational& value);

  int n() const { return n_; }
  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// Largest total degree; 0 for the zero polynomial.
  unsigned degree() const;
  bool is_homogeneous() const;

  /// Adds c * m, dropping the term if the coefficient cancels.
  void add_term(const Monomial& m, const Rational& c);
  Rational coefficient(const Monomial& m) const;

  TensorPolynomial& operator+=(const TensorPolynomial& other);
  TensorPolynomial& operator-=(const TensorPolynomial& other);
  TensorPolynomial& operator*=(const Rational& s);

  /// Integer coefficients with content 1 and a positive coefficient on the
  /// graded-lex largest monomial.
  TensorPolynomial normalized() const;

  bool operator==(const TensorPolynomial&) const = default;

 private:
  int n_ = 0;
  Terms terms_;
};

TensorPolynomial operator+(TensorPolynomial a, const TensorPolynomial& b);
TensorPolynomial operator-(TensorPolynomial a, const TensorPolynomial& b);
TensorPolynomial operator*(const TensorPolynomial& a, const TensorPolynomial& b);
TensorPolynomial operator*(const Rational& s, TensorPolynomial p);

/// Substitutes z_I for X^I.
Rational evaluate(const TensorPolynomial& p, const MinorVector& z);

WeightVector monomial_weight(int n, const Monomial& m);
/// Throws std::domain_error when p is zero or its monomials carry different
/// weights.
WeightVector weight_of(const TensorPolynomial& p);
bool is_weight_vector(const TensorPolynomial& p);

/// sl(2) lowering derivation of factor k (1-based): X^I (i_k=0) -> X^{I+e_k}.
TensorPolynomial lower(const TensorPolynomial& p, int k);
/// Raising derivation of factor k: X^I (i_k=1) -> X^{I-e_k}.
TensorPolynomial raise(const TensorPolynomial& p, int k);

/// Replaces each X^I by images[I], a polynomial in n_out factors.
TensorPolynomial substitute(const TensorPolynomial& p, int n_out,
                            const std::vector<TensorPolynomial>& images);

unsigned degree_in(const TensorPolynomial& p, std::uint32_t encoding);

/// p = a (X^{[1..1]})^2 + b X^{[1..1]} + c with a, b, c free of X^{[1..1]}.
struct TopSplit {
  TensorPolynomial a;
  TensorPolynomial b;
  TensorPolynomial c;
};
/// Throws std::domain_error if p has degree > 2 in X^{[1..1]}.
TopSplit split_by_top_variable(const TensorPolynomial& p);

/// Homogeneous parts keyed by degree.
std::map<unsigned, TensorPolynomial> homogeneous_components(const TensorPolynomial& p);

/// Human-readable form, e.g. "2*X[10]^2*X[01] - X[11]" (bits listed factor 1
/// first).
std::string to_string(const TensorPolynomial& p);
std::string index_label(int n, std::uint32_t encoding);

}  // namespace spm

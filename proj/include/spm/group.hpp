#pragma once

// The group (GL(2)^n) x| S_n acting on tensor coordinates and, dually, on
// polynomials. An element applies its 2x2 matrices factor by factor, then
// moves factor k to position perm[k].

#include "spm/index.hpp"
#include "spm/polynomial.hpp"

#include <array>
#include <random>
#include <vector>

namespace spm {

using Matrix2 = std::array<std::array<Rational, 2>, 2>;

Matrix2 identity2();
Rational det2(const Matrix2& m);
Matrix2 inverse2(const Matrix2& m);

class GroupElement {
 public:
  /// Throws std::invalid_argument on a singular factor or a non-permutation.
  GroupElement(std::vector<Matrix2> factors, std::vector<int> perm);
  static GroupElement identity(int n);
  static GroupElement permutation(std::vector<int> perm);

  int n() const { return static_cast<int>(factors_.size()); }
  const std::vector<Matrix2>& factors() const { return factors_; }
  const std::vector<int>& perm() const { return perm_; }
  /// Every factor has determinant 1.
  bool is_special() const;

 private:
  std::vector<Matrix2> factors_;
  std::vector<int> perm_;
};

/// z'_{..a..} = sum_b m[a][b] z_{..b..} on factor k (1-based).
MinorVector apply_factor(const MinorVector& z, int k, const Matrix2& m);

MinorVector act_point(const GroupElement& g, const MinorVector& z);
MinorVector act_point_inverse(const GroupElement& g, const MinorVector& z);

/// (g.p)(x) = p(g^{-1} x), so evaluate(act(g, p), act_point(g, z)) = evaluate(p, z).
TensorPolynomial act(const GroupElement& g, const TensorPolynomial& p);

/// Product of an upper and a lower unipotent matrix with integer entries in
/// [-range, range]; determinant 1.
Matrix2 random_sl2(std::mt19937_64& rng, int range = 3);
std::vector<int> random_permutation(int n, std::mt19937_64& rng);
/// Random SL(2) factors with a random (or identity) permutation.
GroupElement random_group_element(int n, std::mt19937_64& rng, bool permute = true, int range = 3);

}  // namespace spm

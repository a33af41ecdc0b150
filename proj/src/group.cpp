#include "spm/group.hpp"

#include "spm/minor_map.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace spm {

Matrix2 identity2() { return Matrix2{{{Rational(1), Rational(0)}, {Rational(0), Rational(1)}}}; }

Rational det2(const Matrix2& m) { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

Matrix2 inverse2(const Matrix2& m) {
  const Rational d = det2(m);
  if (sgn(d) == 0) throw std::domain_error("singular 2x2 matrix");
  return Matrix2{{{m[1][1] / d, -m[0][1] / d}, {-m[1][0] / d, m[0][0] / d}}};
}

GroupElement::GroupElement(std::vector<Matrix2> factors, std::vector<int> perm)
    : factors_(std::move(factors)), perm_(std::move(perm)) {
  if (perm_.size() != factors_.size()) throw std::invalid_argument("permutation size mismatch");
  for (const auto& m : factors_) {
    if (sgn(det2(m)) == 0) throw std::invalid_argument("singular factor matrix");
  }
  std::vector<int> sorted = perm_;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < static_cast<int>(sorted.size()); ++i) {
    if (sorted[i] != i) throw std::invalid_argument("not a permutation");
  }
}

GroupElement GroupElement::identity(int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  return GroupElement(std::vector<Matrix2>(n, identity2()), std::move(perm));
}

GroupElement GroupElement::permutation(std::vector<int> perm) {
  const auto n = perm.size();
  return GroupElement(std::vector<Matrix2>(n, identity2()), std::move(perm));
}

bool GroupElement::is_special() const {
  return std::all_of(factors_.begin(), factors_.end(), [](const Matrix2& m) { return det2(m) == 1; });
}

MinorVector apply_factor(const MinorVector& z, int k, const Matrix2& m) {
  const std::uint32_t bit = 1u << (k - 1);
  MinorVector out(z.n());
  for (std::uint32_t enc = 0; enc < z.size(); ++enc) {
    if (enc & bit) continue;
    const Rational& z0 = z[enc];
    const Rational& z1 = z[enc | bit];
    out[enc] = m[0][0] * z0 + m[0][1] * z1;
    out[enc | bit] = m[1][0] * z0 + m[1][1] * z1;
  }
  return out;
}

MinorVector act_point(const GroupElement& g, const MinorVector& z) {
  if (g.n() != z.n()) throw std::invalid_argument("group element and point dimensions differ");
  MinorVector out = z;
  for (int k = 1; k <= g.n(); ++k) out = apply_factor(out, k, g.factors()[k - 1]);
  return permute_factors(out, g.perm());
}

MinorVector act_point_inverse(const GroupElement& g, const MinorVector& z) {
  if (g.n() != z.n()) throw std::invalid_argument("group element and point dimensions differ");
  std::vector<int> inv(g.n());
  for (int k = 0; k < g.n(); ++k) inv[g.perm()[k]] = k;
  MinorVector out = permute_factors(z, inv);
  for (int k = 1; k <= g.n(); ++k) out = apply_factor(out, k, inverse2(g.factors()[k - 1]));
  return out;
}

TensorPolynomial act(const GroupElement& g, const TensorPolynomial& p) {
  if (g.n() != p.n()) throw std::invalid_argument("group element and polynomial dimensions differ");
  const int n = p.n();
  const std::size_t size = std::size_t{1} << n;
  // images[J] = sum_I (g^{-1} e_I)_J X^I
  std::vector<TensorPolynomial> images(size, TensorPolynomial(n));
  for (std::uint32_t i = 0; i < size; ++i) {
    const MinorVector column = act_point_inverse(g, MinorVector::basis_vector(n, i));
    for (std::uint32_t j = 0; j < size; ++j) {
      if (sgn(column[j]) != 0) images[j].add_term(Monomial::variable(i), column[j]);
    }
  }
  return substitute(p, n, images);
}

Matrix2 random_sl2(std::mt19937_64& rng, int range) {
  std::uniform_int_distribution<int> dist(-range, range);
  const Rational a = dist(rng);
  const Rational b = dist(rng);
  // [[1, a], [0, 1]] * [[1, 0], [b, 1]]
  return Matrix2{{{1 + a * b, a}, {b, Rational(1)}}};
}

std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

GroupElement random_group_element(int n, std::mt19937_64& rng, bool permute, int range) {
  std::vector<Matrix2> factors;
  factors.reserve(n);
  for (int k = 0; k < n; ++k) factors.push_back(random_sl2(rng, range));
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  if (permute) perm = random_permutation(n, rng);
  return GroupElement(std::move(factors), std::move(perm));
}

}  // namespace spm

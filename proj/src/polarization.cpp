#include "spm/polarization.hpp"

#include <bit>
#include <functional>
#include <stdexcept>

namespace spm {

namespace {

// Ryser's formula: perm(M) = (-1)^d sum_{S} (-1)^{|S|} prod_i sum_{j in S} M[i][j].
Rational permanent(const std::vector<std::vector<Rational>>& m) {
  const std::size_t d = m.size();
  if (d == 0) return 1;
  Rational total = 0;
  std::vector<Rational> row_sums(d);
  for (std::uint32_t subset = 1; subset < (1u << d); ++subset) {
    for (std::size_t i = 0; i < d; ++i) {
      row_sums[i] = 0;
      for (std::size_t j = 0; j < d; ++j) {
        if ((subset >> j) & 1u) row_sums[i] += m[i][j];
      }
    }
    Rational product = 1;
    for (const auto& s : row_sums) product *= s;
    const bool odd = (std::popcount(subset) % 2) == 1;
    if (odd == (d % 2 == 1)) {
      total += product;
    } else {
      total -= product;
    }
  }
  return total;
}

}  // namespace

Rational polarize_eval(const TensorPolynomial& p, std::span<const MinorVector> vectors,
                       PolarConvention convention) {
  if (p.is_zero()) return 0;
  const std::size_t d = vectors.size();
  if (!p.is_homogeneous() || p.degree() != d) {
    throw std::invalid_argument("polarization needs exactly one vector per degree");
  }
  for (const auto& v : vectors) {
    if (v.n() != p.n()) throw std::invalid_argument("polarization vector dimension mismatch");
  }
  Rational total = 0;
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d));
  for (const auto& [mono, c] : p.terms()) {
    std::size_t row = 0;
    for (std::size_t i = 0; i < mono.variable_count(); ++i) {
      for (unsigned e = 0; e < mono.exponent_at(i); ++e, ++row) {
        for (std::size_t j = 0; j < d; ++j) m[row][j] = vectors[j][mono.variable_at(i)];
      }
    }
    total += c * permanent(m);
  }
  if (convention == PolarConvention::kAveraged) total /= Rational(factorial(static_cast<unsigned>(d)));
  return total;
}

bool linear_subspace_vanishes(const TensorPolynomial& p, std::span<const MinorVector> basis) {
  if (basis.empty()) throw std::invalid_argument("empty basis");
  for (const auto& [degree, part] : homogeneous_components(p)) {
    if (degree == 0) return false;
    std::vector<MinorVector> slots;
    slots.reserve(degree);
    // Compositions beta of degree over the basis, as multisets of basis vectors.
    bool vanishes = true;
    std::function<void(std::size_t, unsigned)> visit = [&](std::size_t next, unsigned remaining) {
      if (!vanishes) return;
      if (remaining == 0) {
        if (sgn(polarize_eval(part, slots)) != 0) vanishes = false;
        return;
      }
      for (std::size_t b = next; b < basis.size(); ++b) {
        slots.push_back(basis[b]);
        visit(b, remaining - 1);
        slots.pop_back();
      }
    };
    visit(0, degree);
    if (!vanishes) return false;
  }
  return true;
}

TensorPolynomial augment(const TensorPolynomial& f, const std::array<Rational, 2>& gamma) {
  const int n = f.n();
  const std::uint32_t new_bit = 1u << n;
  std::vector<TensorPolynomial> images(std::size_t{1} << n, TensorPolynomial(n + 1));
  for (std::uint32_t j = 0; j < images.size(); ++j) {
    images[j].add_term(Monomial::variable(j), gamma[0]);
    images[j].add_term(Monomial::variable(j | new_bit), gamma[1]);
  }
  return substitute(f, n + 1, images);
}

}  // namespace spm

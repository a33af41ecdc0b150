#pragma once

// Independent reference computations used to check the library. None of these
// call into the code paths they are used to test.

#include "spm/index.hpp"
#include "spm/polynomial.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using spm::Rational;

inline std::vector<std::vector<int>> all_permutations(int d) {
  std::vector<int> p(d);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline int permutation_sign(const std::vector<int>& p) {
  int inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) inversions += p[i] > p[j];
  }
  return inversions % 2 ? -1 : 1;
}

// Leibniz sum over all permutations.
inline Rational leibniz_det(const std::vector<std::vector<Rational>>& m) {
  const int d = static_cast<int>(m.size());
  if (d == 0) return 1;
  Rational total = 0;
  for (const auto& p : all_permutations(d)) {
    Rational term = permutation_sign(p);
    for (int i = 0; i < d; ++i) term *= m[i][p[i]];
    total += term;
  }
  return total;
}

inline Rational brute_minor(const spm::SymmetricMatrix& a, std::uint32_t mask) {
  std::vector<int> kept;
  for (int k = 0; k < a.n(); ++k) {
    if ((mask >> k) & 1u) kept.push_back(k);
  }
  std::vector<std::vector<Rational>> sub(kept.size(), std::vector<Rational>(kept.size()));
  for (std::size_t r = 0; r < kept.size(); ++r) {
    for (std::size_t c = 0; c < kept.size(); ++c) sub[r][c] = a(kept[r], kept[c]);
  }
  return leibniz_det(sub);
}

inline spm::MinorVector brute_minor_vector(const spm::SymmetricMatrix& a, const Rational& t = 1) {
  spm::MinorVector z(a.n());
  for (std::uint32_t mask = 0; mask < z.size(); ++mask) {
    Rational scale = 1;
    for (int k = std::popcount(mask); k < a.n(); ++k) scale *= t;
    z[mask] = scale * brute_minor(a, mask);
  }
  return z;
}

// Discriminant of the binary quadratic det(x M0 + y M1), where Mc is the
// slice w[a | b << 1 | c << 2] with rows a and columns b.
inline Rational slice_discriminant(const std::array<Rational, 8>& w) {
  auto slice = [&](int c) {
    return std::array<Rational, 4>{w[0 | 0 | c << 2], w[0 | 2 | c << 2], w[1 | 0 | c << 2], w[1 | 2 | c << 2]};
  };
  auto det = [](const std::array<Rational, 4>& m) -> Rational { return m[0] * m[3] - m[1] * m[2]; };
  const auto m0 = slice(0), m1 = slice(1);
  std::array<Rational, 4> sum;
  for (int i = 0; i < 4; ++i) sum[i] = m0[i] + m1[i];
  const Rational alpha = det(m0), gamma = det(m1);
  const Rational beta = det(sum) - alpha - gamma;
  return beta * beta - 4 * alpha * gamma;
}

// Coefficient of t_1 ... t_d in p(t_1 v_1 + ... + t_d v_d), by inclusion and
// exclusion over subsets.
inline Rational finite_difference_polar(const spm::TensorPolynomial& p, const std::vector<spm::MinorVector>& v) {
  const std::size_t d = v.size();
  Rational total = 0;
  for (std::uint32_t s = 0; s < (1u << d); ++s) {
    spm::MinorVector sum(v.front().n());
    for (std::size_t i = 0; i < d; ++i) {
      if ((s >> i) & 1u) sum = sum + v[i];
    }
    const Rational value = spm::evaluate(p, sum);
    total += ((d - std::popcount(s)) % 2 ? -value : value);
  }
  return total;
}

// Standard Young tableaux of a shape, by removing corners recursively.
inline long long syt_count(std::vector<int> shape) {
  while (!shape.empty() && shape.back() == 0) shape.pop_back();
  if (shape.empty()) return 1;
  long long total = 0;
  for (std::size_t r = 0; r < shape.size(); ++r) {
    const bool corner = r + 1 == shape.size() || shape[r + 1] < shape[r];
    if (!corner) continue;
    auto smaller = shape;
    --smaller[r];
    total += syt_count(smaller);
  }
  return total;
}

inline Rational random_rational(std::mt19937_64& rng, int range = 9, int max_den = 4) {
  std::uniform_int_distribution<int> num(-range, range), den(1, max_den);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline spm::SymmetricMatrix random_rational_matrix(int n, std::mt19937_64& rng) {
  spm::SymmetricMatrix a(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) a.set(i, j, random_rational(rng));
  }
  return a;
}

inline spm::MinorVector random_vector(int n, std::mt19937_64& rng, int range = 5) {
  spm::MinorVector z(n);
  std::uniform_int_distribution<int> dist(-range, range);
  for (std::uint32_t i = 0; i < z.size(); ++i) z[i] = dist(rng);
  return z;
}

// Random homogeneous polynomial with integer coefficients.
inline spm::TensorPolynomial random_homogeneous(int n, unsigned degree, int terms, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> var(0, (1u << n) - 1);
  std::uniform_int_distribution<int> coef(-7, 7);
  spm::TensorPolynomial p(n);
  while (p.is_zero()) {
    for (int t = 0; t < terms; ++t) {
      spm::Monomial m;
      for (unsigned k = 0; k < degree; ++k) m = m * spm::Monomial::variable(var(rng));
      p.add_term(m, coef(rng));
    }
  }
  return p;
}

}  // namespace oracle

namespace oracle {

// chi_(2,2)(sigma) on S_4 as (fixed 2-subsets) - (fixed points): the
// permutation character on 2-subsets is chi_(4) + chi_(3,1) + chi_(2,2) and
// the one on points is chi_(4) + chi_(3,1).
inline int chi22_by_fixed_sets(const std::vector<int>& sigma) {
  int points = 0, pairs = 0;
  for (int i = 0; i < 4; ++i) {
    points += sigma[i] == i;
    for (int j = i + 1; j < 4; ++j) {
      const int a = std::min(sigma[i], sigma[j]), b = std::max(sigma[i], sigma[j]);
      pairs += a == i && b == j;
    }
  }
  return pairs - points;
}

// Number of degree-d monomials in the 2^n variables X^I with each weight
// (component k: +1 per variable with bit k set, -1 otherwise).
inline std::map<std::vector<int>, long long> weight_space_dims(int d, int n) {
  std::map<std::vector<int>, long long> out;
  std::vector<int> w(n, 0);
  std::function<void(std::uint32_t, int)> rec = [&](std::uint32_t first, int left) {
    if (left == 0) {
      ++out[w];
      return;
    }
    for (std::uint32_t v = first; v < (1u << n); ++v) {
      for (int k = 0; k < n; ++k) w[k] += ((v >> k) & 1u) ? 1 : -1;
      rec(v, left - 1);
      for (int k = 0; k < n; ++k) w[k] -= ((v >> k) & 1u) ? 1 : -1;
    }
  };
  rec(0, d);
  return out;
}

// Multiplicity of the SL(2)^n irreducible with highest weights lambda in
// S^d: alternating sum of weight-space dimensions over lambda + 2 eps.
inline long long torus_multiplicity(const std::map<std::vector<int>, long long>& dims,
                                    const std::vector<int>& lambda) {
  const int n = static_cast<int>(lambda.size());
  long long total = 0;
  for (std::uint32_t eps = 0; eps < (1u << n); ++eps) {
    std::vector<int> mu = lambda;
    for (int k = 0; k < n; ++k) mu[k] += ((eps >> k) & 1u) ? 2 : 0;
    const auto it = dims.find(mu);
    const long long count = it == dims.end() ? 0 : it->second;
    total += (std::popcount(eps) % 2 ? -count : count);
  }
  return total;
}

}  // namespace oracle

#include "spm/group.hpp"
#include "spm/hyperdet.hpp"
#include "spm/minor_map.hpp"
#include "spm/polarization.hpp"
#include "spm/polynomial.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"

namespace {

using spm::Monomial;
using spm::MinorVector;
using spm::Rational;
using spm::TensorPolynomial;

TensorPolynomial var(int n, std::uint32_t e) { return TensorPolynomial::variable(n, e); }

MinorVector vec(int n, std::vector<Rational> c) { return MinorVector(n, std::move(c)); }

std::array<Rational, 8> as_array(const MinorVector& z) {
  std::array<Rational, 8> w;
  for (std::uint32_t i = 0; i < 8; ++i) w[i] = z[i];
  return w;
}

TEST(Evaluate, Examples) {
  EXPECT_EQ(spm::evaluate(var(2, 0) * var(2, 3), vec(2, {1, 1, 3, -1})), -1);
  const auto h = spm::cayley_hyperdet(3, {1, 2, 3});
  EXPECT_EQ(spm::evaluate(h, vec(3, {1, 1, 1, 0, 1, 0, 0, 0})), 0);
  EXPECT_EQ(spm::evaluate(h, vec(3, {1, 1, 1, 0, 1, 0, 0, 1})), 5);
  EXPECT_THROW(spm::evaluate(h, MinorVector(2)), std::invalid_argument);
}

TEST(Evaluate, HyperdeterminantMatchesSliceDiscriminant) {
  const auto h = spm::cayley_hyperdet(3, {1, 2, 3});
  EXPECT_EQ(h.term_count(), 12u);
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const auto z = oracle::random_vector(3, rng, 6);
    EXPECT_EQ(spm::evaluate(h, z), oracle::slice_discriminant(as_array(z)));
    EXPECT_EQ(spm::cayley_value(as_array(z)), oracle::slice_discriminant(as_array(z)));
  }
}

TEST(Weight, Examples) {
  EXPECT_EQ(spm::weight_of(spm::cayley_hyperdet(4, {1, 2, 3})), (spm::WeightVector{0, 0, 0, -4}));
  EXPECT_EQ(spm::weight_of(spm::cayley_hyperdet(5, {2, 3, 5})), (spm::WeightVector{-4, 0, 0, -4, 0}));
  EXPECT_EQ(spm::weight_of(var(3, 7) * var(3, 0)), (spm::WeightVector{0, 0, 0}));
  EXPECT_THROW(spm::weight_of(var(2, 1) + var(2, 2)), std::domain_error);
  EXPECT_THROW(spm::weight_of(TensorPolynomial(2)), std::domain_error);
}

TEST(Lower, Examples) {
  EXPECT_EQ(spm::lower(var(2, 0), 1), var(2, 1));
  EXPECT_EQ(spm::lower(var(2, 1), 1), TensorPolynomial(2));
  const auto sq = var(1, 0) * var(1, 0);
  EXPECT_EQ(spm::lower(spm::lower(sq, 1), 1), Rational(2) * (var(1, 1) * var(1, 1)));
  EXPECT_THROW(spm::lower(sq, 2), std::out_of_range);
}

TEST(Lower, HyperdeterminantHasFiveDimensionalOuterFactor) {
  auto p = spm::cayley_hyperdet(4, {1, 2, 3});
  for (int i = 1; i <= 4; ++i) {
    p = spm::lower(p, 4);
    EXPECT_FALSE(p.is_zero()) << "step " << i;
  }
  EXPECT_TRUE(spm::lower(p, 4).is_zero());
}

TEST(Raise, Examples) {
  EXPECT_EQ(spm::raise(var(2, 1), 1), var(2, 0));
  EXPECT_TRUE(spm::raise(var(2, 0), 1).is_zero());
  for (int n = 3; n <= 5; ++n) {
    const auto h = spm::cayley_hyperdet(n, {1, 2, 3});
    for (int k = 1; k <= n; ++k) EXPECT_TRUE(spm::raise(h, k).is_zero()) << "n " << n << " k " << k;
  }
}

TEST(Lower, LeibnizRule) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 3;
    const auto p = oracle::random_homogeneous(n, 2, 4, rng);
    const auto q = oracle::random_homogeneous(n, 3, 4, rng);
    for (int k = 1; k <= n; ++k) {
      EXPECT_EQ(spm::lower(p * q, k), spm::lower(p, k) * q + p * spm::lower(q, k));
      EXPECT_EQ(spm::raise(p * q, k), spm::raise(p, k) * q + p * spm::raise(q, k));
    }
  }
}

TEST(Lower, WeightBookkeeping) {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<std::uint32_t> var_dist(0, 15);
  for (int trial = 0; trial < 40; ++trial) {
    Monomial m;
    for (int k = 0; k < 4; ++k) m = m * Monomial::variable(var_dist(rng));
    TensorPolynomial p(4);
    p.add_term(m, 1);
    const auto w = spm::weight_of(p);
    for (int k = 1; k <= 4; ++k) {
      const auto lo = spm::lower(p, k);
      if (!lo.is_zero()) {
        auto expected = w;
        expected[k - 1] += 2;
        EXPECT_EQ(spm::weight_of(lo), expected);
      }
      const auto hi = spm::raise(p, k);
      if (!hi.is_zero()) {
        auto expected = w;
        expected[k - 1] -= 2;
        EXPECT_EQ(spm::weight_of(hi), expected);
      }
    }
  }
}

TEST(GroupAction, IdentityAndBlockSwap) {
  std::mt19937_64 rng(24);
  const auto p = oracle::random_homogeneous(3, 3, 5, rng);
  const auto z = oracle::random_vector(3, rng);
  EXPECT_EQ(spm::act(spm::GroupElement::identity(3), p), p);
  EXPECT_EQ(spm::act_point(spm::GroupElement::identity(3), z), z);

  const auto z1 = oracle::random_vector(2, rng);
  const auto z2 = oracle::random_vector(3, rng);
  // Factors 1,2 go to 4,5 and factors 3,4,5 go to 1,2,3.
  const auto swap = spm::GroupElement::permutation({3, 4, 0, 1, 2});
  EXPECT_EQ(spm::act_point(swap, spm::tensor_product(z1, z2)), spm::tensor_product(z2, z1));
}

TEST(GroupAction, RejectsSingularFactors) {
  spm::Matrix2 singular{{{1, 2}, {2, 4}}};
  EXPECT_THROW(spm::GroupElement({singular}, {0}), std::invalid_argument);
  EXPECT_THROW(spm::GroupElement({spm::identity2(), spm::identity2()}, {0, 0}), std::invalid_argument);
}

TEST(GroupAction, Duality) {
  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + trial % 4;
    std::vector<spm::Matrix2> factors;
    while (static_cast<int>(factors.size()) < n) {
      spm::Matrix2 m{{{oracle::random_rational(rng, 3, 2), oracle::random_rational(rng, 3, 2)},
                      {oracle::random_rational(rng, 3, 2), oracle::random_rational(rng, 3, 2)}}};
      if (spm::det2(m) != 0) factors.push_back(m);
    }
    const spm::GroupElement g(factors, spm::random_permutation(n, rng));
    const auto p = oracle::random_homogeneous(n, 1 + trial % 3, 4, rng);
    const auto z = oracle::random_vector(n, rng);
    EXPECT_EQ(spm::evaluate(spm::act(g, p), spm::act_point(g, z)), spm::evaluate(p, z));
    EXPECT_EQ(spm::act_point_inverse(g, spm::act_point(g, z)), z);
  }
}

TEST(GroupAction, HyperdeterminantIsInvariant) {
  std::mt19937_64 rng(26);
  const auto h = spm::cayley_hyperdet(3, {1, 2, 3});
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = spm::random_group_element(3, rng, /*permute=*/true);
    ASSERT_TRUE(g.is_special());
    const auto z = oracle::random_vector(3, rng);
    EXPECT_EQ(spm::evaluate(h, spm::act_point(g, z)), spm::evaluate(h, z));
    EXPECT_EQ(spm::act(g, h), h);
  }
}

TEST(Polarization, PrintedExample) {
  // f = x_1^2 x_2 with x_1 = X^[0] and x_2 = X^[1].
  TensorPolynomial f(1);
  f.add_term(Monomial::variable(0, 2) * Monomial::variable(1), 1);
  std::mt19937_64 rng(27);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<MinorVector> v{oracle::random_vector(1, rng), oracle::random_vector(1, rng),
                               oracle::random_vector(1, rng)};
    const Rational expected = 2 * (v[0][0u] * v[1][0u] * v[2][1u] + v[0][0u] * v[2][0u] * v[1][1u] +
                                   v[1][0u] * v[2][0u] * v[0][1u]);
    EXPECT_EQ(spm::polarize_eval(f, v), expected);
  }
}

TEST(Polarization, MatchesFiniteDifferences) {
  std::mt19937_64 rng(28);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + trial % 3;
    const unsigned d = 1 + trial % 4;
    const auto p = oracle::random_homogeneous(n, d, 5, rng);
    std::vector<MinorVector> v;
    for (unsigned i = 0; i < d; ++i) v.push_back(oracle::random_vector(n, rng));
    EXPECT_EQ(spm::polarize_eval(p, v), oracle::finite_difference_polar(p, v));
    std::shuffle(v.begin(), v.end(), rng);
    EXPECT_EQ(spm::polarize_eval(p, v), oracle::finite_difference_polar(p, v));
  }
}

TEST(Polarization, DiagonalRecoversThePolynomial) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + trial % 3;
    const unsigned d = 1 + trial % 4;
    const auto p = oracle::random_homogeneous(n, d, 5, rng);
    const auto v = oracle::random_vector(n, rng);
    const std::vector<MinorVector> diag(d, v);
    EXPECT_EQ(spm::polarize_eval(p, diag, spm::PolarConvention::kAveraged), spm::evaluate(p, v));
    EXPECT_EQ(spm::polarize_eval(p, diag), spm::factorial(d) * spm::evaluate(p, v));
  }
}

TEST(Polarization, WrongVectorCount) {
  const auto h = spm::cayley_hyperdet(3, {1, 2, 3});
  std::vector<MinorVector> v(3, MinorVector(3));
  EXPECT_THROW(spm::polarize_eval(h, v), std::invalid_argument);
}

TEST(LinearSubspace, Examples) {
  const auto h = spm::cayley_hyperdet(3, {1, 2, 3});
  std::vector<MinorVector> line{MinorVector::basis_vector(3, 0), MinorVector::basis_vector(3, 1)};
  EXPECT_TRUE(spm::linear_subspace_vanishes(h, line));
  const auto p = var(2, 0) * var(2, 3);
  std::vector<MinorVector> plane{MinorVector::basis_vector(2, 0), MinorVector::basis_vector(2, 3)};
  EXPECT_FALSE(spm::linear_subspace_vanishes(p, plane));
  std::vector<MinorVector> zero{MinorVector(2)};
  EXPECT_TRUE(spm::linear_subspace_vanishes(p, zero));
}

TEST(LinearSubspace, AgreesWithSampling) {
  std::mt19937_64 rng(30);
  const auto h = spm::cayley_hyperdet(3, {1, 2, 3});
  for (int trial = 0; trial < 40; ++trial) {
    // Coordinate subspaces: vanishing on them is decidable by sampling too.
    std::vector<MinorVector> basis;
    for (std::uint32_t e = 0; e < 8; ++e) {
      if (rng() % 3 == 0) basis.push_back(MinorVector::basis_vector(3, e));
    }
    if (basis.empty()) continue;
    bool sampled_zero = true;
    for (int s = 0; s < 30 && sampled_zero; ++s) {
      MinorVector point(3);
      for (const auto& b : basis) point = point + oracle::random_rational(rng, 5, 1) * b;
      sampled_zero = spm::evaluate(h, point) == 0;
    }
    EXPECT_EQ(spm::linear_subspace_vanishes(h, basis), sampled_zero);
  }
}

TEST(Augment, PolarizationFactorsOnRankOneInputs) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    const auto f = oracle::random_homogeneous(2, 4, 6, rng);
    const std::array<Rational, 2> gamma{oracle::random_rational(rng), oracle::random_rational(rng)};
    const auto big = spm::augment(f, gamma);
    ASSERT_EQ(big.n(), 3);
    std::vector<MinorVector> w, rank_one;
    Rational gamma_product = 1;
    for (int i = 0; i < 4; ++i) {
      w.push_back(oracle::random_vector(2, rng));
      const auto a = oracle::random_vector(1, rng);
      rank_one.push_back(spm::tensor_product(w.back(), a));
      gamma_product *= gamma[0] * a[0u] + gamma[1] * a[1u];
    }
    EXPECT_EQ(spm::polarize_eval(big, rank_one), spm::polarize_eval(f, w) * gamma_product);
  }
}

TEST(TopSplit, Hyperdeterminant) {
  const auto h = spm::cayley_hyperdet(3, {1, 2, 3});
  const auto split = spm::split_by_top_variable(h);
  EXPECT_EQ(split.a, var(3, 0) * var(3, 0));
  const auto expected_b =
      Rational(-2) * var(3, 0) * (var(3, 1) * var(3, 6) + var(3, 2) * var(3, 5) + var(3, 4) * var(3, 3)) +
      Rational(4) * var(3, 1) * var(3, 2) * var(3, 4);
  EXPECT_EQ(split.b, expected_b);
  const auto top = var(3, 7);
  EXPECT_EQ(split.a * top * top + split.b * top + split.c, h);
}

TEST(TopSplit, Reconstitution) {
  std::mt19937_64 rng(32);
  for (int n = 3; n <= 4; ++n) {
    const auto top = var(n, spm::full_mask(n));
    auto top_free = [&](unsigned degree) {
      TensorPolynomial out(n);
      const auto source = oracle::random_homogeneous(n, degree, 6, rng);
      for (const auto& [m, c] : source.terms()) {
        if (m.exponent_of(spm::full_mask(n)) == 0) out.add_term(m, c);
      }
      return out;
    };
    for (int trial = 0; trial < 10; ++trial) {
      const auto a = top_free(2), b = top_free(3), c = top_free(4);
      const auto p = a * top * top + b * top + c;
      const auto s = spm::split_by_top_variable(p);
      EXPECT_EQ(s.a, a);
      EXPECT_EQ(s.b, b);
      EXPECT_EQ(s.c, c);
    }
    const auto cubic = top * top * top;
    EXPECT_THROW(spm::split_by_top_variable(cubic), std::domain_error);
  }
  const auto p = var(3, 1) * var(3, 2);
  const auto s = spm::split_by_top_variable(p);
  EXPECT_TRUE(s.a.is_zero());
  EXPECT_TRUE(s.b.is_zero());
  EXPECT_EQ(s.c, p);
}

TEST(Normalize, Idempotent) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 20; ++trial) {
    auto p = oracle::random_homogeneous(3, 3, 5, rng);
    p *= oracle::random_rational(rng) + Rational(1, 7);
    const auto q = p.normalized();
    EXPECT_EQ(q.normalized(), q);
    EXPECT_GT(q.terms().rbegin()->second, 0);
    for (const auto& [m, c] : q.terms()) EXPECT_EQ(c.get_den(), 1);
  }
}

}  // namespace

#include "spm/group.hpp"
#include "spm/hyperdet.hpp"
#include "spm/linalg.hpp"
#include "spm/minor_map.hpp"

#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"

namespace {

using spm::MinorVector;
using spm::Rational;
using spm::TensorPolynomial;

// Rank of the coefficient matrix of a list of polynomials.
std::size_t span_rank(const std::vector<TensorPolynomial>& polys) {
  std::map<spm::Monomial, std::size_t> columns;
  for (const auto& p : polys) {
    for (const auto& [m, c] : p.terms()) columns.emplace(m, columns.size());
  }
  spm::DenseMatrix rows(polys.size(), std::vector<Rational>(columns.size()));
  for (std::size_t i = 0; i < polys.size(); ++i) {
    for (const auto& [m, c] : polys[i].terms()) rows[i][columns.at(m)] = c;
  }
  return spm::rank(rows);
}

TEST(CayleyHyperdet, Examples) {
  const auto h = spm::cayley_hyperdet(3, {1, 2, 3});
  MinorVector corners(3);
  corners[0u] = 1;
  corners[7u] = 1;
  EXPECT_EQ(spm::evaluate(h, corners), 1);
  const auto ones = spm::SymmetricMatrix::from_rows({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}});
  EXPECT_EQ(spm::evaluate(h, spm::minor_vector(ones)), 0);
  EXPECT_EQ(spm::weight_of(spm::cayley_hyperdet(4, {1, 2, 4})), (spm::WeightVector{0, 0, -4, 0}));
  EXPECT_THROW(spm::cayley_hyperdet(4, {1, 1, 2}), std::invalid_argument);
  EXPECT_THROW(spm::cayley_hyperdet(4, {1, 2, 5}), std::invalid_argument);
  EXPECT_THROW(spm::cayley_hyperdet(2, {1, 2, 3}), std::invalid_argument);
}

TEST(CayleyHyperdet, FillBitsGiveExtremeWeights) {
  const auto low = spm::cayley_hyperdet(5, {1, 3, 4}, 1);
  EXPECT_EQ(spm::weight_of(low), (spm::WeightVector{0, 4, 0, 0, 4}));
  for (int k = 1; k <= 5; ++k) EXPECT_TRUE(spm::lower(low, k).is_zero());
}

TEST(HdDimension, Values) {
  EXPECT_EQ(spm::hd_dimension(3), 1);
  EXPECT_EQ(spm::hd_dimension(4), 20);
  EXPECT_EQ(spm::hd_dimension(5), 250);
  EXPECT_EQ(spm::hd_dimension(6), 2500);
  EXPECT_THROW(spm::hd_dimension(2), std::invalid_argument);
}

TEST(HdBasis, NThreeIsTheHyperdeterminant) {
  const auto basis = spm::hd_basis(3);
  ASSERT_EQ(basis.entries.size(), 1u);
  const auto h = spm::cayley_hyperdet(3, {1, 2, 3});
  const auto& p = basis.entries[0].polynomial;
  EXPECT_TRUE(p == h || p == Rational(-1) * h);
}

TEST(HdBasis, CountsWeightsAndShape) {
  for (int n = 3; n <= 6; ++n) {
    const auto basis = spm::hd_basis(n, 2);
    ASSERT_EQ(spm::Integer(basis.entries.size()), spm::hd_dimension(n)) << n;
    std::set<std::pair<spm::Triple, spm::WeightVector>> seen;
    for (const auto& e : basis.entries) {
      ASSERT_FALSE(e.polynomial.is_zero());
      EXPECT_EQ(e.polynomial.degree(), 4u);
      EXPECT_TRUE(e.polynomial.is_homogeneous());
      EXPECT_EQ(spm::weight_of(e.polynomial), e.weight);
      EXPECT_EQ(e.polynomial.normalized(), e.polynomial);
      EXPECT_LE(spm::degree_in(e.polynomial, spm::full_mask(n)), 2u);
      spm::WeightVector expected(n, 0);
      std::size_t slot = 0;
      for (int k = 1; k <= n; ++k) {
        if (k == e.triple[0] || k == e.triple[1] || k == e.triple[2]) continue;
        expected[k - 1] = -4 + 2 * e.exponents.at(slot++);
      }
      EXPECT_EQ(e.weight, expected);
      EXPECT_TRUE(seen.emplace(e.triple, e.weight).second);
    }
  }
}

TEST(HdBasis, GenerationOrder) {
  const auto basis = spm::hd_basis(5);
  ASSERT_EQ(basis.entries.size(), 250u);
  EXPECT_EQ(basis.entries[0].triple, (spm::Triple{1, 2, 3}));
  EXPECT_EQ(basis.entries[0].exponents, (std::vector<int>{0, 0}));
  EXPECT_EQ(basis.entries[1].exponents, (std::vector<int>{0, 1}));
  EXPECT_EQ(basis.entries[5].exponents, (std::vector<int>{1, 0}));
  EXPECT_EQ(basis.entries[25].triple, (spm::Triple{1, 2, 4}));
  EXPECT_EQ(basis.entries[249].triple, (spm::Triple{3, 4, 5}));
  const auto threaded = spm::hd_basis(5, 3);
  ASSERT_EQ(threaded.entries.size(), 250u);
  for (std::size_t i = 0; i < 250; ++i) EXPECT_EQ(threaded.entries[i].polynomial, basis.entries[i].polynomial);
}

TEST(HdBasis, LinearlyIndependentForFourFactors) {
  std::vector<TensorPolynomial> polys;
  for (const auto& e : spm::hd_basis(4).entries) polys.push_back(e.polynomial);
  EXPECT_EQ(span_rank(polys), 20u);
}

TEST(HdBasis, SpanIsClosedUnderTheGroup) {
  std::vector<TensorPolynomial> polys;
  for (const auto& e : spm::hd_basis(4).entries) polys.push_back(e.polynomial);
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 6; ++trial) {
    const auto g = spm::random_group_element(4, rng, /*permute=*/true, 2);
    auto extended = polys;
    extended.push_back(spm::act(g, polys[rng() % polys.size()]));
    EXPECT_EQ(span_rank(extended), 20u) << "trial " << trial;
  }
}

TEST(HdBasis, VanishesOnMinorVectors) {
  std::mt19937_64 rng(52);
  for (int n = 4; n <= 5; ++n) {
    const auto basis = spm::hd_basis(n);
    for (int trial = 0; trial < 10; ++trial) {
      const auto z = spm::minor_vector(oracle::random_rational_matrix(n, rng));
      for (const auto& e : basis.entries) ASSERT_EQ(spm::evaluate(e.polynomial, z), 0);
    }
  }
}

TEST(HdBasis, RejectsSmallN) { EXPECT_THROW(spm::hd_basis(2), std::invalid_argument); }

TEST(Triples, Lexicographic) {
  const auto t = spm::triples(4);
  EXPECT_EQ(t, (std::vector<spm::Triple>{{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}));
  EXPECT_EQ(spm::triples(6).size(), 20u);
}

}  // namespace

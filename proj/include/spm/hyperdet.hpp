#pragma once

// Cayley's 2x2x2 hyperdeterminant and the module HD spanned by its
// (SL(2)^n) x| S_n orbit, realized as a weight basis of lowering images.

#include "spm/polynomial.hpp"
#include "spm/rep_theory.hpp"

#include <array>
#include <vector>

namespace spm {

/// Three distinct 1-based factors in increasing order.
using Triple = std::array<int, 3>;

/// The 12-term hyperdeterminant in the variables whose bits at the triple
/// positions run over {0,1}^3 and whose remaining bits all equal fill_bit.
/// fill_bit = 0 gives the highest weight vector of HD (weight 0 on the triple,
/// -4 elsewhere); fill_bit = 1 the lowest weight vector (0 and +4).
TensorPolynomial cayley_hyperdet(int n, const Triple& triple, int fill_bit = 0);

/// Hyperdeterminant of eight values indexed a | b << 1 | c << 2.
Rational cayley_value(const std::array<Rational, 8>& w);

/// C(n,3) * 5^(n-3). Throws std::invalid_argument for n < 3.
Integer hd_dimension(int n);

/// All 3-subsets of {1..n} in lexicographic order.
std::vector<Triple> triples(int n);

struct ModuleEntry {
  Triple triple;
  /// Lowering exponents on the complementary factors, in increasing factor order.
  std::vector<int> exponents;
  TensorPolynomial polynomial;
  WeightVector weight;
};

struct ModuleBasis {
  int n = 0;
  std::vector<ModuleEntry> entries;
};

/// Triples in lexicographic order, exponent boxes {0..4}^(n-3) in odometer
/// order (first complementary factor slowest). Every entry is normalized.
ModuleBasis hd_basis(int n, unsigned workers = 1);

/// a_f b_g - a_g b_f, where p = a X_top^2 + b X_top + c.
TensorPolynomial top_pair_product(const TensorPolynomial& f, const TensorPolynomial& g);

}  // namespace spm

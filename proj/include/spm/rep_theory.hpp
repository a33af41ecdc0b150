#pragma once

// Symmetric-group characters, multiplicities of Schur modules inside
// S^d(V_1* (x) ... (x) V_n*) with dim V_i = 2, and the lowering-operator
// algorithms that move a polynomial to the bottom of its module.

#include "spm/polynomial.hpp"

#include <string>
#include <vector>

namespace spm {

class Partition {
 public:
  Partition() = default;
  /// Trailing zeros are dropped; throws std::invalid_argument unless the parts
  /// are positive and weakly decreasing.
  Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int size() const;
  std::size_t length() const { return parts_.size(); }
  /// Part i (0-based), or 0 past the end.
  int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  bool operator==(const Partition&) const = default;
  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

std::string to_string(const Partition& p);
/// "2,2" -> (2,2). Throws std::invalid_argument on malformed input.
Partition parse_partition(const std::string& text);

/// All partitions of d in reverse lexicographic order.
std::vector<Partition> partitions_of(int d);

/// Size of the conjugacy class of cycle type lambda: d! / z_lambda.
Integer class_size(const Partition& cycle_type);

/// Irreducible character chi_pi at the class of cycle type lambda, by the
/// Murnaghan-Nakayama rule.
long long character(const Partition& pi, const Partition& cycle_type);

/// Multiplicity of S_{pi_1} V_1* (x) ... (x) S_{pi_n} V_n* in
/// S^d(V_1* (x) ... (x) V_n*): (1/d!) sum_sigma prod_i chi_{pi_i}(sigma).
Integer invariant_dim(const std::vector<Partition>& partitions);

struct IsotypicSummand {
  std::vector<Partition> partitions;
  Integer multiplicity;
};

/// Every n-tuple of partitions of d with at most two rows whose multiplicity
/// is positive, in odometer order over (d), (d-1,1), ... per factor.
std::vector<IsotypicSummand> decompose_symmetric_power(int d, int n);

/// dim S_pi C^2 = pi_1 - pi_2 + 1; throws for more than two parts.
int sl2_dim(const Partition& pi);

struct IsotypicIdentification {
  std::vector<Partition> partitions;
  Integer multiplicity;
  /// Multiplicity > 1: degree and weight do not pin down the embedding.
  bool ambiguous = false;
};

/// pi_i = ((d - w_i) / 2, (d + w_i) / 2) for the weight of a highest weight
/// vector. Throws std::invalid_argument on a parity or range violation
/// (including w_i > 0, which no highest weight vector can have).
IsotypicIdentification identify_isotypic(int d, const WeightVector& highest_weight);

struct LoweringResult {
  TensorPolynomial polynomial;
  WeightVector weight;
  /// Number of lowerings applied in each factor.
  std::vector<int> steps;
};

/// Lowers maximally in factor 1, then factor 2, ..., then factor n. Throws
/// std::invalid_argument for the zero polynomial and std::domain_error if the
/// result is not a weight vector.
LoweringResult lower_to_lowest(const TensorPolynomial& p);

struct WeightedPolynomial {
  TensorPolynomial polynomial;
  WeightVector weight;
  /// Lowering exponents per factor that produced this vector.
  std::vector<int> exponents;
};

/// Nonzero normalized lower(., n)^{e_n} ... lower(., 1)^{e_1}(hwv) for every
/// exponent vector with 0 <= e_k <= max_depth[k], in lexicographic order of
/// (e_1, ..., e_n). Throws std::invalid_argument if hwv is not a weight
/// vector killed by every raising operator.
std::vector<WeightedPolynomial> weight_basis(const TensorPolynomial& hwv,
                                             const std::vector<int>& max_depth);

}  // namespace spm

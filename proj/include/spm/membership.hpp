#pragma once

// Deciding whether a length-2^n vector is the vector of principal minors of a
// symmetric matrix, and the sign-flip experiment on generic matrices.

#include "spm/group.hpp"
#include "spm/hyperdet.hpp"
#include "spm/minor_map.hpp"

#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>

namespace spm {

enum class Verdict { kMember, kNonMember, kIndeterminate };
enum class Method { kBasis, kReconstruct, kPrefilter };
enum class ReconstructMode { kExact, kNumeric };

std::string to_string(Verdict v);
std::string to_string(Method m);
std::string to_string(ReconstructMode m);
Method parse_method(const std::string& text);
ReconstructMode parse_mode(const std::string& text);

struct ComplexSymmetricMatrix {
  int n = 0;
  std::vector<std::complex<double>> entries;  // row-major n x n

  std::complex<double> operator()(int i, int j) const { return entries[i * n + j]; }
};

std::complex<double> complex_principal_minor(const ComplexSymmetricMatrix& a, std::uint32_t mask);

struct ReconstructOptions {
  ReconstructMode mode = ReconstructMode::kExact;
  double tol = 1e-9;
  /// Random det-1 moves tried when z_[0..0] = 0.
  int max_chart_moves = 8;
  std::uint64_t seed = 0;
};

enum class ReconstructStatus {
  kSuccess,
  kZeroLeading,     // z_[0..0] = 0 and no chart move helped
  kNonSquare,       // exact mode: some a_ii a_jj - z_ij is not a rational square
  kNoConsistentSigns,
  kVerificationFailed,
};

std::string to_string(ReconstructStatus s);

struct Reconstruction {
  ReconstructStatus status = ReconstructStatus::kSuccess;
  /// Exact mode result: chart.z = scale * minor_vector(matrix, 1).
  std::optional<SymmetricMatrix> matrix;
  /// Numeric mode result, same convention.
  std::optional<ComplexSymmetricMatrix> numeric_matrix;
  Rational scale = 1;
  /// Group element moving the input into the chart z_[0..0] != 0; identity
  /// when no move was needed.
  std::optional<GroupElement> chart;
  int chart_moves = 0;
  /// kNonSquare: the offending pair (0-based).
  std::optional<std::pair<int, int>> pair;
  /// kVerificationFailed: first coordinate a sign-consistent candidate missed.
  std::optional<std::uint32_t> mismatch_index;
  std::string detail;
};

/// Builds a symmetric matrix from the 1x1 and 2x2 minors, fixes the sign gauge
/// on a spanning forest, searches the remaining signs against the 3x3 minors
/// and verifies every coordinate.
Reconstruction reconstruct(const MinorVector& z, const ReconstructOptions& options = {});

struct PrefilterResult {
  bool passed = true;
  /// On failure: the triple of free factors, the full index with the other
  /// factors fixed (triple bits zero), and the nonzero hyperdeterminant.
  std::optional<Triple> triple;
  std::uint32_t fixed_bits = 0;
  Rational value = 0;
};

/// Halves z along factor splits down to 2x2x2 slices and evaluates the
/// hyperdeterminant on each. A failure proves non-membership; passing does not
/// prove membership. Throws std::invalid_argument on the zero vector.
PrefilterResult recursive_prefilter(const MinorVector& z);

struct EvaluationCertificate {
  std::size_t entry_index = 0;
  Rational value;
};

struct MembershipReport {
  Verdict verdict = Verdict::kIndeterminate;
  Method method = Method::kBasis;
  int chart_moves = 0;
  std::optional<EvaluationCertificate> evaluation;
  std::optional<Reconstruction> reconstruction;
  std::optional<PrefilterResult> prefilter;
  std::string detail;
};

/// Caches hd_basis(n) per n so repeated checks reuse it.
class MembershipChecker {
 public:
  explicit MembershipChecker(unsigned workers = 1) : workers_(workers) {}

  const ModuleBasis& basis(int n);
  /// Lowest index of a basis entry not vanishing at z, with its value.
  std::optional<EvaluationCertificate> first_nonvanishing(const MinorVector& z);
  /// Throws std::invalid_argument on the zero vector.
  MembershipReport check(const MinorVector& z, Method method, const ReconstructOptions& options = {});

 private:
  unsigned workers_;
  std::mutex mutex_;
  std::map<int, std::shared_ptr<const ModuleBasis>> cache_;
};

MembershipReport is_member(const MinorVector& z, Method method, const ReconstructOptions& options = {});

struct SignFlipProfile {
  int n = 0;
  /// agreement count -> number of sign patterns producing it
  std::map<int, std::uint64_t> counts;
  std::uint64_t patterns_checked = 0;
};

/// Flips off-diagonal signs in all 2^C(n,2) ways and counts agreeing minors.
/// Throws std::invalid_argument for n > 6.
SignFlipProfile sign_flip_profile(const SymmetricMatrix& a, unsigned workers = 1);

/// Integer entries in [-9, 9] with every off-diagonal entry nonzero.
SymmetricMatrix random_generic_matrix(int n, std::mt19937_64& rng);
/// Integer entries in [-range, range].
SymmetricMatrix random_integer_matrix(int n, std::mt19937_64& rng, int range = 9);

}  // namespace spm

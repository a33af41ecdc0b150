#pragma once

// Index space shared by matrices, minor vectors and polynomials.
//
// A binary multi-index I = [i_1, ..., i_n] is encoded as the integer
// sum_k i_k * 2^(k-1): factor 1 is the least significant bit. This encoding
// is also the coordinate order of every serialized minor vector.

#include "spm/scalar.hpp"

#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace spm {

inline constexpr int kMaxFactors = 20;

class BinaryIndex {
 public:
  BinaryIndex(int n, std::uint32_t bits);
  /// Bits listed factor 1 first, e.g. {1,0,1} is [1,0,1].
  BinaryIndex(std::initializer_list<int> bits);
  static BinaryIndex from_bits(std::span<const int> bits);

  int n() const { return n_; }
  std::uint32_t encoding() const { return bits_; }
  /// Bit of factor k, 1-based.
  int bit(int k) const { return static_cast<int>((bits_ >> (k - 1)) & 1u); }
  std::vector<int> bits() const;

  bool operator==(const BinaryIndex&) const = default;

 private:
  int n_;
  std::uint32_t bits_;
};

BinaryIndex complement(const BinaryIndex& index);
int cardinality(const BinaryIndex& index);

inline std::uint32_t full_mask(int n) { return n == 32 ? ~0u : ((1u << n) - 1u); }

/// Dense vector of 2^n exact coordinates z_I.
class MinorVector {
 public:
  MinorVector() = default;
  /// All-zero vector.
  explicit MinorVector(int n);
  MinorVector(int n, std::vector<Rational> coords);

  int n() const { return n_; }
  std::size_t size() const { return coords_.size(); }

  const Rational& operator[](std::uint32_t encoding) const { return coords_[encoding]; }
  Rational& operator[](std::uint32_t encoding) { return coords_[encoding]; }
  const Rational& operator[](const BinaryIndex& index) const;
  Rational& operator[](const BinaryIndex& index);

  const std::vector<Rational>& coords() const { return coords_; }
  bool is_zero() const;

  /// Unit vector e_I.
  static MinorVector basis_vector(int n, std::uint32_t encoding);

  bool operator==(const MinorVector&) const = default;

 private:
  int n_ = 0;
  std::vector<Rational> coords_;
};

MinorVector operator+(const MinorVector& a, const MinorVector& b);
MinorVector operator*(const Rational& s, const MinorVector& v);

class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;
  explicit SymmetricMatrix(int n);
  /// Row-major rows; throws std::invalid_argument unless square and symmetric.
  SymmetricMatrix(std::initializer_list<std::initializer_list<Rational>> rows);
  static SymmetricMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static SymmetricMatrix diagonal(std::span<const Rational> diag);
  static SymmetricMatrix identity(int n);

  int n() const { return n_; }
  /// Zero-based access.
  const Rational& operator()(int i, int j) const { return entries_[i * n_ + j]; }
  /// Writes both (i,j) and (j,i).
  void set(int i, int j, const Rational& value);

  bool operator==(const SymmetricMatrix&) const = default;

 private:
  int n_ = 0;
  std::vector<Rational> entries_;
};

using WeightVector = std::vector<int>;

}  // namespace spm

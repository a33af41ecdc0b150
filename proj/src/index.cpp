#include "spm/index.hpp"

#include <bit>
#include <string>

namespace spm {

BinaryIndex::BinaryIndex(int n, std::uint32_t bits) : n_(n), bits_(bits) {
  if (n < 0 || n > kMaxFactors) throw std::invalid_argument("factor count out of range");
  if ((bits & ~full_mask(n)) != 0) throw std::invalid_argument("index encoding exceeds 2^n");
}

BinaryIndex::BinaryIndex(std::initializer_list<int> bits)
    : BinaryIndex(from_bits(std::span<const int>(bits.begin(), bits.size()))) {}

BinaryIndex BinaryIndex::from_bits(std::span<const int> bits) {
  std::uint32_t enc = 0;
  for (std::size_t k = 0; k < bits.size(); ++k) {
    if (bits[k] != 0 && bits[k] != 1) throw std::invalid_argument("index bits must be 0 or 1");
    enc |= static_cast<std::uint32_t>(bits[k]) << k;
  }
  return BinaryIndex(static_cast<int>(bits.size()), enc);
}

std::vector<int> BinaryIndex::bits() const {
  std::vector<int> out(n_);
  for (int k = 1; k <= n_; ++k) out[k - 1] = bit(k);
  return out;
}

BinaryIndex complement(const BinaryIndex& index) {
  return BinaryIndex(index.n(), ~index.encoding() & full_mask(index.n()));
}

int cardinality(const BinaryIndex& index) { return std::popcount(index.encoding()); }

MinorVector::MinorVector(int n) : n_(n) {
  if (n < 0 || n > kMaxFactors) throw std::invalid_argument("factor count out of range");
  coords_.assign(std::size_t{1} << n, Rational(0));
}

MinorVector::MinorVector(int n, std::vector<Rational> coords) : n_(n), coords_(std::move(coords)) {
  if (n < 0 || n > kMaxFactors) throw std::invalid_argument("factor count out of range");
  if (coords_.size() != (std::size_t{1} << n)) {
    throw std::invalid_argument("minor vector needs 2^n = " + std::to_string(1u << n) +
                                " coordinates, got " + std::to_string(coords_.size()));
  }
}

const Rational& MinorVector::operator[](const BinaryIndex& index) const {
  if (index.n() != n_) throw std::invalid_argument("index dimension mismatch");
  return coords_[index.encoding()];
}

Rational& MinorVector::operator[](const BinaryIndex& index) {
  if (index.n() != n_) throw std::invalid_argument("index dimension mismatch");
  return coords_[index.encoding()];
}

bool MinorVector::is_zero() const {
  for (const auto& c : coords_) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

MinorVector MinorVector::basis_vector(int n, std::uint32_t encoding) {
  MinorVector v(n);
  v[BinaryIndex(n, encoding)] = 1;
  return v;
}

MinorVector operator+(const MinorVector& a, const MinorVector& b) {
  if (a.n() != b.n()) throw std::invalid_argument("minor vector dimension mismatch");
  MinorVector out(a.n());
  for (std::uint32_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

MinorVector operator*(const Rational& s, const MinorVector& v) {
  MinorVector out(v.n());
  for (std::uint32_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return out;
}

SymmetricMatrix::SymmetricMatrix(int n) : n_(n), entries_(static_cast<std::size_t>(n) * n) {
  if (n < 0) throw std::invalid_argument("negative matrix size");
}

SymmetricMatrix::SymmetricMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  std::vector<std::vector<Rational>> r;
  for (const auto& row : rows) r.emplace_back(row);
  *this = from_rows(r);
}

SymmetricMatrix SymmetricMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  const int n = static_cast<int>(rows.size());
  SymmetricMatrix m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) throw std::invalid_argument("matrix is not square");
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (rows[i][j] != rows[j][i]) throw std::invalid_argument("matrix is not symmetric");
      m.entries_[i * n + j] = rows[i][j];
    }
  }
  return m;
}

SymmetricMatrix SymmetricMatrix::diagonal(std::span<const Rational> diag) {
  SymmetricMatrix m(static_cast<int>(diag.size()));
  for (int i = 0; i < m.n(); ++i) m.set(i, i, diag[i]);
  return m;
}

SymmetricMatrix SymmetricMatrix::identity(int n) {
  SymmetricMatrix m(n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

void SymmetricMatrix::set(int i, int j, const Rational& value) {
  entries_[i * n_ + j] = value;
  entries_[j * n_ + i] = value;
}

}  // namespace spm

#pragma once

// Small exact dense linear algebra: determinants, inverses and ranks.

#include "spm/scalar.hpp"

#include <vector>

namespace spm {

using DenseMatrix = std::vector<std::vector<Rational>>;

/// Cofactor expansion for size <= 3, fraction-free (Bareiss) elimination
/// with row pivoting otherwise. The 0x0 determinant is 1.
Rational determinant(DenseMatrix m);

/// Gauss-Jordan inverse; throws std::domain_error when singular.
DenseMatrix inverse(DenseMatrix m);

std::size_t rank(DenseMatrix m);

}  // namespace spm

#pragma once

// The principal minor map [A, t] -> [t^(n-|I|) Delta_I(A) X^I] and the
// structural identities it satisfies.

#include "spm/index.hpp"
#include "spm/linalg.hpp"

#include <span>
#include <vector>

namespace spm {

/// Determinant of the submatrix keeping row/column k iff i_k = 1. The empty
/// minor is 1.
Rational principal_minor(const SymmetricMatrix& a, const BinaryIndex& index);

/// All 2^n homogenized principal minors. workers = 0 uses every core.
MinorVector minor_vector(const SymmetricMatrix& a, const Rational& t = 1, unsigned workers = 1);

/// Coordinate at the concatenated index (J, K) is z1[J] * z2[K]; the factors of
/// z1 come first.
MinorVector tensor_product(const MinorVector& z1, const MinorVector& z2);

/// Minor vector of A^{-1}, read off from the minors of A in complemented
/// order: Delta_{complement(I)}(A) / det(A). Throws std::domain_error when A is
/// singular.
MinorVector reversed_minors(const SymmetricMatrix& a);

SymmetricMatrix block_diagonal(const SymmetricMatrix& p, const SymmetricMatrix& q);
SymmetricMatrix matrix_inverse(const SymmetricMatrix& a);

/// D A D for D = diag(signs), signs in {+1, -1}.
SymmetricMatrix conjugate_by_signs(const SymmetricMatrix& a, std::span<const int> signs);

/// Permutation maps old factor k to new position perm[k] (both zero-based).
/// relabel(A) = P A P^T with (P A P^T)[perm[i]][perm[j]] = A[i][j].
SymmetricMatrix relabel(const SymmetricMatrix& a, std::span<const int> perm);
/// The matching action on coordinates: bit k of I moves to position perm[k].
MinorVector permute_factors(const MinorVector& z, std::span<const int> perm);

/// True iff b = D a D for some diagonal D with +-1 entries.
bool sign_equivalent(const SymmetricMatrix& a, const SymmetricMatrix& b);

}  // namespace spm

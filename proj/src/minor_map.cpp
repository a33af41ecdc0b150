#include "spm/minor_map.hpp"

#include "spm/parallel.hpp"

#include <bit>
#include <functional>
#include <stdexcept>

namespace spm {

namespace {

DenseMatrix principal_submatrix(const SymmetricMatrix& a, std::uint32_t mask) {
  std::vector<int> kept;
  for (int k = 0; k < a.n(); ++k) {
    if ((mask >> k) & 1u) kept.push_back(k);
  }
  DenseMatrix sub(kept.size(), std::vector<Rational>(kept.size()));
  for (std::size_t r = 0; r < kept.size(); ++r) {
    for (std::size_t c = 0; c < kept.size(); ++c) sub[r][c] = a(kept[r], kept[c]);
  }
  return sub;
}

DenseMatrix to_dense(const SymmetricMatrix& a) {
  DenseMatrix d(a.n(), std::vector<Rational>(a.n()));
  for (int i = 0; i < a.n(); ++i) {
    for (int j = 0; j < a.n(); ++j) d[i][j] = a(i, j);
  }
  return d;
}

}  // namespace

Rational principal_minor(const SymmetricMatrix& a, const BinaryIndex& index) {
  if (index.n() != a.n()) throw std::invalid_argument("index and matrix sizes differ");
  return determinant(principal_submatrix(a, index.encoding()));
}

MinorVector minor_vector(const SymmetricMatrix& a, const Rational& t, unsigned workers) {
  const int n = a.n();
  MinorVector z(n);
  std::vector<Rational> t_powers(n + 1);
  t_powers[0] = 1;
  for (int k = 1; k <= n; ++k) t_powers[k] = t_powers[k - 1] * t;
  parallel_for(z.size(), workers, [&](std::size_t enc) {
    const auto mask = static_cast<std::uint32_t>(enc);
    const int size = std::popcount(mask);
    z[mask] = t_powers[n - size] * determinant(principal_submatrix(a, mask));
  });
  return z;
}

MinorVector tensor_product(const MinorVector& z1, const MinorVector& z2) {
  MinorVector out(z1.n() + z2.n());
  for (std::uint32_t k = 0; k < z2.size(); ++k) {
    for (std::uint32_t j = 0; j < z1.size(); ++j) {
      out[j | (k << z1.n())] = z1[j] * z2[k];
    }
  }
  return out;
}

MinorVector reversed_minors(const SymmetricMatrix& a) {
  const MinorVector z = minor_vector(a);
  const std::uint32_t all = full_mask(a.n());
  const Rational det = z[all];
  if (sgn(det) == 0) throw std::domain_error("matrix is singular");
  MinorVector out(a.n());
  for (std::uint32_t enc = 0; enc < z.size(); ++enc) out[enc] = z[all & ~enc] / det;
  return out;
}

SymmetricMatrix block_diagonal(const SymmetricMatrix& p, const SymmetricMatrix& q) {
  SymmetricMatrix out(p.n() + q.n());
  for (int i = 0; i < p.n(); ++i) {
    for (int j = i; j < p.n(); ++j) out.set(i, j, p(i, j));
  }
  for (int i = 0; i < q.n(); ++i) {
    for (int j = i; j < q.n(); ++j) out.set(p.n() + i, p.n() + j, q(i, j));
  }
  return out;
}

SymmetricMatrix matrix_inverse(const SymmetricMatrix& a) {
  const DenseMatrix inv = inverse(to_dense(a));
  return SymmetricMatrix::from_rows(inv);
}

SymmetricMatrix conjugate_by_signs(const SymmetricMatrix& a, std::span<const int> signs) {
  if (static_cast<int>(signs.size()) != a.n()) throw std::invalid_argument("sign count mismatch");
  SymmetricMatrix out(a.n());
  for (int i = 0; i < a.n(); ++i) {
    for (int j = i; j < a.n(); ++j) out.set(i, j, a(i, j) * (signs[i] * signs[j]));
  }
  return out;
}

SymmetricMatrix relabel(const SymmetricMatrix& a, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != a.n()) throw std::invalid_argument("permutation size mismatch");
  SymmetricMatrix out(a.n());
  for (int i = 0; i < a.n(); ++i) {
    for (int j = i; j < a.n(); ++j) out.set(perm[i], perm[j], a(i, j));
  }
  return out;
}

MinorVector permute_factors(const MinorVector& z, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != z.n()) throw std::invalid_argument("permutation size mismatch");
  MinorVector out(z.n());
  for (std::uint32_t enc = 0; enc < z.size(); ++enc) {
    std::uint32_t moved = 0;
    for (int k = 0; k < z.n(); ++k) {
      if ((enc >> k) & 1u) moved |= 1u << perm[k];
    }
    out[moved] = z[enc];
  }
  return out;
}

bool sign_equivalent(const SymmetricMatrix& a, const SymmetricMatrix& b) {
  const int n = a.n();
  if (b.n() != n) return false;
  for (int i = 0; i < n; ++i) {
    if (a(i, i) != b(i, i)) return false;
  }
  // Propagate signs along nonzero off-diagonals; each component is free.
  std::vector<int> sign(n, 0);
  for (int root = 0; root < n; ++root) {
    if (sign[root] != 0) continue;
    sign[root] = 1;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      const int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < n; ++j) {
        if (j == i || sgn(a(i, j)) == 0) continue;
        int needed;
        if (b(i, j) == a(i, j)) {
          needed = sign[i];
        } else if (b(i, j) == -a(i, j)) {
          needed = -sign[i];
        } else {
          return false;
        }
        if (sign[j] == 0) {
          sign[j] = needed;
          stack.push_back(j);
        } else if (sign[j] != needed) {
          return false;
        }
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (sgn(a(i, j)) == 0 && sgn(b(i, j)) != 0) return false;
    }
  }
  return true;
}

}  // namespace spm

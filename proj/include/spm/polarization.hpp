#pragma once

// Polarization of homogeneous polynomials and the linear-space vanishing test
// built on it.

#include "spm/polynomial.hpp"

#include <array>
#include <span>

namespace spm {

enum class PolarConvention {
  /// Coefficient of t_1 t_2 ... t_d in F(t_1 v_1 + ... + t_d v_d). With this
  /// convention F(v, ..., v) = d! F(v).
  kCoefficient,
  /// The coefficient form divided by d!, so that F(v, ..., v) = F(v).
  kAveraged,
};

/// Symmetric multilinear form of a homogeneous p evaluated on vectors. Throws
/// std::invalid_argument unless p is homogeneous of degree vectors.size() (the
/// zero polynomial accepts any count).
Rational polarize_eval(const TensorPolynomial& p, std::span<const MinorVector> vectors,
                       PolarConvention convention = PolarConvention::kCoefficient);

/// True iff p vanishes identically on span(basis): every polarization slot
/// F(x^beta), beta a composition of the degree over the basis, is zero.
bool linear_subspace_vanishes(const TensorPolynomial& p, std::span<const MinorVector> basis);

/// F (x) gamma^d: a polynomial on n factors becomes one on n+1 factors by
/// X^J -> gamma[0] X^{J,0} + gamma[1] X^{J,1}; the new factor is last.
TensorPolynomial augment(const TensorPolynomial& f, const std::array<Rational, 2>& gamma);

}  // namespace spm

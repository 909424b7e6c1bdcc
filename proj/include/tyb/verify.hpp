#pragma once

#include <functional>
#include <string>

#include "tyb/check.hpp"
#include "tyb/coefficients.hpp"
#include "tyb/momentum.hpp"
#include "tyb/tensor.hpp"

namespace tyb {

using Builder = std::function<Operator(const Momentum&)>;
using ThetaBuilder = std::function<Operator(const Momentum&, cplx)>;

// Twisted identities are verified in the conjugated form, where the diagonal
// conjugation survives only as momentum shifts: the pair factor acting on
// spaces (1,2) with spectator c in space 3 becomes
//   S = sum_c builder(p + h e_c) ⊗ E_cc,
// block-diagonal in the third factor, while the (2,3) factor stays unshifted.
Operator shifted_embed(const Builder& builder, const Momentum& m);

// Residual of A^2 - scale*lambda*A - scale^2, covering the plain Hecke
// relation (scale 1) and its rescaled form for normalized SL/super matrices.
CheckReport check_hecke(const Operator& a, cplx lambda, double tol, cplx scale = 1.0);

// Braid relation of a constant solution: with A = R embedded on (1,2) and
// B on (2,3), residual of A B A - B A B.
CheckReport check_constant_ybe(const Operator& rhat, double tol);

// Twisted braid relation: with S = shifted_embed(builder, m) and
// T = builder(m) embedded on (2,3), residual of S T S - T S T.
CheckReport check_dynamical_ybe(const Builder& builder, const Momentum& m, double tol);

// Spectral twisted braid relation with multiplicative parameters:
// S(y) T(yz) S(z) - T(z) S(yz) T(y), every factor the baxterized family over
// the builder's Hecke output.
CheckReport check_spectral_dybe(const Builder& builder, const Momentum& m, cplx y, cplx z,
                                cplx lambda, double tol);

// Additive twisted braid relation over a rational family F(p, theta):
// S(th) T(th+th') S(th') - T(th') S(th+th') T(th).
CheckReport check_additive_dybe_family(const ThetaBuilder& family, const Momentum& m, cplx theta,
                                       cplx theta2, double tol);

// Specialization to the rational involution family theta*R0(p) - 1.
CheckReport check_additive_dybe(const Momentum& m, cplx theta, cplx theta2, double tol);

// Reflection-type consequences of the twisted braid relation:
//   (a) S^2 T S^2 T = T S^2 T S^2
//   (b) T^2 S T^2 S = S T^2 S T^2
CheckReport check_reflection(const Builder& builder, const Momentum& m, double tol);

// Spectral unitarity: R(y) R(1/y) = (lambda^2 - (y - 1/y)^2) * 1 over the
// given Hecke base.
CheckReport check_unitarity(const Operator& base, cplx y, cplx lambda, double tol);

// Core of the hermiticity check on an already-built braid-form matrix:
// residual of R(p)^dagger - P R(p) P with R(p) = P * rhat.
CheckReport check_hermiticity_matrix(const Operator& rhat, double tol);

// Hermiticity of the normalized SL matrix. Outside its domain (real q > 1,
// real momenta, unitary gauge, canonical limit, pure GL, all pair arguments
// |d| > 1) the report is skipped with a reason instead of failing.
CheckReport check_hermiticity(const Scheme& scheme, const Momentum& m, double tol);

} // namespace tyb

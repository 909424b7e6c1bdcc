#pragma once

#include <string>

#include "tyb/coefficients.hpp"
#include "tyb/momentum.hpp"
#include "tyb/tensor.hpp"

namespace tyb {

// Constant GL_q(N) solution in braid form: R_hat = P * R with
//   R = q sum_i E_ii ⊗ E_ii + sum_{i≠j} E_ii ⊗ E_jj + lambda sum_{i<j} E_ij ⊗ E_ji.
// Satisfies the braid relation and the Hecke relation
// R_hat^2 = lambda R_hat + 1.
Operator build_constant_r(int local_dim, cplx q);

// Momentum-dependent braid-form solution
//   R_hat(p)[(i1,i2),(j1,j2)] = d_{i1,j2} d_{i2,j1} a_{i1 i2}(p)
//                             + d_{i1,j1} d_{i2,j2} b_{i1 i2}(p),
// with coefficients from the scheme. Hecke holds for every gauge and b0.
Operator build_dynamical_r(const Scheme& scheme, const Momentum& m);

// SL_q(N) normalization q^{-1/N} of the canonical-limit, unitary-gauge
// GL matrix. Requires pure GL grading.
Operator build_dynamical_sl(const Scheme& scheme, const Momentum& m);

// SL_q(K|N-K) matrix assembled literally from its block table: diagonal flip
// entries (-1)^{(i)} q^{1-2(i)}, same-block coefficients in p_i - p_j (odd
// block reversed for b), cross-block coefficients in p_i + p_j, all times
// q^{1/(N-K) - 1/K}. Requires 1 <= K <= N-1, canonical limit, unitary gauge.
Operator build_super_sl(const Scheme& scheme, const Momentum& m);

cplx sl_factor(const Grading& g);    // q^{-1/N}
cplx super_factor(const Grading& g); // q^{1/(N-K) - 1/K}

// Trigonometric-style spectral family y^{-1} B - y B^{-1} over a Hecke base,
// using the algebraic inverse B^{-1} = B - lambda. The base is pre-checked
// against the Hecke relation.
Operator build_baxterized(const Operator& base, cplx y, cplx lambda);

// Same construction without the Hecke pre-check (checkers feed deliberately
// corrupted inputs through this path).
Operator baxterize_unchecked(const Operator& base, cplx y, cplx lambda);

// Rational involution R0(p): flip coefficients sqrt((d+h)(d-h))/d on the
// pair difference d = p_i - p_j, diagonal 1, and antisymmetric
// b_ij = h/(p_i - p_j). Squares to the identity.
Operator build_yangian_r0(const Momentum& m);

// Additive spectral family theta * R0(p) - 1.
Operator build_yangian_r(const Momentum& m, cplx theta);

// Classical antisymmetric structure sum_{j<k} (i/(p_j-p_k)) (E_jk⊗E_kj - E_kj⊗E_jk).
Operator build_classical_r0(const Momentum& m);

enum class RMatrixKind {
    constant_glq,
    dynamical,
    dynamical_sl,
    dynamical_super_sl,
    baxterized_trig,
    baxterized_constant,
    yangian_rational,
    classical_r0,
};

const char* kind_name(RMatrixKind kind);

// Descriptor bundling a builder kind with its scheme and the scalar
// normalization in front of the raw ansatz (1 for plain GL).
struct RMatrixSpec {
    RMatrixKind kind;
    Scheme scheme;
    cplx normalization = 1.0;

    Operator build(const Momentum& m) const;
};

} // namespace tyb

#pragma once

#include <stdexcept>
#include <vector>

#include "tyb/check.hpp"
#include "tyb/momentum.hpp"
#include "tyb/scalar.hpp"

namespace tyb {

// Index grading for GL_q(K|N-K): indices 0..K-1 are even with diagonal
// coefficient q, indices K..N-1 are odd with -1/q. K == N is the pure
// GL_q(N) case. Both values solve a^2 - lambda*a - 1 = 0.
struct Grading {
    int N = 1;
    int K = 1;
    cplx q = 2.0;

    Grading() = default;
    Grading(int n, int k, cplx q_);

    int parity(int i) const { return i < K ? 0 : 1; }
    cplx a(int i) const { return i < K ? q : -1.0 / q; }
    cplx lambda() const { return q - 1.0 / q; }
    bool pure_gl() const { return K == N; }
};

// Constant matrix b0 parametrizing the general solution, constrained by
//   b0_ii = 0,  b0_ij + b0_ji = lambda,
//   b0_ij b0_jk b0_ki + b0_ik b0_kj b0_ji = 0.
// The canonical limit (entries above the diagonal pushed to infinity with
// the sum rule kept) is stored symbolically and evaluated through closed
// forms instead of large finite entries.
class BZero {
public:
    static BZero canonical(int n);
    static BZero from_matrix(std::vector<std::vector<cplx>> entries);

    bool is_canonical() const { return canonical_; }
    int size() const { return n_; }
    cplx at(int i, int j) const;

private:
    BZero(int n, bool canonical, std::vector<std::vector<cplx>> m)
        : n_(n), canonical_(canonical), entries_(std::move(m)) {}
    int n_ = 0;
    bool canonical_ = true;
    std::vector<std::vector<cplx>> entries_;
};

// Constructive solution family of the b0 constraints:
//   b0_ij = lambda * beta_i / (beta_i - beta_j),  b0_ii = 0.
// Antisymmetry of the denominator product makes the cyclic condition hold
// identically; nearly coincident beta components reproduce the canonical
// limit. Throws on (nearly) coincident beta.
BZero beta_family(int n, const std::vector<cplx>& beta, cplx q);

// Verifies the three b0 constraints; reports the worst violation and the
// triple realizing it. Report residuals are relative to |lambda| (pair
// conditions) and |lambda|^3 (cyclic condition).
CheckReport validate_b0(const BZero& b0, cplx q, double tol);

enum class Gauge { unitary, upper_triangular };

// Everything scalar in the R-matrix ansatz: grading, b0 data, the gauge
// choice for the flip coefficients, and h. Immutable after construction.
struct Scheme {
    Grading sig;
    BZero b0;
    Gauge gauge = Gauge::unitary;
    double h = 0.1;

    Scheme(Grading g, BZero b, Gauge gauge_, double h_);
    bool canonical() const { return b0.is_canonical(); }
};

struct PoleError : std::runtime_error {
    PoleError(int i_, int j_, const std::string& what) : std::runtime_error(what), i(i_), j(j_) {}
    int i;
    int j;
};

// q-bracket [x]_q = (q^x - q^{-x}) / (q - q^{-1}), principal powers.
cplx q_bracket(cplx x, cplx q);

// Momentum-dependent diagonal coefficient b_ij(p). For finite b0 this is
//   b_ij = lambda A b0_ij / (A b0_ij + b0_ji / A),  A = a_i^{p_i/h} a_j^{-p_j/h},
// with principal-branch powers. For the canonical limit it is the closed
// form b(x) = q^x / [x]_q evaluated on the pair's reduced argument:
// (p_i-p_j)/h on the even block, (p_j-p_i)/h on the odd block, and
// +-(p_i+p_j)/h on the mixed blocks. Returns 0 for i == j. Throws PoleError
// at a vanishing denominator (resonance).
cplx b_of_p(const Scheme& scheme, const Momentum& m, int i, int j);

// Flip coefficient a_ij(p). Diagonal entries are the constant a_i. Off the
// diagonal only the product a_ij a_ji = 1 + b_ij b_ji is constrained; the
// gauge fixes the split: upper_triangular puts the whole product on i<j,
// unitary takes the symmetric square root (closed bracket form
// sqrt([x+1]_q [x-1]_q)/[x]_q in the canonical limit, principal sqrt of the
// product otherwise), with the branch fixed on the (min,max) orientation.
cplx a_of_p(const Scheme& scheme, const Momentum& m, int i, int j);

// Pointwise constraint system at one momentum: b_ii = 0, b_ij + b_ji =
// lambda, a_ij a_ji - b_ij b_ji = 1, and the cyclic triple condition
// b_ij b_jk b_ki + b_ik b_kj b_ji = 0. Reports the worst relative violation.
CheckReport check_pointwise_constraints(const Scheme& scheme, const Momentum& m, double tol);

// Verifies the one-step shift recursions
//   b_ij(p_i+h, p_j)  = b_ij a_i / (1/a_i + b_ij)
//   b_ij(p_i, p_j+h)  = (b_ij / a_j) / (a_j - b_ij)
// and their general (n,m)-step closed form for (n,m) in
// {(1,1),(2,1),(1,2),(-1,1)}, for every ordered pair. Reports the worst
// residual; sub-residuals are labelled per pair and relation.
CheckReport check_recursions(const Scheme& scheme, const Momentum& m, double tol);

// Flags every pair whose b-denominator has a zero within `margin` (in p
// units) of the current configuration, searching along shifts of either
// member of the pair across all branches. ok <=> no pair flagged.
ResonanceReport resonance_check(const Momentum& m, const Scheme& scheme, double margin);

// Canonical-limit pole set for a bare grading (poles of [x]_q only).
ResonanceReport resonance_check(const Momentum& m, const Grading& sig, double margin);

// Suite-level guard: the point itself plus everything reachable by the
// shifts the checkers perform (single +-1, +-2 shifts and the two-coordinate
// recursion steps) must be non-resonant.
bool momentum_is_safe(const Scheme& scheme, const Momentum& m, double margin);

std::string scheme_digest(const Scheme& scheme, const Momentum& m);

} // namespace tyb

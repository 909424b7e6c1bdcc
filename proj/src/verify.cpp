#include "tyb/verify.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "tyb/rmatrix.hpp"

namespace tyb {

namespace {

Operator blocks_to_arity3(const std::vector<Operator>& blocks, int n) {
    Operator out(n, 3);
    const std::size_t nn = static_cast<std::size_t>(n);
    const std::size_t pair_dim = nn * nn;
    for (std::size_t c = 0; c < nn; ++c) {
        const Operator& b = blocks[c];
        for (std::size_t r = 0; r < pair_dim; ++r)
            for (std::size_t col = 0; col < pair_dim; ++col)
                out.at(r * nn + c, col * nn + c) = b.at(r, col);
    }
    return out;
}

std::vector<Operator> shifted_blocks(const Builder& builder, const Momentum& m) {
    std::vector<Operator> blocks;
    blocks.reserve(static_cast<std::size_t>(m.size()));
    for (int c = 0; c < m.size(); ++c) blocks.push_back(builder(shift(m, c, 1)));
    return blocks;
}

std::string momentum_digest(const Momentum& m) {
    std::string s = "h=" + fmt17(m.h) + ";p=[";
    for (int i = 0; i < m.size(); ++i) s += fmt17(m.p[i]) + (i + 1 == m.size() ? "" : ",");
    s += "]";
    return s;
}

// Residual of an identity lhs == rhs whose sides are products that may
// cancel to zero at special parameter values. The relative value is then
// measured against the magnitude of the factors entering the products, not
// against the (possibly vanishing) results.
Residual identity_residual(const Operator& lhs, const Operator& rhs, double factor_scale) {
    Residual r = residual(lhs, rhs);
    const double scale = std::max({lhs.frobenius(), rhs.frobenius(), factor_scale});
    if (scale > 0.0) r.relative = r.absolute / scale;
    return r;
}

} // namespace

Operator shifted_embed(const Builder& builder, const Momentum& m) {
    const int n = m.size();
    std::vector<Operator> blocks = shifted_blocks(builder, m);
    for (const Operator& b : blocks)
        if (b.arity() != 2 || b.local_dim() != n)
            throw std::invalid_argument("shifted_embed: builder must produce arity-2 operators "
                                        "on C^N with N = momentum size");
    return blocks_to_arity3(blocks, n);
}

CheckReport check_hecke(const Operator& a, cplx lambda, double tol, cplx scale) {
    const Operator rhs = linear_comb(scale * lambda, a, scale * scale,
                                     Operator::identity(a.local_dim(), a.arity()));
    return make_report("hecke", residual(a * a, rhs), tol);
}

CheckReport check_constant_ybe(const Operator& rhat, double tol) {
    if (rhat.arity() != 2) throw std::invalid_argument("check_constant_ybe: arity-2 input required");
    const int n = rhat.local_dim();
    const Operator a = embed(rhat, Slot::s12, n);
    const Operator b = embed(rhat, Slot::s23, n);
    return make_report("constant_ybe", residual(a * b * a, b * a * b), tol);
}

CheckReport check_dynamical_ybe(const Builder& builder, const Momentum& m, double tol) {
    const Operator s = shifted_embed(builder, m);
    const Operator t = embed(builder(m), Slot::s23, m.size());
    const double scale = s.frobenius() * t.frobenius() * std::max(s.frobenius(), t.frobenius());
    CheckReport rep = make_report("dynamical_ybe", identity_residual(s * t * s, t * s * t, scale),
                                  tol, momentum_digest(m));
    return rep;
}

CheckReport check_spectral_dybe(const Builder& builder, const Momentum& m, cplx y, cplx z,
                                cplx lambda, double tol) {
    if (std::abs(y) == 0.0 || std::abs(z) == 0.0)
        throw std::invalid_argument("check_spectral_dybe: spectral parameters must be nonzero");
    const int n = m.size();
    const std::vector<Operator> blocks = shifted_blocks(builder, m);
    const Operator base = builder(m);
    // Corrupted inputs must surface as a large residual, not as an input
    // error, so the family is formed without the Hecke pre-check.
    auto s_of = [&](cplx w) {
        std::vector<Operator> bw;
        bw.reserve(blocks.size());
        for (const Operator& b : blocks) bw.push_back(baxterize_unchecked(b, w, lambda));
        return blocks_to_arity3(bw, n);
    };
    auto t_of = [&](cplx w) { return embed(baxterize_unchecked(base, w, lambda), Slot::s23, n); };
    const Operator sy = s_of(y), syz = s_of(y * z), sz = s_of(z);
    const Operator ty = t_of(y), tyz = t_of(y * z), tz = t_of(z);
    const Operator lhs = sy * tyz * sz;
    const Operator rhs = tz * syz * ty;
    const double scale = std::max(sy.frobenius() * tyz.frobenius() * sz.frobenius(),
                                  tz.frobenius() * syz.frobenius() * ty.frobenius());
    return make_report("spectral_dybe", identity_residual(lhs, rhs, scale), tol,
                       momentum_digest(m) + ";y=" + fmt17(y) + ";z=" + fmt17(z));
}

CheckReport check_additive_dybe_family(const ThetaBuilder& family, const Momentum& m, cplx theta,
                                       cplx theta2, double tol) {
    const int n = m.size();
    auto s_of = [&](cplx th) {
        std::vector<Operator> bw;
        bw.reserve(static_cast<std::size_t>(n));
        for (int c = 0; c < n; ++c) bw.push_back(family(shift(m, c, 1), th));
        return blocks_to_arity3(bw, n);
    };
    auto t_of = [&](cplx th) { return embed(family(m, th), Slot::s23, n); };
    const Operator s1 = s_of(theta), s12 = s_of(theta + theta2), s2 = s_of(theta2);
    const Operator t1 = t_of(theta), t12 = t_of(theta + theta2), t2 = t_of(theta2);
    const Operator lhs = s1 * t12 * s2;
    const Operator rhs = t2 * s12 * t1;
    const double scale = std::max(s1.frobenius() * t12.frobenius() * s2.frobenius(),
                                  t2.frobenius() * s12.frobenius() * t1.frobenius());
    return make_report("additive_dybe", identity_residual(lhs, rhs, scale), tol,
                       momentum_digest(m) + ";theta=" + fmt17(theta) + ";theta2=" + fmt17(theta2));
}

CheckReport check_additive_dybe(const Momentum& m, cplx theta, cplx theta2, double tol) {
    return check_additive_dybe_family(
        [](const Momentum& mm, cplx th) { return build_yangian_r(mm, th); }, m, theta, theta2,
        tol);
}

CheckReport check_reflection(const Builder& builder, const Momentum& m, double tol) {
    const Operator s = shifted_embed(builder, m);
    const Operator t = embed(builder(m), Slot::s23, m.size());
    const Operator s2 = s * s;
    const Operator t2 = t * t;
    const Residual ra = residual(s2 * t * s2 * t, t * s2 * t * s2);
    const Residual rb = residual(t2 * s * t2 * s, s * t2 * s * t2);
    const Residual worst = ra.relative >= rb.relative ? ra : rb;
    CheckReport rep = make_report("reflection", worst, tol, momentum_digest(m),
                                  {{"pair_l", ra.absolute, ra.relative},
                                   {"pair_lt", rb.absolute, rb.relative}});
    return rep;
}

CheckReport check_unitarity(const Operator& base, cplx y, cplx lambda, double tol) {
    if (std::abs(y) == 0.0) throw std::invalid_argument("check_unitarity: y must be nonzero");
    const cplx dy = y - 1.0 / y;
    const cplx scalar = lambda * lambda - dy * dy;
    const Operator left = baxterize_unchecked(base, y, lambda);
    const Operator right = baxterize_unchecked(base, 1.0 / y, lambda);
    return make_report(
        "unitarity",
        identity_residual(left * right,
                          scalar * Operator::identity(base.local_dim(), base.arity()),
                          left.frobenius() * right.frobenius()),
        tol);
}

CheckReport check_hermiticity_matrix(const Operator& rhat, double tol) {
    const Operator p = permutation(rhat.local_dim());
    const Operator r = p * rhat;
    return make_report("hermiticity", residual(r.adjoint(), p * r * p), tol);
}

CheckReport check_hermiticity(const Scheme& scheme, const Momentum& m, double tol) {
    const Grading& g = scheme.sig;
    const std::string digest = scheme_digest(scheme, m);
    if (std::abs(g.q.imag()) > 1e-14)
        return make_skipped("hermiticity", tol, "complex q", digest);
    if (g.q.real() <= 1.0)
        return make_skipped("hermiticity", tol, "requires real q > 1", digest);
    if (!g.pure_gl() || !scheme.canonical() || scheme.gauge != Gauge::unitary)
        return make_skipped("hermiticity", tol,
                            "requires pure GL grading, canonical limit, unitary gauge", digest);
    for (int i = 0; i < g.N; ++i)
        for (int j = i + 1; j < g.N; ++j) {
            const double d = (m.p[i] - m.p[j]) / scheme.h;
            if (std::abs(d) <= 1.0)
                return make_skipped("hermiticity", tol,
                                    "pair (" + std::to_string(i) + "," + std::to_string(j) +
                                        ") has |d| <= 1, flip coefficient not real",
                                    digest);
        }
    CheckReport rep = check_hermiticity_matrix(build_dynamical_sl(scheme, m), tol);
    rep.tolerance = tol;
    rep.passed = rep.residual.relative <= tol;
    rep.inputs_digest = digest;
    return rep;
}

} // namespace tyb

#include "tyb/rmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tyb {

namespace {

constexpr double kHeckePrecheckTol = 1e-8;

cplx bracket_or_pole(double x, cplx q, int i, int j) {
    const cplx br = q_bracket(x, q);
    const double scale = (std::abs(cpow(q, x)) + std::abs(cpow(q, -x))) / std::abs(q - 1.0 / q);
    if (std::abs(br) < 1e-12 * scale)
        throw PoleError(i, j, "[x]_q vanishes at x = " + fmt17(x));
    return br;
}

cplx b_closed(double x, cplx q, int i, int j) { return cpow(q, x) / bracket_or_pole(x, q, i, j); }

cplx a_closed(double x, cplx q, int i, int j) {
    return std::sqrt(q_bracket(x + 1.0, q) * q_bracket(x - 1.0, q)) /
           bracket_or_pole(x, q, i, j);
}

} // namespace

Operator build_constant_r(int local_dim, cplx q) {
    const cplx lam = q - 1.0 / q;
    if (std::abs(lam) < 1e-14)
        throw std::invalid_argument("build_constant_r: degenerate deformation (q = +-1)");
    const std::size_t n = static_cast<std::size_t>(local_dim);
    Operator r(local_dim, 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            r.at(i * n + j, i * n + j) = (i == j) ? q : cplx(1.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) r.at(i * n + j, j * n + i) += lam;
    return permutation(local_dim) * r;
}

Operator build_dynamical_r(const Scheme& scheme, const Momentum& m) {
    const int n = scheme.sig.N;
    const std::size_t nn = static_cast<std::size_t>(n);
    Operator out(n, 2);
    for (std::size_t i1 = 0; i1 < nn; ++i1)
        for (std::size_t i2 = 0; i2 < nn; ++i2) {
            const int i = static_cast<int>(i1), j = static_cast<int>(i2);
            out.at(i1 * nn + i2, i2 * nn + i1) += a_of_p(scheme, m, i, j);
            if (i1 != i2) out.at(i1 * nn + i2, i1 * nn + i2) += b_of_p(scheme, m, i, j);
        }
    return out;
}

Operator build_dynamical_sl(const Scheme& scheme, const Momentum& m) {
    if (!scheme.sig.pure_gl())
        throw std::invalid_argument("build_dynamical_sl: requires pure GL grading (K = N)");
    if (!scheme.canonical())
        throw std::invalid_argument("build_dynamical_sl: requires the canonical-limit b0");
    if (scheme.gauge != Gauge::unitary)
        throw std::invalid_argument("build_dynamical_sl: requires the unitary gauge");
    return sl_factor(scheme.sig) * build_dynamical_r(scheme, m);
}

Operator build_super_sl(const Scheme& scheme, const Momentum& m) {
    const Grading& g = scheme.sig;
    if (g.K < 1 || g.K > g.N - 1)
        throw std::invalid_argument("build_super_sl: requires 1 <= K <= N-1");
    if (!scheme.canonical())
        throw std::invalid_argument("build_super_sl: requires the canonical-limit b0");
    if (scheme.gauge != Gauge::unitary)
        throw std::invalid_argument("build_super_sl: requires the unitary gauge");
    if (m.size() != g.N) throw std::invalid_argument("build_super_sl: momentum size != N");

    const cplx q = g.q;
    const double h = scheme.h;
    const int n = g.N;
    const std::size_t nn = static_cast<std::size_t>(n);
    Operator out(n, 2);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const std::size_t row = static_cast<std::size_t>(i) * nn + static_cast<std::size_t>(j);
            const int pi = g.parity(i), pj = g.parity(j);
            // Flip part.
            cplx flip;
            if (i == j) {
                flip = (pi == 0) ? q : -1.0 / q;
            } else if (pi == pj) {
                const int lo = std::min(i, j), hi = std::max(i, j);
                flip = a_closed((m.p[lo] - m.p[hi]) / h, q, i, j);
            } else {
                flip = a_closed((m.p[i] + m.p[j]) / h, q, i, j);
            }
            out.at(row, static_cast<std::size_t>(j) * nn + static_cast<std::size_t>(i)) += flip;
            // Diagonal part; the odd block uses the reversed difference and
            // the cross blocks the signed sum, matching the shift recursions
            // with diagonal coefficient -1/q.
            if (i != j) {
                double x;
                if (pi == 0 && pj == 0) x = (m.p[i] - m.p[j]) / h;
                else if (pi == 1 && pj == 1) x = (m.p[j] - m.p[i]) / h;
                else if (pi == 0) x = (m.p[i] + m.p[j]) / h;
                else x = -(m.p[i] + m.p[j]) / h;
                out.at(row, row) += b_closed(x, q, i, j);
            }
        }
    out *= super_factor(g);
    return out;
}

cplx sl_factor(const Grading& g) { return cpow(g.q, -1.0 / g.N); }

cplx super_factor(const Grading& g) {
    if (g.K < 1 || g.K > g.N - 1)
        throw std::invalid_argument("super_factor: requires 1 <= K <= N-1");
    return cpow(g.q, 1.0 / (g.N - g.K) - 1.0 / g.K);
}

Operator baxterize_unchecked(const Operator& base, cplx y, cplx lambda) {
    if (std::abs(y) == 0.0) throw std::invalid_argument("baxterize: y must be nonzero");
    const Operator inv =
        linear_comb(1.0, base, -lambda, Operator::identity(base.local_dim(), base.arity()));
    return linear_comb(1.0 / y, base, -y, inv);
}

Operator build_baxterized(const Operator& base, cplx y, cplx lambda) {
    const Operator id = Operator::identity(base.local_dim(), base.arity());
    const Operator hecke = linear_comb(1.0, base * base - lambda * base, -1.0, id);
    const double rel = hecke.frobenius() / std::max(1.0, (base * base).frobenius());
    if (rel > kHeckePrecheckTol)
        throw std::invalid_argument("build_baxterized: base fails the Hecke relation (residual " +
                                    fmt17(rel) + ")");
    return baxterize_unchecked(base, y, lambda);
}

Operator build_yangian_r0(const Momentum& m) {
    const int n = m.size();
    const double h = m.h;
    const std::size_t nn = static_cast<std::size_t>(n);
    double pmax = 1.0;
    for (double v : m.p) pmax = std::max(pmax, std::abs(v));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(m.p[i] - m.p[j]) < 1e-12 * pmax)
                throw PoleError(i, j, "build_yangian_r0: coincident momenta");
    Operator out(n, 2);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const std::size_t row = static_cast<std::size_t>(i) * nn + static_cast<std::size_t>(j);
            cplx flip;
            if (i == j) {
                flip = 1.0;
            } else {
                const int lo = std::min(i, j), hi = std::max(i, j);
                const double d = m.p[lo] - m.p[hi];
                flip = std::sqrt(cplx((d + h) * (d - h), 0.0)) / d;
            }
            out.at(row, static_cast<std::size_t>(j) * nn + static_cast<std::size_t>(i)) += flip;
            if (i != j) out.at(row, row) += cplx(h / (m.p[i] - m.p[j]), 0.0);
        }
    return out;
}

Operator build_yangian_r(const Momentum& m, cplx theta) {
    return linear_comb(theta, build_yangian_r0(m), -1.0,
                       Operator::identity(m.size(), 2));
}

Operator build_classical_r0(const Momentum& m) {
    const int n = m.size();
    const std::size_t nn = static_cast<std::size_t>(n);
    double pmax = 1.0;
    for (double v : m.p) pmax = std::max(pmax, std::abs(v));
    Operator out(n, 2);
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
            if (std::abs(m.p[j] - m.p[k]) < 1e-12 * pmax)
                throw PoleError(j, k, "build_classical_r0: coincident momenta");
            const cplx c = cplx(0.0, 1.0) / cplx(m.p[j] - m.p[k], 0.0);
            out.at(static_cast<std::size_t>(j) * nn + k, static_cast<std::size_t>(k) * nn + j) += c;
            out.at(static_cast<std::size_t>(k) * nn + j, static_cast<std::size_t>(j) * nn + k) -= c;
        }
    return out;
}

const char* kind_name(RMatrixKind kind) {
    switch (kind) {
        case RMatrixKind::constant_glq: return "constant_glq";
        case RMatrixKind::dynamical: return "dynamical";
        case RMatrixKind::dynamical_sl: return "dynamical_sl";
        case RMatrixKind::dynamical_super_sl: return "dynamical_super_sl";
        case RMatrixKind::baxterized_trig: return "baxterized_trig";
        case RMatrixKind::baxterized_constant: return "baxterized_constant";
        case RMatrixKind::yangian_rational: return "yangian_rational";
        case RMatrixKind::classical_r0: return "classical_r0";
    }
    return "unknown";
}

Operator RMatrixSpec::build(const Momentum& m) const {
    switch (kind) {
        case RMatrixKind::constant_glq: return build_constant_r(scheme.sig.N, scheme.sig.q);
        case RMatrixKind::dynamical: return build_dynamical_r(scheme, m);
        case RMatrixKind::dynamical_sl: return build_dynamical_sl(scheme, m);
        case RMatrixKind::dynamical_super_sl: return build_super_sl(scheme, m);
        case RMatrixKind::yangian_rational: return build_yangian_r0(m);
        case RMatrixKind::classical_r0: return build_classical_r0(m);
        default:
            throw std::invalid_argument(
                "RMatrixSpec: spectral families need a base matrix and a parameter");
    }
}

} // namespace tyb

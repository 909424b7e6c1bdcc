#include "tyb/coefficients.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace tyb {

namespace {

constexpr double kDegenerateLambda = 1e-14;
constexpr double kPoleRel = 1e-12;

void require_pair(const Scheme& scheme, const Momentum& m, int i, int j) {
    const int n = scheme.sig.N;
    if (m.size() != n) throw std::invalid_argument("coefficients: momentum size != N");
    if (i < 0 || i >= n || j < 0 || j >= n)
        throw std::out_of_range("coefficients: index out of range");
    if (std::abs(m.h - scheme.h) > 1e-15 * scheme.h)
        throw std::invalid_argument("coefficients: momentum h differs from scheme h");
}

// Closed-form b(x) = q^x / [x]_q with its pole guard.
cplx b_closed(double x, cplx q, int i, int j) {
    const cplx num = cpow(q, x);
    const cplx inv = cpow(q, -x);
    const cplx lam = q - 1.0 / q;
    const cplx den = (num - inv) / lam;
    if (std::abs(den) < kPoleRel * (std::abs(num) + std::abs(inv)) / std::abs(lam))
        throw PoleError(i, j, "b(x): [x]_q vanishes at x = " + fmt17(x));
    return num / den;
}

// Reduced argument of the pair (i,j) in units of h: difference on the even
// block, reversed difference on the odd block, signed sum across blocks.
double canonical_argument(const Grading& g, const Momentum& m, int i, int j) {
    const int pi = g.parity(i), pj = g.parity(j);
    if (pi == pj)
        return (pi == 0 ? m.p[i] - m.p[j] : m.p[j] - m.p[i]) / m.h;
    return (pi == 0 ? m.p[i] + m.p[j] : -(m.p[i] + m.p[j])) / m.h;
}

} // namespace

Grading::Grading(int n, int k, cplx q_) : N(n), K(k), q(q_) {
    if (n < 1 || n > 8) throw std::invalid_argument("Grading: N must be in [1,8]");
    if (k < 0 || k > n) throw std::invalid_argument("Grading: K must be in [0,N]");
    if (std::abs(q) < 1e-14) throw std::invalid_argument("Grading: q must be nonzero");
}

BZero BZero::canonical(int n) { return BZero(n, true, {}); }

BZero BZero::from_matrix(std::vector<std::vector<cplx>> entries) {
    const int n = static_cast<int>(entries.size());
    for (const auto& row : entries)
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("BZero: matrix must be square");
    return BZero(n, false, std::move(entries));
}

cplx BZero::at(int i, int j) const {
    if (canonical_) throw std::logic_error("BZero: canonical limit has no finite entries");
    return entries_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

BZero beta_family(int n, const std::vector<cplx>& beta, cplx q) {
    if (static_cast<int>(beta.size()) != n)
        throw std::invalid_argument("beta_family: need exactly N beta values");
    double maxb = 0.0;
    for (const cplx& b : beta) maxb = std::max(maxb, std::abs(b));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(beta[i] - beta[j]) <= 1e-10 * maxb)
                throw std::invalid_argument("beta_family: coincident beta at (" +
                                            std::to_string(i) + "," + std::to_string(j) + ")");
    const cplx lam = q - 1.0 / q;
    std::vector<std::vector<cplx>> m(static_cast<std::size_t>(n),
                                     std::vector<cplx>(static_cast<std::size_t>(n), 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) m[i][j] = lam * beta[i] / (beta[i] - beta[j]);
    BZero out = BZero::from_matrix(std::move(m));
    if (!validate_b0(out, q, 1e-9).passed)
        throw std::logic_error("beta_family: constructed b0 fails its constraints");
    return out;
}

CheckReport validate_b0(const BZero& b0, cplx q, double tol) {
    if (b0.is_canonical()) {
        CheckReport rep = make_report("b0_constraints", Residual{0.0, 0.0}, tol);
        rep.reason = "canonical limit variant, constraints hold by construction";
        return rep;
    }
    const cplx lam = q - 1.0 / q;
    const double lam_abs = std::abs(lam);
    const int n = b0.size();
    double worst = 0.0;
    std::string worst_where = "none";
    std::vector<SubResidual> details;
    auto record = [&](const std::string& label, double abs_viol, double scale) {
        const double rel = scale > 0 ? abs_viol / scale : abs_viol;
        details.push_back({label, abs_viol, rel});
        if (rel > worst) {
            worst = rel;
            worst_where = label;
        }
    };
    for (int i = 0; i < n; ++i) record("diag[" + std::to_string(i) + "]", std::abs(b0.at(i, i)), lam_abs);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            record("sum[" + std::to_string(i) + "," + std::to_string(j) + "]",
                   std::abs(b0.at(i, j) + b0.at(j, i) - lam), lam_abs);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                const cplx cyc = b0.at(i, j) * b0.at(j, k) * b0.at(k, i) +
                                 b0.at(i, k) * b0.at(k, j) * b0.at(j, i);
                record("cyclic[" + std::to_string(i) + "," + std::to_string(j) + "," +
                           std::to_string(k) + "]",
                       std::abs(cyc), lam_abs * lam_abs * lam_abs);
            }
    CheckReport rep = make_report("b0_constraints", Residual{worst, worst}, tol, "",
                                  std::move(details));
    rep.reason = rep.passed ? "" : "worst violation at " + worst_where;
    return rep;
}

Scheme::Scheme(Grading g, BZero b, Gauge gauge_, double h_)
    : sig(g), b0(std::move(b)), gauge(gauge_), h(h_) {
    if (b0.size() != sig.N) throw std::invalid_argument("Scheme: b0 size differs from N");
    if (!(h > 0.0)) throw std::invalid_argument("Scheme: h must be positive");
    if (std::abs(sig.lambda()) < kDegenerateLambda)
        throw std::invalid_argument("Scheme: degenerate deformation (q = +-1)");
}

cplx q_bracket(cplx x, cplx q) {
    const cplx lam = q - 1.0 / q;
    if (std::abs(lam) < kDegenerateLambda)
        throw std::invalid_argument("q_bracket: degenerate deformation (|q - 1/q| ~ 0)");
    return (cpow(q, x) - cpow(q, -x)) / lam;
}

cplx b_of_p(const Scheme& scheme, const Momentum& m, int i, int j) {
    require_pair(scheme, m, i, j);
    if (i == j) return 0.0;
    const Grading& g = scheme.sig;
    if (scheme.canonical()) return b_closed(canonical_argument(g, m, i, j), g.q, i, j);
    const cplx A = cpow(g.a(i), m.p[i] / scheme.h) * cpow(g.a(j), -m.p[j] / scheme.h);
    const cplx t1 = A * scheme.b0.at(i, j);
    const cplx t2 = scheme.b0.at(j, i) / A;
    const cplx den = t1 + t2;
    if (std::abs(den) < kPoleRel * (std::abs(t1) + std::abs(t2)))
        throw PoleError(i, j, "b_of_p: denominator vanishes for pair (" + std::to_string(i) +
                                  "," + std::to_string(j) + ")");
    return g.lambda() * t1 / den;
}

cplx a_of_p(const Scheme& scheme, const Momentum& m, int i, int j) {
    require_pair(scheme, m, i, j);
    const Grading& g = scheme.sig;
    if (i == j) return g.a(i);
    if (scheme.gauge == Gauge::upper_triangular) {
        if (i > j) return 1.0;
        return 1.0 + b_of_p(scheme, m, i, j) * b_of_p(scheme, m, j, i);
    }
    // Unitary gauge: symmetric value fixed on the (min,max) orientation.
    const int lo = std::min(i, j), hi = std::max(i, j);
    if (scheme.canonical()) {
        const double x = (g.parity(lo) == g.parity(hi) ? m.p[lo] - m.p[hi]
                                                       : m.p[lo] + m.p[hi]) /
                         scheme.h;
        const cplx den = q_bracket(x, g.q);
        const double scale = (std::abs(cpow(g.q, x)) + std::abs(cpow(g.q, -x))) /
                             std::abs(g.lambda());
        if (std::abs(den) < kPoleRel * scale) throw PoleError(i, j, "a_of_p: [x]_q vanishes");
        return std::sqrt(q_bracket(x + 1.0, g.q) * q_bracket(x - 1.0, g.q)) / den;
    }
    return std::sqrt(1.0 + b_of_p(scheme, m, lo, hi) * b_of_p(scheme, m, hi, lo));
}

CheckReport check_pointwise_constraints(const Scheme& scheme, const Momentum& m, double tol) {
    const Grading& g = scheme.sig;
    const cplx lam = g.lambda();
    const int n = g.N;
    double worst_abs = 0.0, worst_rel = 0.0;
    std::vector<SubResidual> details;
    auto record = [&](const std::string& label, double abs_err, double scale) {
        const double rel = scale < 1e-300 ? abs_err : abs_err / scale;
        details.push_back({label, abs_err, rel});
        if (rel > worst_rel) {
            worst_rel = rel;
            worst_abs = abs_err;
        }
    };
    std::vector<std::vector<cplx>> b(static_cast<std::size_t>(n),
                                     std::vector<cplx>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) b[i][j] = b_of_p(scheme, m, i, j);
    for (int i = 0; i < n; ++i)
        record("diag[" + std::to_string(i) + "]", std::abs(b[i][i]), std::abs(lam));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const std::string pair = "[" + std::to_string(i) + "," + std::to_string(j) + "]";
            record("sum" + pair, std::abs(b[i][j] + b[j][i] - lam), std::abs(lam));
            const cplx prod =
                a_of_p(scheme, m, i, j) * a_of_p(scheme, m, j, i) - b[i][j] * b[j][i];
            record("product" + pair, std::abs(prod - 1.0), std::max(1.0, std::abs(prod)));
        }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                const cplx t1 = b[i][j] * b[j][k] * b[k][i];
                const cplx t2 = b[i][k] * b[k][j] * b[j][i];
                record("cyclic[" + std::to_string(i) + "," + std::to_string(j) + "," +
                           std::to_string(k) + "]",
                       std::abs(t1 + t2), std::max(std::abs(t1), std::abs(t2)));
            }
    return make_report("constraints", Residual{worst_abs, worst_rel}, tol,
                       scheme_digest(scheme, m), std::move(details));
}

CheckReport check_recursions(const Scheme& scheme, const Momentum& m, double tol) {
    const Grading& g = scheme.sig;
    const cplx lam = g.lambda();
    const int n = g.N;
    static const int kSteps[][2] = {{1, 1}, {2, 1}, {1, 2}, {-1, 1}};
    double worst_abs = 0.0, worst_rel = 0.0;
    std::vector<SubResidual> details;
    auto record = [&](const std::string& label, cplx lhs, cplx rhs) {
        const double abs_err = std::abs(lhs - rhs);
        const double scale = std::max(std::abs(lhs), std::abs(rhs));
        const double rel = scale < 1e-300 ? abs_err : abs_err / scale;
        details.push_back({label, abs_err, rel});
        if (rel > worst_rel) {
            worst_rel = rel;
            worst_abs = abs_err;
        }
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const std::string pair = "[" + std::to_string(i) + "," + std::to_string(j) + "]";
            const cplx ai = g.a(i), aj = g.a(j);
            const cplx b = b_of_p(scheme, m, i, j);
            const cplx bji = b_of_p(scheme, m, j, i);
            record("step_i" + pair, b_of_p(scheme, shift(m, i, 1), i, j),
                   b * ai / (1.0 / ai + b));
            record("step_j" + pair, b_of_p(scheme, shift(m, j, 1), i, j),
                   (b / aj) / (aj - b));
            for (const auto& s : kSteps) {
                const cplx w = ipow(ai, s[0]) * ipow(aj, -s[1]);
                const cplx rhs = lam * w * b / (w * b + bji / w);
                const cplx lhs = b_of_p(scheme, shift(shift(m, i, s[0]), j, s[1]), i, j);
                record("step" + std::to_string(s[0]) + "," + std::to_string(s[1]) + pair, lhs,
                       rhs);
            }
        }
    CheckReport rep = make_report("recursions", Residual{worst_abs, worst_rel}, tol,
                                  scheme_digest(scheme, m), std::move(details));
    return rep;
}

namespace {

// Zeros of the pair's b-denominator along real shifts of one momentum
// component. With A = a_i^{p_i/h} a_j^{-p_j/h} the denominator vanishes when
// a^{2t} A^2 = w (a the shifted component's diagonal coefficient, t the
// shift in units of h), i.e. t = (Log w - 2 Log A + 2 pi i k) / (2 Log a).
// Returns the distance (in p units) to the nearest complex solution; large
// imaginary parts mean no real crossing nearby.
double pole_distance(cplx log_a, cplx log_A2_over_w, double h) {
    const cplx L = 2.0 * log_a;
    const cplx C = -log_A2_over_w;
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double best = 1e300;
    if (std::abs(L.real()) < 1e-14 * std::abs(L)) {
        for (int k = -8; k <= 8; ++k)
            best = std::min(best, std::abs((C + cplx(0.0, two_pi * k)) / L));
        return best * h;
    }
    const double k_real = -(C * std::conj(L)).imag() / (two_pi * L.real());
    const long k0 = std::lround(k_real);
    for (long k = k0 - 2; k <= k0 + 2; ++k)
        best = std::min(best, std::abs((C + cplx(0.0, two_pi * static_cast<double>(k))) / L));
    return best * h;
}

ResonanceReport resonance_impl(const Momentum& m, const Grading& g, const BZero* b0,
                               double margin) {
    ResonanceReport rep;
    const int n = g.N;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double dist;
            std::string why;
            if (b0 == nullptr || b0->is_canonical()) {
                // Closed-form pole set: [x]_q = 0 at the reduced argument.
                const double x = canonical_argument(g, m, i, j);
                dist = pole_distance(std::log(g.q), cplx(2.0 * x, 0.0) * std::log(g.q), m.h);
                why = "[x]_q pole near reduced argument " + fmt17(x);
            } else {
                const cplx b0ij = b0->at(i, j), b0ji = b0->at(j, i);
                if (std::abs(b0ij) == 0.0 || std::abs(b0ji) == 0.0) continue; // no finite pole
                const cplx w = -b0ji / b0ij;
                const cplx logA = (m.p[i] / m.h) * std::log(g.a(i)) -
                                  (m.p[j] / m.h) * std::log(g.a(j));
                const cplx c = 2.0 * logA - std::log(w);
                dist = std::min(pole_distance(std::log(g.a(i)), c, m.h),
                                pole_distance(-std::log(g.a(j)), c, m.h));
                why = "b-denominator pole";
            }
            if (dist < margin)
                rep.offending_pairs.push_back({i, j, why + " (distance " + fmt17(dist) + ")"});
        }
    rep.ok = rep.offending_pairs.empty();
    return rep;
}

} // namespace

ResonanceReport resonance_check(const Momentum& m, const Scheme& scheme, double margin) {
    if (m.size() != scheme.sig.N)
        throw std::invalid_argument("resonance_check: momentum size != N");
    return resonance_impl(m, scheme.sig, &scheme.b0, margin);
}

ResonanceReport resonance_check(const Momentum& m, const Grading& sig, double margin) {
    if (m.size() != sig.N) throw std::invalid_argument("resonance_check: momentum size != N");
    return resonance_impl(m, sig, nullptr, margin);
}

bool momentum_is_safe(const Scheme& scheme, const Momentum& m, double margin) {
    if (!resonance_check(m, scheme, margin).ok) return false;
    const int n = scheme.sig.N;
    for (int c = 0; c < n; ++c)
        for (int s : {-2, -1, 1, 2})
            if (!resonance_check(shift(m, c, s), scheme, margin).ok) return false;
    static const int kSteps[][2] = {{1, 1}, {2, 1}, {1, 2}, {-1, 1}};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            for (const auto& s : kSteps)
                if (!resonance_check(shift(shift(m, i, s[0]), j, s[1]), scheme, margin).ok)
                    return false;
        }
    return true;
}

std::string scheme_digest(const Scheme& scheme, const Momentum& m) {
    std::string s = "N=" + std::to_string(scheme.sig.N) + ";K=" + std::to_string(scheme.sig.K) +
                    ";q=" + fmt17(scheme.sig.q) + ";h=" + fmt17(scheme.h) +
                    ";gauge=" + (scheme.gauge == Gauge::unitary ? "unitary" : "upper_triangular") +
                    ";b0=";
    if (scheme.canonical()) {
        s += "canonical";
    } else {
        s += "explicit[";
        for (int i = 0; i < scheme.b0.size(); ++i)
            for (int j = 0; j < scheme.b0.size(); ++j)
                s += fmt17(scheme.b0.at(i, j)) + (i + 1 == scheme.b0.size() && j + 1 == scheme.b0.size() ? "" : ",");
        s += "]";
    }
    s += ";p=[";
    for (int i = 0; i < m.size(); ++i) s += fmt17(m.p[i]) + (i + 1 == m.size() ? "" : ",");
    s += "]";
    return s;
}

} // namespace tyb

// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Tolerances and runtime budgets are fixed here.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "tyb/rmatrix.hpp"
#include "tyb/suite.hpp"
#include "tyb/verify.hpp"

using namespace tyb;

namespace {

int failures = 0;

void report(int id, const std::string& label, bool pass, const std::string& detail) {
    std::printf("%s  criterion %d: %s%s%s\n", pass ? "PASS" : "FAIL", id, label.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Scheme canonical_scheme(int n, int k, cplx q, double h, Gauge g = Gauge::unitary) {
    return Scheme(Grading(n, k, q), BZero::canonical(n), g, h);
}

Momentum safe_momentum(const Scheme& sc, std::uint64_t seed) {
    std::uint64_t s = seed;
    for (int tries = 0; tries < 64; ++tries) {
        const Momentum m = random_generic(sc.sig.N, sc.h, s, 1.0);
        if (momentum_is_safe(sc, m, sc.h / 20.0)) return m;
        s += 0xD1342543DE82EF95ULL;
    }
    throw std::runtime_error("acceptance: no safe momentum found");
}

std::vector<cplx> beta_values(int n, int variant) {
    std::vector<cplx> beta(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        switch (variant) {
            case 0: beta[static_cast<std::size_t>(i)] = static_cast<double>(n - i); break;
            case 1: beta[static_cast<std::size_t>(i)] = 1.5 * static_cast<double>(i) + 1.5; break;
            default: beta[static_cast<std::size_t>(i)] = static_cast<double>((i * 5) % 9) + 2.0;
        }
    }
    return beta;
}

// The scheme grid shared by criteria 3, 4 and 6: canonical limit in both
// gauges plus three distinct beta families, per local dimension.
std::vector<Scheme> gl_grid(int n) {
    const double h = 0.1;
    std::vector<Scheme> grid;
    grid.push_back(canonical_scheme(n, n, 2.0, h, Gauge::unitary));
    grid.push_back(canonical_scheme(n, n, 2.0, h, Gauge::upper_triangular));
    grid.emplace_back(Grading(n, n, 2.0), beta_family(n, beta_values(n, 0), 2.0),
                      Gauge::upper_triangular, h);
    grid.emplace_back(Grading(n, n, 1.3), beta_family(n, beta_values(n, 1), 1.3),
                      Gauge::unitary, h);
    grid.emplace_back(Grading(n, n, 1.3), beta_family(n, beta_values(n, 2), 1.3),
                      Gauge::upper_triangular, h);
    return grid;
}

Builder dyn_builder(const Scheme& sc) {
    return [sc](const Momentum& m) { return build_dynamical_r(sc, m); };
}

void criterion_1() {
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    std::string where = "none";
    auto track = [&](double rel, const std::string& label) {
        if (rel > worst) {
            worst = rel;
            where = label;
        }
    };
    const double h = 0.1;
    for (int n : {2, 3, 4}) {
        for (cplx q : {cplx(2.0), cplx(1.3), cplx(0.6, 0.3)}) {
            const cplx lam = q - 1.0 / q;
            const std::string tag = "N=" + std::to_string(n) + ",q=" + fmt17(q);
            track(check_hecke(build_constant_r(n, q), lam, 1e-10).residual.relative,
                  "constant," + tag);
            const Scheme cu = canonical_scheme(n, n, q, h, Gauge::unitary);
            const Scheme ct = canonical_scheme(n, n, q, h, Gauge::upper_triangular);
            const Scheme cb(Grading(n, n, q), beta_family(n, beta_values(n, 0), q),
                            Gauge::upper_triangular, h);
            const Scheme su = canonical_scheme(n, 1, q, h, Gauge::unitary);
            for (std::uint64_t seed : {11ull, 12ull}) {
                const Momentum m = safe_momentum(cu, seed);
                track(check_hecke(build_dynamical_r(cu, m), lam, 1e-10).residual.relative,
                      "dynamical-unitary," + tag);
                track(check_hecke(build_dynamical_r(ct, m), lam, 1e-10).residual.relative,
                      "dynamical-upper," + tag);
                track(check_hecke(build_dynamical_r(cb, safe_momentum(cb, seed)), lam, 1e-10)
                          .residual.relative,
                      "dynamical-beta," + tag);
                track(check_hecke(build_dynamical_sl(cu, m), lam, 1e-10, sl_factor(cu.sig))
                          .residual.relative,
                      "sl," + tag);
                const Momentum ms = safe_momentum(su, seed);
                track(check_hecke(build_super_sl(su, ms), lam, 1e-10, super_factor(su.sig))
                          .residual.relative,
                      "super," + tag);
            }
        }
    }
    const double dt = seconds_since(t0);
    report(1, "Hecke relation for the constant and every dynamical builder", worst < 1e-10 && dt < 1.0,
           "worst rel " + fmt17(worst) + " at " + where + ", " + fmt17(dt) + " s");
}

void criterion_2() {
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (int n : {2, 3, 4})
        for (cplx q : {cplx(2.0), cplx(1.3), cplx(0.6, 0.3)})
            worst = std::max(worst,
                             check_constant_ybe(build_constant_r(n, q), 1e-10).residual.relative);
    const double dt = seconds_since(t0);
    report(2, "constant braid relation", worst < 1e-10 && dt < 1.0,
           "worst rel " + fmt17(worst) + ", " + fmt17(dt) + " s");
}

void criterion_3() {
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    std::string where = "none";
    for (int n : {2, 3, 4}) {
        int scheme_idx = 0;
        for (const Scheme& sc : gl_grid(n)) {
            for (int i = 0; i < 20; ++i) {
                const Momentum m = safe_momentum(sc, 1000 + static_cast<std::uint64_t>(i));
                const double rel =
                    check_dynamical_ybe(dyn_builder(sc), m, 1e-9).residual.relative;
                if (rel > worst) {
                    worst = rel;
                    where = "N=" + std::to_string(n) + ",scheme=" + std::to_string(scheme_idx);
                }
            }
            ++scheme_idx;
        }
    }
    const double dt = seconds_since(t0);
    report(3, "twisted braid relation across the GL scheme grid", worst < 1e-9 && dt < 10.0,
           "worst rel " + fmt17(worst) + " at " + where + ", " + fmt17(dt) + " s");
}

void criterion_4() {
    double worst = 0.0;
    std::string where = "none";
    auto run = [&](const Scheme& sc, const std::string& tag) {
        if (!validate_b0(sc.b0, sc.sig.q, 1e-10).passed) {
            worst = 1.0;
            where = "b0," + tag;
            return;
        }
        for (int i = 0; i < 10; ++i) {
            const Momentum m = safe_momentum(sc, 2000 + static_cast<std::uint64_t>(i));
            const double c = check_pointwise_constraints(sc, m, 1e-10).residual.relative;
            const double r = check_recursions(sc, m, 1e-10).residual.relative;
            if (std::max(c, r) > worst) {
                worst = std::max(c, r);
                where = tag;
            }
        }
    };
    for (int n : {2, 3, 4}) {
        int idx = 0;
        for (const Scheme& sc : gl_grid(n)) run(sc, "N=" + std::to_string(n) + ",scheme=" + std::to_string(idx++));
    }
    const int mixed[][2] = {{2, 1}, {3, 1}, {4, 2}};
    for (const auto& nk : mixed) {
        run(canonical_scheme(nk[0], nk[1], 1.3, 0.1),
            "canonical(" + std::to_string(nk[0]) + "," + std::to_string(nk[1]) + ")");
        run(Scheme(Grading(nk[0], nk[1], 1.3), beta_family(nk[0], beta_values(nk[0], 1), 1.3),
                   Gauge::unitary, 0.1),
            "beta(" + std::to_string(nk[0]) + "," + std::to_string(nk[1]) + ")");
    }
    report(4, "constraint system and shift recursions", worst < 1e-10,
           "worst rel " + fmt17(worst) + " at " + where);
}

void criterion_5() {
    double worst_hecke = 0.0;
    double worst_ybe = 0.0;
    const int mixed[][2] = {{2, 1}, {3, 1}, {4, 2}};
    for (const auto& nk : mixed) {
        const Scheme sc = canonical_scheme(nk[0], nk[1], 1.3, 0.1);
        const cplx lam = sc.sig.lambda();
        const cplx f = super_factor(sc.sig);
        const Builder b = [sc](const Momentum& m) { return build_super_sl(sc, m); };
        for (int i = 0; i < 5; ++i) {
            const Momentum m = safe_momentum(sc, 3000 + static_cast<std::uint64_t>(i));
            worst_hecke = std::max(
                worst_hecke, check_hecke(b(m), lam, 1e-10, f).residual.relative);
            worst_ybe =
                std::max(worst_ybe, check_dynamical_ybe(b, m, 1e-9).residual.relative);
        }
    }
    const bool ybe_pass = worst_ybe < 1e-9;
    report(5, "supergroup Hecke relation, ungraded twisted braid recorded", worst_hecke < 1e-10,
           "worst Hecke rel " + fmt17(worst_hecke) + "; ungraded twisted-YBE " +
               (ybe_pass ? "passes" : "FAILS") + " with worst rel " + fmt17(worst_ybe));
}

void criterion_6() {
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    std::string where = "none";
    const std::vector<std::pair<cplx, cplx>> yz = {
        {1.3, 0.7}, {2.0, 0.5}, {cplx(0.9, 0.1), 1.1}};
    for (int n : {2, 3, 4}) {
        int idx = 0;
        for (const Scheme& sc : gl_grid(n)) {
            const cplx lam = sc.sig.lambda();
            const Builder b = dyn_builder(sc);
            for (int i = 0; i < 3; ++i) {
                const Momentum m = safe_momentum(sc, 4000 + static_cast<std::uint64_t>(i));
                for (const auto& [y, z] : yz) {
                    const double s =
                        check_spectral_dybe(b, m, y, z, lam, 1e-9).residual.relative;
                    const double u = check_unitarity(b(m), y, lam, 1e-9).residual.relative;
                    if (std::max(s, u) > worst) {
                        worst = std::max(s, u);
                        where = "N=" + std::to_string(n) + ",scheme=" + std::to_string(idx);
                    }
                }
            }
            ++idx;
        }
    }
    double worst_add = 0.0;
    for (int n : {2, 3, 4}) {
        const Scheme sc = canonical_scheme(n, n, 2.0, 0.1);
        for (int i = 0; i < 5; ++i) {
            const Momentum m = safe_momentum(sc, 5000 + static_cast<std::uint64_t>(i));
            worst_add =
                std::max(worst_add, check_additive_dybe(m, 0.4, -0.9, 1e-9).residual.relative);
            worst_add =
                std::max(worst_add, check_additive_dybe(m, 1.7, 0.3, 1e-9).residual.relative);
        }
    }
    const double dt = seconds_since(t0);
    report(6, "spectral twisted braid, unitarity, additive family",
           worst < 1e-9 && worst_add < 1e-9 && dt < 10.0,
           "worst spectral rel " + fmt17(worst) + " at " + where + ", worst additive rel " +
               fmt17(worst_add) + ", " + fmt17(dt) + " s");
}

void criterion_7() {
    // Rational limit: q = exp(gamma h), y = -exp(lambda theta / 2); the
    // rescaled spectral family must approach theta * R0(p) - 1 at rate gamma.
    const double gamma = 1e-4;
    double worst_gamma = 0.0;
    {
        const double h = 1.0;
        const cplx q = std::exp(gamma * h);
        const cplx lam = q - 1.0 / q;
        const cplx theta = 0.7;
        const cplx y = -std::exp(lam * theta / 2.0);
        for (const std::vector<double>& p :
             {std::vector<double>{1.3, -0.2}, std::vector<double>{1.3, 0.1, -1.2}}) {
            const Momentum m{p, h, false};
            const Scheme sc = canonical_scheme(m.size(), m.size(), q, h);
            const Operator scaled =
                (1.0 / lam) * build_baxterized(build_dynamical_r(sc, m), y, lam);
            worst_gamma = std::max(
                worst_gamma, residual(scaled, build_yangian_r(m, theta)).absolute);
        }
    }
    // Constant limit: h -> 0 at fixed gamma over descending momenta; the
    // rescaled family must approach theta * P - 1 at rate h.
    const double h_small = 1e-4;
    double worst_h = 0.0;
    {
        const double gamma_fixed = 0.9;
        const cplx q = std::exp(gamma_fixed * h_small);
        const cplx lam = q - 1.0 / q;
        const cplx theta = 0.6;
        const cplx y = -std::exp(lam * theta / 2.0);
        for (const std::vector<double>& p :
             {std::vector<double>{1.4, 0.1}, std::vector<double>{1.4, 0.1, -1.1}}) {
            const Momentum m{p, h_small, false};
            const int n = m.size();
            const Scheme sc = canonical_scheme(n, n, q, h_small);
            const Operator scaled =
                (1.0 / lam) * build_baxterized(build_dynamical_r(sc, m), y, lam);
            const Operator target =
                linear_comb(theta, permutation(n), -1.0, Operator::identity(n, 2));
            worst_h = std::max(worst_h, residual(scaled, target).absolute);
        }
    }
    report(7, "rational and constant degenerations of the spectral family",
           worst_gamma < 10.0 * gamma && worst_h < 10.0 * h_small,
           "gamma-limit norm " + fmt17(worst_gamma) + " (< " + fmt17(10.0 * gamma) +
               "), h-limit norm " + fmt17(worst_h) + " (< " + fmt17(10.0 * h_small) + ")");
}

void criterion_8() {
    double worst = 0.0;
    bool all_ran = true;
    for (int n : {2, 3}) {
        for (double q : {1.5, 2.0}) {
            const Scheme sc = canonical_scheme(n, n, q, 1.0);
            // Real momenta with every pair argument beyond 1.
            const Momentum m = n == 2 ? Momentum{{1.15, -1.15}, 1.0, false}
                                      : Momentum{{2.6, 1.2, -0.2}, 1.0, false};
            const CheckReport rep = check_hermiticity(sc, m, 1e-10);
            if (rep.skipped) all_ran = false;
            worst = std::max(worst, rep.residual.relative);
        }
    }
    report(8, "hermiticity of the normalized SL matrix", all_ran && worst < 1e-10,
           "worst rel " + fmt17(worst));
}

void criterion_9() {
    const Scheme sc = canonical_scheme(2, 2, 2.0, 0.1);
    const cplx lam = sc.sig.lambda();
    const Momentum m = safe_momentum(sc, 6000);
    const Builder good = dyn_builder(sc);
    const Builder bad = [good](const Momentum& mm) {
        Operator r = good(mm);
        r.at(0, r.dim() - 1) += 0.05;
        return r;
    };
    double min_rejection = 1e300;
    std::string weakest = "none";
    auto track = [&](double rel, const std::string& label) {
        if (rel < min_rejection) {
            min_rejection = rel;
            weakest = label;
        }
    };

    Operator broken = build_dynamical_r(sc, m);
    broken.at(0, 3) += 0.05;
    track(check_hecke(broken, lam, 1e-9).residual.relative, "hecke");
    Operator cbroken = build_constant_r(2, 2.0);
    cbroken.at(1, 1) += 0.05;
    track(check_constant_ybe(cbroken, 1e-9).residual.relative, "constant_ybe");
    track(check_dynamical_ybe(bad, m, 1e-9).residual.relative, "dynamical_ybe");
    track(check_spectral_dybe(bad, m, 1.3, 0.7, lam, 1e-9).residual.relative, "spectral_dybe");
    track(check_reflection(bad, m, 1e-9).residual.relative, "reflection");
    track(check_unitarity(broken, 1.3, lam, 1e-9).residual.relative, "unitarity");
    const ThetaBuilder bad_family = [](const Momentum& mm, cplx th) {
        Operator r = build_yangian_r(mm, th);
        r.at(0, 1) += 0.05;
        return r;
    };
    track(check_additive_dybe_family(bad_family, m, 0.4, -0.9, 1e-9).residual.relative,
          "additive_dybe");
    {
        const Scheme hs = canonical_scheme(2, 2, 1.5, 1.0);
        Operator hbroken = build_dynamical_sl(hs, Momentum{{1.15, -1.15}, 1.0, false});
        hbroken.at(0, 1) += 0.05;
        track(check_hermiticity_matrix(hbroken, 1e-10).residual.relative, "hermiticity");
    }
    {
        // Recursion sensitivity: a corrupted coefficient breaks the one-step map.
        const cplx b = b_of_p(sc, m, 0, 1) + 0.1;
        const cplx ai = sc.sig.a(0);
        const cplx lhs = b_of_p(sc, shift(m, 0, 1), 0, 1);
        const cplx rhs = b * ai / (1.0 / ai + b);
        track(std::abs(lhs - rhs) / std::abs(rhs), "recursions");
    }
    {
        const cplx lam2 = lam;
        std::vector<std::vector<cplx>> b0(3, std::vector<cplx>(3, 0.0));
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) b0[i][j] = lam2;
        b0[0][1] += 0.05;
        track(validate_b0(BZero::from_matrix(b0), 2.0, 1e-9).residual.relative, "b0");
    }

    // Determinism of suite reports.
    const RunConfig cfg = parse_config_text(
        R"({"group":"glq","N":2,"q":2.0,"h":0.1,"momenta":{"seed":77,"count":4}})");
    const std::string r1 = report_to_json(run_suite(cfg)).dump(2);
    const std::string r2 = report_to_json(run_suite(cfg)).dump(2);

    report(9, "negative controls and report determinism", min_rejection > 1e-3 && r1 == r2,
           "weakest rejection " + fmt17(min_rejection) + " at " + weakest +
               (r1 == r2 ? ", reports byte-identical" : ", REPORTS DIFFER"));
}

} // namespace

int main() {
    try {
        criterion_1();
        criterion_2();
        criterion_3();
        criterion_4();
        criterion_5();
        criterion_6();
        criterion_7();
        criterion_8();
        criterion_9();
    } catch (const std::exception& e) {
        std::printf("FAIL  acceptance aborted: %s\n", e.what());
        return 1;
    }
    if (failures == 0) std::printf("all acceptance criteria passed\n");
    return failures == 0 ? 0 : 1;
}

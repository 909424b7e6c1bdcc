#include "tyb/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <set>

#include "tyb/rmatrix.hpp"
#include "tyb/verify.hpp"

namespace tyb {

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr std::uint64_t kSeedStride = 0x9E3779B97F4A7C15ULL;
constexpr std::uint64_t kReseedStep = 0xD1342543DE82EF95ULL;

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw ConfigError("config error at '" + path + "': " + what);
}

void require_keys(const json& obj, const std::string& path,
                  const std::set<std::string>& known) {
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!known.count(it.key()))
            fail(path.empty() ? it.key() : path + "." + it.key(), "unknown key");
}

cplx parse_complex(const json& v, const std::string& path) {
    if (v.is_number()) return cplx(v.get<double>(), 0.0);
    if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
        return cplx(v[0].get<double>(), v[1].get<double>());
    fail(path, "expected a number or [re, im]");
}

std::string group_name(GroupKind g) {
    switch (g) {
        case GroupKind::glq: return "glq";
        case GroupKind::slq: return "slq";
        case GroupKind::slq_super: return "slq_super";
    }
    return "?";
}

std::string instance(const char* base, int idx) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%s[m%03d]", base, idx);
    return buf;
}

std::string instance2(const char* base, int idx, const char* tag, int sub) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%s[m%03d,%s%d]", base, idx, tag, sub);
    return buf;
}

json complex_to_json(cplx z) {
    if (z.imag() == 0.0) return json(z.real());
    return json::array({z.real(), z.imag()});
}

} // namespace

const std::vector<std::string>& known_checks() {
    static const std::vector<std::string> names = {
        "hecke",          "constant_ybe", "dynamical_ybe", "reflection",
        "spectral_dybe",  "unitarity",    "additive_dybe", "hermiticity",
        "recursions",     "constraints",  "b0",
    };
    return names;
}

const std::vector<std::string>& known_builders() {
    static const std::vector<std::string> names = {
        "constant_glq",    "dynamical",        "dynamical_sl",     "dynamical_super_sl",
        "baxterized_trig", "baxterized_constant", "yangian_rational", "classical_r0",
    };
    return names;
}

RunConfig parse_config(const json& doc) {
    if (!doc.is_object()) throw ConfigError("config error: document must be an object");
    require_keys(doc, "", {"group", "N", "K", "q", "h", "gauge", "b0", "momenta", "checks",
                           "spectral", "tolerance", "output"});
    RunConfig cfg;

    if (!doc.contains("group")) fail("group", "required");
    const std::string grp = doc["group"].is_string() ? doc["group"].get<std::string>() : "";
    if (grp == "glq") cfg.group = GroupKind::glq;
    else if (grp == "slq") cfg.group = GroupKind::slq;
    else if (grp == "slq_super") cfg.group = GroupKind::slq_super;
    else fail("group", "expected one of glq, slq, slq_super");

    if (!doc.contains("N") || !doc["N"].is_number_integer()) fail("N", "required integer");
    cfg.n = doc["N"].get<int>();
    if (cfg.n < 1 || cfg.n > 8) fail("N", "must be in [1,8]");

    if (cfg.group == GroupKind::slq_super) {
        if (!doc.contains("K")) fail("K", "required for group slq_super");
        if (!doc["K"].is_number_integer()) fail("K", "expected integer");
        cfg.k = doc["K"].get<int>();
        if (cfg.k < 1 || cfg.k > cfg.n - 1) fail("K", "must satisfy 1 <= K <= N-1");
    } else if (doc.contains("K")) {
        fail("K", "only valid for group slq_super");
    }

    if (!doc.contains("q")) fail("q", "required");
    cfg.q = parse_complex(doc["q"], "q");
    if (std::abs(cfg.q) < 1e-14) fail("q", "must be nonzero");
    if (std::abs(cfg.q - 1.0 / cfg.q) < 1e-14) fail("q", "degenerate deformation (q = +-1)");

    if (!doc.contains("h") || !doc["h"].is_number()) fail("h", "required number");
    cfg.h = doc["h"].get<double>();
    if (!(cfg.h > 0.0)) fail("h", "must be positive");

    if (doc.contains("gauge")) {
        const std::string g = doc["gauge"].is_string() ? doc["gauge"].get<std::string>() : "";
        if (g == "unitary") cfg.gauge = Gauge::unitary;
        else if (g == "upper_triangular") cfg.gauge = Gauge::upper_triangular;
        else fail("gauge", "expected unitary or upper_triangular");
    }

    cfg.b0_kind = B0Kind::canonical;
    if (doc.contains("b0")) {
        const json& b0 = doc["b0"];
        if (b0.is_string()) {
            if (b0.get<std::string>() != "canonical")
                fail("b0", "expected \"canonical\" or {beta: ...} or {explicit: ...}");
        } else if (b0.is_object()) {
            require_keys(b0, "b0", {"beta", "explicit"});
            if (b0.contains("beta") == b0.contains("explicit"))
                fail("b0", "exactly one of beta, explicit required");
            if (b0.contains("beta")) {
                cfg.b0_kind = B0Kind::beta;
                if (!b0["beta"].is_array()) fail("b0.beta", "expected an array");
                for (std::size_t i = 0; i < b0["beta"].size(); ++i)
                    cfg.beta.push_back(
                        parse_complex(b0["beta"][i], "b0.beta[" + std::to_string(i) + "]"));
                if (static_cast<int>(cfg.beta.size()) != cfg.n)
                    fail("b0.beta", "expected exactly N entries");
            } else {
                cfg.b0_kind = B0Kind::explicit_matrix;
                if (!b0["explicit"].is_array()) fail("b0.explicit", "expected a matrix");
                for (std::size_t i = 0; i < b0["explicit"].size(); ++i) {
                    const json& row = b0["explicit"][i];
                    if (!row.is_array()) fail("b0.explicit", "expected a matrix");
                    std::vector<cplx> r;
                    for (std::size_t j = 0; j < row.size(); ++j)
                        r.push_back(parse_complex(row[j], "b0.explicit[" + std::to_string(i) +
                                                              "][" + std::to_string(j) + "]"));
                    cfg.b0_explicit.push_back(std::move(r));
                }
                if (static_cast<int>(cfg.b0_explicit.size()) != cfg.n)
                    fail("b0.explicit", "expected an NxN matrix");
                for (const auto& r : cfg.b0_explicit)
                    if (static_cast<int>(r.size()) != cfg.n)
                        fail("b0.explicit", "expected an NxN matrix");
            }
        } else {
            fail("b0", "expected \"canonical\" or an object");
        }
    }
    if (cfg.group != GroupKind::glq) {
        if (cfg.b0_kind != B0Kind::canonical)
            fail("b0", "group " + grp + " requires the canonical limit");
        if (cfg.gauge != Gauge::unitary) fail("gauge", "group " + grp + " requires unitary");
    }

    if (doc.contains("momenta")) {
        const json& mo = doc["momenta"];
        if (!mo.is_object()) fail("momenta", "expected an object");
        require_keys(mo, "momenta", {"seed", "count", "scale", "explicit"});
        if (mo.contains("explicit")) {
            if (mo.contains("seed") || mo.contains("count") || mo.contains("scale"))
                fail("momenta", "explicit vectors exclude seed/count/scale");
            if (!mo["explicit"].is_array() || mo["explicit"].empty())
                fail("momenta.explicit", "expected a nonempty array of vectors");
            for (std::size_t i = 0; i < mo["explicit"].size(); ++i) {
                const json& vec = mo["explicit"][i];
                const std::string path = "momenta.explicit[" + std::to_string(i) + "]";
                if (!vec.is_array() || static_cast<int>(vec.size()) != cfg.n)
                    fail(path, "expected a vector of N numbers");
                std::vector<double> p;
                for (const json& v : vec) {
                    if (!v.is_number()) fail(path, "expected a vector of N numbers");
                    p.push_back(v.get<double>());
                }
                cfg.explicit_momenta.push_back(std::move(p));
            }
            cfg.count = static_cast<int>(cfg.explicit_momenta.size());
        }
        if (mo.contains("seed")) {
            if (!mo["seed"].is_number_integer()) fail("momenta.seed", "expected integer");
            cfg.seed = mo["seed"].get<std::uint64_t>();
        }
        if (mo.contains("count")) {
            if (!mo["count"].is_number_integer()) fail("momenta.count", "expected integer");
            cfg.count = mo["count"].get<int>();
            if (cfg.count < 1 || cfg.count > 500) fail("momenta.count", "must be in [1,500]");
        }
        if (mo.contains("scale")) {
            if (!mo["scale"].is_number()) fail("momenta.scale", "expected number");
            cfg.scale = mo["scale"].get<double>();
            if (!(cfg.scale > 0.0)) fail("momenta.scale", "must be positive");
        }
    }

    if (doc.contains("checks")) {
        const json& ch = doc["checks"];
        if (ch.is_string() && ch.get<std::string>() == "all") {
            cfg.checks.clear();
        } else if (ch.is_array()) {
            for (const json& c : ch) {
                if (!c.is_string()) fail("checks", "expected names or \"all\"");
                const std::string name = c.get<std::string>();
                if (std::find(known_checks().begin(), known_checks().end(), name) ==
                    known_checks().end())
                    fail("checks", "unknown check '" + name + "'");
                cfg.checks.push_back(name);
            }
        } else {
            fail("checks", "expected \"all\" or an array of names");
        }
    }
    if (cfg.checks.empty()) cfg.checks = known_checks();

    if (doc.contains("spectral")) {
        const json& sp = doc["spectral"];
        if (!sp.is_object()) fail("spectral", "expected an object");
        require_keys(sp, "spectral", {"yz", "theta"});
        if (sp.contains("yz")) {
            cfg.spectral_yz.clear();
            for (std::size_t i = 0; i < sp["yz"].size(); ++i) {
                const json& p = sp["yz"][i];
                if (!p.is_array() || p.size() != 2)
                    fail("spectral.yz[" + std::to_string(i) + "]", "expected [y, z]");
                cfg.spectral_yz.emplace_back(
                    parse_complex(p[0], "spectral.yz[" + std::to_string(i) + "][0]"),
                    parse_complex(p[1], "spectral.yz[" + std::to_string(i) + "][1]"));
            }
        }
        if (sp.contains("theta")) {
            cfg.thetas.clear();
            for (std::size_t i = 0; i < sp["theta"].size(); ++i) {
                const json& p = sp["theta"][i];
                if (!p.is_array() || p.size() != 2)
                    fail("spectral.theta[" + std::to_string(i) + "]", "expected [theta, theta']");
                cfg.thetas.emplace_back(
                    parse_complex(p[0], "spectral.theta[" + std::to_string(i) + "][0]"),
                    parse_complex(p[1], "spectral.theta[" + std::to_string(i) + "][1]"));
            }
        }
    }

    if (doc.contains("tolerance")) {
        if (!doc["tolerance"].is_number()) fail("tolerance", "expected number");
        cfg.tolerance = doc["tolerance"].get<double>();
        if (!(cfg.tolerance > 0.0)) fail("tolerance", "must be positive");
    }
    if (doc.contains("output")) {
        if (!doc["output"].is_string()) fail("output", "expected string path");
        cfg.output = doc["output"].get<std::string>();
    }

    // An explicit b0 must satisfy its constraint system before any check runs.
    if (cfg.b0_kind == B0Kind::explicit_matrix) {
        const CheckReport rep = validate_b0(BZero::from_matrix(cfg.b0_explicit), cfg.q, 1e-9);
        if (!rep.passed) fail("b0.explicit", "constraints violated, " + rep.reason);
    }
    return cfg;
}

RunConfig parse_config_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config error: invalid JSON: ") + e.what());
    }
    return parse_config(doc);
}

namespace {

Scheme scheme_from_config(const RunConfig& cfg) {
    const int k = cfg.group == GroupKind::slq_super ? cfg.k : cfg.n;
    Grading g(cfg.n, k, cfg.q);
    BZero b0 = BZero::canonical(cfg.n);
    if (cfg.b0_kind == B0Kind::beta) b0 = beta_family(cfg.n, cfg.beta, cfg.q);
    else if (cfg.b0_kind == B0Kind::explicit_matrix) b0 = BZero::from_matrix(cfg.b0_explicit);
    return Scheme(g, std::move(b0), cfg.gauge, cfg.h);
}

struct SuiteContext {
    const RunConfig& cfg;
    Scheme scheme;
    cplx factor;       // scalar normalization of the group's builder
    Builder builder;   // normalized matrix
    Builder unnorm;    // same matrix without the scalar factor (spectral base)
    std::vector<Momentum> momenta;
    int resamples = 0;

    Momentum fresh_momentum(int idx, int salt) {
        if (!cfg.explicit_momenta.empty()) {
            // Pinned momenta are used as-is; a resonance there is the
            // caller's finding, not something to resample away.
            return Momentum{cfg.explicit_momenta[static_cast<std::size_t>(idx)], cfg.h, false};
        }
        std::uint64_t s = cfg.seed + kSeedStride * static_cast<std::uint64_t>(idx + 1) +
                          kReseedStep * static_cast<std::uint64_t>(salt);
        for (int tries = 0; tries < 64; ++tries) {
            Momentum m = random_generic(cfg.n, cfg.h, s, cfg.scale);
            if (momentum_is_safe(scheme, m, cfg.h / 20.0)) {
                if (tries > 0) resamples += tries;
                return m;
            }
            s += kReseedStep;
        }
        throw std::runtime_error("run_suite: could not find a non-resonant momentum");
    }
};

SuiteContext make_context(const RunConfig& cfg) {
    SuiteContext ctx{cfg, scheme_from_config(cfg), 1.0, {}, {}, {}, 0};
    const Scheme& sc = ctx.scheme;
    switch (cfg.group) {
        case GroupKind::glq:
            ctx.factor = 1.0;
            ctx.builder = [sc](const Momentum& m) { return build_dynamical_r(sc, m); };
            ctx.unnorm = ctx.builder;
            break;
        case GroupKind::slq:
            ctx.factor = sl_factor(sc.sig);
            ctx.builder = [sc](const Momentum& m) { return build_dynamical_sl(sc, m); };
            ctx.unnorm = [sc](const Momentum& m) { return build_dynamical_r(sc, m); };
            break;
        case GroupKind::slq_super: {
            ctx.factor = super_factor(sc.sig);
            ctx.builder = [sc](const Momentum& m) { return build_super_sl(sc, m); };
            const cplx f = ctx.factor;
            ctx.unnorm = [sc, f](const Momentum& m) {
                return (1.0 / f) * build_super_sl(sc, m);
            };
            break;
        }
    }
    ctx.momenta.reserve(static_cast<std::size_t>(cfg.count));
    for (int i = 0; i < cfg.count; ++i) ctx.momenta.push_back(ctx.fresh_momentum(i, 0));
    return ctx;
}

// Runs one per-momentum check, regenerating the momentum on a resonance
// instead of failing the suite.
template <typename Fn>
CheckReport guarded(SuiteContext& ctx, int idx, const std::string& name, Fn&& fn) {
    Momentum m = ctx.momenta[static_cast<std::size_t>(idx)];
    for (int attempt = 0;; ++attempt) {
        try {
            CheckReport rep = fn(m);
            rep.name = name;
            if (attempt > 0)
                rep.reason = (rep.reason.empty() ? "" : rep.reason + "; ") + "resampled x" +
                             std::to_string(attempt);
            return rep;
        } catch (const PoleError&) {
            if (attempt >= 8) {
                CheckReport rep;
                rep.name = name;
                rep.tolerance = ctx.cfg.tolerance;
                rep.passed = false;
                rep.reason = "resonant momentum, resampling exhausted";
                return rep;
            }
            ctx.resamples += 1;
            m = ctx.fresh_momentum(idx, 101 + attempt);
        }
    }
}

} // namespace

SuiteReport run_suite(const RunConfig& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    SuiteReport rep;
    rep.config = cfg;
    rep.version = kVersion;

    SuiteContext ctx = make_context(cfg);
    const cplx lambda = ctx.scheme.sig.lambda();
    const double tol = cfg.tolerance;

    for (const std::string& check : cfg.checks) {
        if (check == "constant_ybe") {
            CheckReport r = check_constant_ybe(build_constant_r(cfg.n, cfg.q), tol);
            r.name = "constant_ybe";
            r.inputs_digest = "N=" + std::to_string(cfg.n) + ";q=" + fmt17(cfg.q);
            rep.checks.push_back(std::move(r));
            continue;
        }
        if (check == "b0") {
            CheckReport r = validate_b0(ctx.scheme.b0, cfg.q, tol);
            r.name = "b0";
            rep.checks.push_back(std::move(r));
            continue;
        }
        for (int i = 0; i < cfg.count; ++i) {
            if (check == "hecke") {
                rep.checks.push_back(guarded(ctx, i, instance("hecke", i), [&](const Momentum& m) {
                    CheckReport r = check_hecke(ctx.builder(m), lambda, tol, ctx.factor);
                    r.inputs_digest = scheme_digest(ctx.scheme, m);
                    return r;
                }));
            } else if (check == "dynamical_ybe") {
                rep.checks.push_back(
                    guarded(ctx, i, instance("dynamical_ybe", i), [&](const Momentum& m) {
                        return check_dynamical_ybe(ctx.builder, m, tol);
                    }));
            } else if (check == "reflection") {
                rep.checks.push_back(
                    guarded(ctx, i, instance("reflection", i), [&](const Momentum& m) {
                        return check_reflection(ctx.builder, m, tol);
                    }));
            } else if (check == "recursions") {
                rep.checks.push_back(
                    guarded(ctx, i, instance("recursions", i), [&](const Momentum& m) {
                        return check_recursions(ctx.scheme, m, tol);
                    }));
            } else if (check == "constraints") {
                rep.checks.push_back(
                    guarded(ctx, i, instance("constraints", i), [&](const Momentum& m) {
                        return check_pointwise_constraints(ctx.scheme, m, tol);
                    }));
            } else if (check == "hermiticity") {
                rep.checks.push_back(
                    guarded(ctx, i, instance("hermiticity", i), [&](const Momentum& m) {
                        return check_hermiticity(ctx.scheme, m, tol);
                    }));
            } else if (check == "spectral_dybe") {
                for (std::size_t s = 0; s < cfg.spectral_yz.size(); ++s) {
                    const auto [y, z] = cfg.spectral_yz[s];
                    rep.checks.push_back(guarded(
                        ctx, i, instance2("spectral_dybe", i, "yz", static_cast<int>(s)),
                        [&](const Momentum& m) {
                            return check_spectral_dybe(ctx.unnorm, m, y, z, lambda, tol);
                        }));
                }
            } else if (check == "unitarity") {
                for (std::size_t s = 0; s < cfg.spectral_yz.size(); ++s) {
                    const cplx y = cfg.spectral_yz[s].first;
                    rep.checks.push_back(guarded(
                        ctx, i, instance2("unitarity", i, "y", static_cast<int>(s)),
                        [&](const Momentum& m) {
                            CheckReport r = check_unitarity(ctx.unnorm(m), y, lambda, tol);
                            r.inputs_digest = scheme_digest(ctx.scheme, m) + ";y=" + fmt17(y);
                            return r;
                        }));
                }
            } else if (check == "additive_dybe") {
                for (std::size_t s = 0; s < cfg.thetas.size(); ++s) {
                    const auto [t1, t2] = cfg.thetas[s];
                    rep.checks.push_back(guarded(
                        ctx, i, instance2("additive_dybe", i, "th", static_cast<int>(s)),
                        [&](const Momentum& m) {
                            return check_additive_dybe(m, t1, t2, tol);
                        }));
                }
            }
        }
    }

    std::sort(rep.checks.begin(), rep.checks.end(),
              [](const CheckReport& a, const CheckReport& b) { return a.name < b.name; });
    rep.total = static_cast<int>(rep.checks.size());
    for (const CheckReport& c : rep.checks) {
        if (c.skipped) ++rep.skipped;
        else if (c.passed) ++rep.passed;
        else ++rep.failed;
    }
    rep.resamples = ctx.resamples;
    rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                      .count();
    return rep;
}

json config_to_json(const RunConfig& cfg) {
    json j;
    j["group"] = group_name(cfg.group);
    j["N"] = cfg.n;
    if (cfg.group == GroupKind::slq_super) j["K"] = cfg.k;
    j["q"] = complex_to_json(cfg.q);
    j["h"] = cfg.h;
    j["gauge"] = cfg.gauge == Gauge::unitary ? "unitary" : "upper_triangular";
    if (cfg.b0_kind == B0Kind::canonical) {
        j["b0"] = "canonical";
    } else if (cfg.b0_kind == B0Kind::beta) {
        json arr = json::array();
        for (cplx b : cfg.beta) arr.push_back(complex_to_json(b));
        j["b0"] = json{{"beta", arr}};
    } else {
        json mat = json::array();
        for (const auto& row : cfg.b0_explicit) {
            json r = json::array();
            for (cplx v : row) r.push_back(complex_to_json(v));
            mat.push_back(r);
        }
        j["b0"] = json{{"explicit", mat}};
    }
    if (cfg.explicit_momenta.empty()) {
        j["momenta"] = json{{"seed", cfg.seed}, {"count", cfg.count}, {"scale", cfg.scale}};
    } else {
        json vecs = json::array();
        for (const auto& p : cfg.explicit_momenta) vecs.push_back(p);
        j["momenta"] = json{{"explicit", vecs}};
    }
    j["checks"] = cfg.checks;
    json yz = json::array();
    for (const auto& [y, z] : cfg.spectral_yz)
        yz.push_back(json::array({complex_to_json(y), complex_to_json(z)}));
    json th = json::array();
    for (const auto& [a, b] : cfg.thetas)
        th.push_back(json::array({complex_to_json(a), complex_to_json(b)}));
    j["spectral"] = json{{"yz", yz}, {"theta", th}};
    j["tolerance"] = cfg.tolerance;
    if (!cfg.output.empty()) j["output"] = cfg.output;
    return j;
}

json report_to_json(const SuiteReport& rep) {
    json j;
    j["version"] = rep.version;
    j["config"] = config_to_json(rep.config);
    json checks = json::array();
    for (const CheckReport& c : rep.checks) {
        json e;
        e["name"] = c.name;
        e["residual_abs"] = c.residual.absolute;
        e["residual_rel"] = c.residual.relative;
        e["tolerance"] = c.tolerance;
        e["passed"] = c.passed;
        e["skipped"] = c.skipped;
        if (!c.reason.empty()) e["reason"] = c.reason;
        if (!c.inputs_digest.empty()) e["inputs"] = c.inputs_digest;
        checks.push_back(std::move(e));
    }
    j["checks"] = std::move(checks);
    j["summary"] = json{{"total", rep.total},
                        {"passed", rep.passed},
                        {"failed", rep.failed},
                        {"skipped", rep.skipped},
                        {"resamples", rep.resamples}};
    return j;
}

std::string render_table(const SuiteReport& rep) {
    std::string out;
    char line[256];
    std::snprintf(line, sizeof(line), "%-34s %-6s %-13s %-10s\n", "check", "state", "rel residual",
                  "tolerance");
    out += line;
    for (const CheckReport& c : rep.checks) {
        const char* state = c.skipped ? "SKIP" : (c.passed ? "PASS" : "FAIL");
        std::snprintf(line, sizeof(line), "%-34s %-6s %-13.3e %-10.1e %s\n", c.name.c_str(), state,
                      c.residual.relative, c.tolerance, c.reason.c_str());
        out += line;
    }
    std::snprintf(line, sizeof(line),
                  "summary: %d checks, %d passed, %d failed, %d skipped, %d resamples (%.1f ms)\n",
                  rep.total, rep.passed, rep.failed, rep.skipped, rep.resamples, rep.wall_ms);
    out += line;
    return out;
}

int suite_exit_code(const SuiteReport& rep) { return rep.failed > 0 ? 1 : 0; }

} // namespace tyb

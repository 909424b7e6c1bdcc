#pragma once

#include <string>
#include <vector>

#include "tyb/tensor.hpp"

namespace tyb {

struct SubResidual {
    std::string label;
    double absolute = 0.0;
    double relative = 0.0;
};

// Result of one verification. Checkers never throw on a mathematical
// failure; they report it. Only malformed inputs raise.
struct CheckReport {
    std::string name;
    Residual residual;
    double tolerance = 0.0;
    bool passed = false;
    bool skipped = false;
    std::string reason;
    std::string inputs_digest;
    std::vector<SubResidual> details;
};

inline CheckReport make_report(std::string name, Residual r, double tol, std::string digest = {},
                               std::vector<SubResidual> details = {}) {
    CheckReport rep;
    rep.name = std::move(name);
    rep.residual = r;
    rep.tolerance = tol;
    rep.passed = r.relative <= tol;
    rep.inputs_digest = std::move(digest);
    rep.details = std::move(details);
    return rep;
}

inline CheckReport make_skipped(std::string name, double tol, std::string reason,
                                std::string digest = {}) {
    CheckReport rep;
    rep.name = std::move(name);
    rep.tolerance = tol;
    rep.passed = false;
    rep.skipped = true;
    rep.reason = std::move(reason);
    rep.inputs_digest = std::move(digest);
    return rep;
}

struct ResonancePair {
    int i = 0;
    int j = 0;
    std::string reason;
};

struct ResonanceReport {
    bool ok = true;
    std::vector<ResonancePair> offending_pairs;
};

} // namespace tyb

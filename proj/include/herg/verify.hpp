#pragma once

// Identity suites over a graph corpus. Each suite aggregates per-identity
// pass/fail counts; the CLI prints one line per identity.

#include <optional>
#include <string>
#include <vector>

#include "herg/gen.hpp"
#include "herg/invariants.hpp"

namespace herg {

enum class Suite { Euler, Duality, Recurrence, DualOps, DoubleDual, Bridges, OneVertex, All };

std::optional<Suite> suite_from_name(const std::string& name);
std::string suite_name(Suite s);

struct SuiteLine {
    std::string identity;
    int checked = 0;
    std::vector<std::string> failures;  // "graph (detail)" entries
};

struct SuiteReport {
    std::vector<SuiteLine> lines;
    bool ok() const {
        for (const auto& l : lines)
            if (!l.failures.empty()) return false;
        return true;
    }
};

SuiteReport run_suite(Suite suite, const std::vector<NamedHerg>& graphs);

// Per-graph check families; exposed for tests.
std::vector<IdentityCheck> euler_checks(const Herg& g);
std::vector<IdentityCheck> correspondence_checks(const Herg& g);
std::vector<IdentityCheck> recurrence_checks(const Herg& g);
std::vector<IdentityCheck> dualops_checks(const Herg& g);   // applicable for e <= 5
std::vector<IdentityCheck> doubledual_checks(const Herg& g);
std::vector<IdentityCheck> structural_checks(const Herg& g);

}  // namespace herg

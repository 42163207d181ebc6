#pragma once

#include <string>
#include <vector>

namespace dyb {

/// One verdict of an exhaustive check.  The witness is the
/// lexicographically first failing tuple, in the scan order documented by
/// the check; empty when the check passes.
struct CheckResult {
    std::string check;
    bool pass = true;
    std::vector<int> witness;
};

/// A bundle of verdicts produced by one verification entry point.
struct Report {
    std::vector<CheckResult> parts;

    bool pass() const {
        for (auto& p : parts)
            if (!p.pass) return false;
        return true;
    }
    const CheckResult* find(const std::string& name) const {
        for (auto& p : parts)
            if (p.check == name) return &p;
        return nullptr;
    }
};

}  // namespace dyb

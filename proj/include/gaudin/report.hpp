#pragma once

#include <string>
#include <vector>

namespace gaudin {

/// Accumulates named failures of a multi-part check.
struct Verification {
    std::vector<std::string> failures;

    bool passed() const noexcept { return failures.empty(); }
    void require(bool condition, const std::string& what) {
        if (!condition) failures.push_back(what);
    }
    void merge(const Verification& other) {
        failures.insert(failures.end(), other.failures.begin(), other.failures.end());
    }
};

} // namespace gaudin

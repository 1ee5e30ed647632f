#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sugauge/numeric.hpp"

namespace sugauge {

struct CheckFailure {
    int n = 0;
    std::optional<Int> k;
    std::string detail;
};

struct CheckResult {
    std::string name;
    long cases = 0;
    std::vector<CheckFailure> failures;

    bool passed() const { return failures.empty(); }
};

/// Runs the cross-verification suite over n in [n_min, n_max]:
/// image-lattice reduction, restricted boundary order, boundary image
/// orders for k = 0..k_max (default 2n(n^2-1) per n), parity-lattice
/// containments, invariant factors of the odd cokernel, series/closed-form
/// coefficient agreement, the p-component implication, and the static
/// order table. Deterministic (n, k) order.
std::vector<CheckResult> run_verification(int n_min, int n_max, const std::optional<Int>& k_max);

}  // namespace sugauge

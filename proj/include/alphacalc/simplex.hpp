#pragma once

#include <optional>
#include <vector>

#include "alphacalc/matrix.hpp"

namespace alphacalc {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    Rat objective;
    QVec x;  // a basic optimal solution when status == Optimal
};

/// Exact-rational two-phase simplex with Bland's anti-cycling rule.
///
/// Maximizes c.x subject to a_eq x = b_eq, x >= 0, and x_j <= *upper[j]
/// where an upper bound is present. Pure function; no shared state.
LpResult simplex_max(const QMat& a_eq, const QVec& b_eq, const QVec& c,
                     const std::vector<std::optional<Rat>>& upper);

}  // namespace alphacalc

#pragma once

#include <vector>

#include "matval/rational.hpp"

namespace matval {

enum class Rel { LessEq, Less, Eq };

struct LinConstraint {
    QVector normal;
    Rational bound;
    Rel rel = Rel::LessEq;
};

enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LPResult {
    LPStatus status = LPStatus::Infeasible;
    Rational objective;  // meaningful when Optimal
    QVector x;           // structural variable values when Optimal
};

/// Maximizes objective . x over {x : constraints}, exactly over the
/// rationals. Rel::Less is not accepted here; strict inequalities are
/// rewritten by callers (slack-variable reduction in the geometry module).
/// Variables with nonneg[j] true are sign-constrained, the rest are free.
/// Two-phase dense simplex with Bland's rule, so termination is guaranteed.
LPResult solve_lp(int nvars, const std::vector<LinConstraint>& constraints,
                  const QVector& objective, const std::vector<bool>& nonneg);

/// Feasibility-only convenience wrapper (zero objective).
bool lp_system_feasible(int nvars, const std::vector<LinConstraint>& constraints,
                        const std::vector<bool>& nonneg);

}  // namespace matval

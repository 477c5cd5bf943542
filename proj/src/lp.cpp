#include "matval/lp.hpp"

#include <cassert>
#include <limits>

#include "matval/errors.hpp"

namespace matval {

namespace {

// Dense simplex tableau. Column layout: structural columns (free variables
// split into a difference of two nonnegative ones), then slacks, then
// artificials; the right-hand side is kept separately.
struct Tableau {
    std::vector<QVector> a;   // m x ncols
    QVector rhs;              // m
    QVector obj;              // z-row coefficients, ncols
    Rational obj_rhs = 0;     // z-row rhs: current objective value
    std::vector<int> basis;   // basic column per row
    std::vector<bool> live;   // false for rows found redundant in phase 1
    int ncols = 0;

    void pivot(int row, int col) {
        Rational p = a[row][col];
        assert(p != 0);
        for (auto& v : a[row]) v /= p;
        rhs[row] /= p;
        for (size_t i = 0; i < a.size(); ++i) {
            if (static_cast<int>(i) == row || a[i][col] == 0) continue;
            Rational f = a[i][col];
            for (int j = 0; j < ncols; ++j) a[i][j] -= f * a[row][j];
            rhs[i] -= f * rhs[row];
        }
        if (obj[col] != 0) {
            Rational f = obj[col];
            for (int j = 0; j < ncols; ++j) obj[j] -= f * a[row][j];
            obj_rhs -= f * rhs[row];
        }
        basis[row] = col;
    }

    // Bland: entering column = smallest eligible index with obj coefficient
    // < 0 (z - c x = 0 convention, maximizing); leaving row = min ratio,
    // ties broken by smallest basic column index. Returns false at optimum,
    // throws on unbounded.
    enum class Step { Pivoted, Optimal, Unbounded };
    Step step(const std::vector<bool>& banned) {
        int enter = -1;
        for (int j = 0; j < ncols; ++j) {
            if (banned[j]) continue;
            if (obj[j] < 0) { enter = j; break; }
        }
        if (enter < 0) return Step::Optimal;
        int leave = -1;
        Rational best;
        for (size_t i = 0; i < a.size(); ++i) {
            if (!live[i] || a[i][enter] <= 0) continue;
            Rational ratio = rhs[i] / a[i][enter];
            if (leave < 0 || ratio < best ||
                (ratio == best && basis[i] < basis[leave])) {
                best = ratio;
                leave = static_cast<int>(i);
            }
        }
        if (leave < 0) return Step::Unbounded;
        pivot(leave, enter);
        return Step::Pivoted;
    }

    LPStatus run(const std::vector<bool>& banned) {
        for (;;) {
            switch (step(banned)) {
                case Step::Optimal: return LPStatus::Optimal;
                case Step::Unbounded: return LPStatus::Unbounded;
                case Step::Pivoted: break;
            }
        }
    }

    // Installs a fresh objective (maximize c over current basis).
    void set_objective(const QVector& c) {
        obj.assign(ncols, Rational(0));
        obj_rhs = 0;
        for (int j = 0; j < static_cast<int>(c.size()); ++j) obj[j] = -c[j];
        for (size_t i = 0; i < a.size(); ++i) {
            if (!live[i]) continue;
            int b = basis[i];
            if (obj[b] == 0) continue;
            Rational f = obj[b];
            for (int j = 0; j < ncols; ++j) obj[j] -= f * a[i][j];
            obj_rhs -= f * rhs[i];
        }
    }
};

}  // namespace

LPResult solve_lp(int nvars, const std::vector<LinConstraint>& constraints,
                  const QVector& objective, const std::vector<bool>& nonneg) {
    assert(static_cast<int>(objective.size()) == nvars);
    assert(static_cast<int>(nonneg.size()) == nvars);
    for (const auto& c : constraints) {
        assert(static_cast<int>(c.normal.size()) == nvars);
        if (c.rel == Rel::Less)
            throw InvalidParameters("strict constraints are not handled at the LP level");
    }

    // Structural columns: (variable, sign). Free variables get a +/- pair.
    std::vector<std::pair<int, int>> cols;
    for (int j = 0; j < nvars; ++j) {
        cols.emplace_back(j, +1);
        if (!nonneg[j]) cols.emplace_back(j, -1);
    }
    int k = static_cast<int>(cols.size());
    int m = static_cast<int>(constraints.size());
    int nslack = 0;
    for (const auto& c : constraints)
        if (c.rel == Rel::LessEq) ++nslack;

    Tableau t;
    t.ncols = k + nslack + m;  // artificial slot reserved per row; unused ones stay banned
    t.a.assign(m, QVector(t.ncols, Rational(0)));
    t.rhs.assign(m, Rational(0));
    t.basis.assign(m, -1);
    t.live.assign(m, true);

    std::vector<bool> banned(t.ncols, false);
    std::vector<bool> is_artificial(t.ncols, false);
    int slack_at = k;
    int art_at = k + nslack;
    int num_art = 0;
    for (int i = 0; i < m; ++i) {
        const auto& c = constraints[i];
        bool negate = c.bound < 0;
        Rational sgn = negate ? -1 : 1;
        for (int jc = 0; jc < k; ++jc)
            t.a[i][jc] = sgn * Rational(cols[jc].second) * c.normal[cols[jc].first];
        t.rhs[i] = sgn * c.bound;
        int slack_col = -1;
        if (c.rel == Rel::LessEq) {
            slack_col = slack_at++;
            t.a[i][slack_col] = sgn;
        }
        if (c.rel == Rel::LessEq && !negate) {
            t.basis[i] = slack_col;
        } else {
            int art = art_at + i;
            t.a[i][art] = 1;
            t.basis[i] = art;
            is_artificial[art] = true;
            ++num_art;
        }
    }
    for (int j = art_at; j < t.ncols; ++j)
        if (!is_artificial[j]) banned[j] = true;

    if (num_art > 0) {
        // Phase 1: maximize -sum(artificials).
        QVector c1(t.ncols, Rational(0));
        for (int j = 0; j < t.ncols; ++j)
            if (is_artificial[j]) c1[j] = -1;
        t.set_objective(c1);
        LPStatus st = t.run(banned);
        assert(st == LPStatus::Optimal);  // phase 1 objective is bounded by 0
        (void)st;
        if (t.obj_rhs != 0) return {LPStatus::Infeasible, Rational(0), {}};
        // Pivot leftover artificials out of the basis, or drop dead rows.
        for (int i = 0; i < m; ++i) {
            if (!is_artificial[t.basis[i]]) continue;
            assert(t.rhs[i] == 0);
            int col = -1;
            for (int j = 0; j < k + nslack; ++j)
                if (!banned[j] && t.a[i][j] != 0) { col = j; break; }
            if (col >= 0)
                t.pivot(i, col);
            else
                t.live[i] = false;  // redundant constraint
        }
        for (int j = 0; j < t.ncols; ++j)
            if (is_artificial[j]) banned[j] = true;
    }

    // Phase 2 with the real objective over structural columns.
    QVector c2(t.ncols, Rational(0));
    for (int jc = 0; jc < k; ++jc)
        c2[jc] = Rational(cols[jc].second) * objective[cols[jc].first];
    t.set_objective(c2);
    LPStatus st = t.run(banned);
    if (st == LPStatus::Unbounded) return {LPStatus::Unbounded, Rational(0), {}};

    QVector colval(t.ncols, Rational(0));
    for (int i = 0; i < m; ++i)
        if (t.live[i]) colval[t.basis[i]] = t.rhs[i];
    QVector x(nvars, Rational(0));
    for (int jc = 0; jc < k; ++jc)
        x[cols[jc].first] += Rational(cols[jc].second) * colval[jc];
    return {LPStatus::Optimal, t.obj_rhs, std::move(x)};
}

bool lp_system_feasible(int nvars, const std::vector<LinConstraint>& constraints,
                        const std::vector<bool>& nonneg) {
    QVector zero(nvars, Rational(0));
    return solve_lp(nvars, constraints, zero, nonneg).status == LPStatus::Optimal;
}

}  // namespace matval

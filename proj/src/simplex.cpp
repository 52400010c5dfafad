#include "gaptensor/simplex.hpp"

#include <algorithm>

#include "gaptensor/errors.hpp"

namespace gaptensor {

namespace {

// Dense tableau. Row layout: m constraint rows then one objective row holding
// reduced costs; the last column is the right-hand side. The objective row's
// rhs cell stores -z for the current basis, so identical row operations keep
// all invariants.
struct Tableau {
    int m = 0;             // constraint rows
    int cols = 0;          // columns excluding rhs
    std::vector<std::vector<Rational>> a;  // (m+1) x (cols+1)
    std::vector<int> basis;                // per row, basic column
    std::vector<char> artificial;          // per column
    std::vector<int> unit_col;             // per row, its +1 unit column
    std::vector<int> row_sign;             // +1, or -1 when the row was negated
    std::vector<char> dead;                // redundant rows, excluded from pivoting

    void pivot(int pr, int pc) {
        std::vector<Rational>& prow = a[pr];
        Rational inv = 1 / prow[pc];
        for (Rational& cell : prow) cell *= inv;
        for (int r = 0; r <= m; ++r) {
            if (r == pr) continue;
            Rational factor = a[r][pc];
            if (factor == 0) continue;
            std::vector<Rational>& row = a[r];
            for (int c = 0; c <= cols; ++c) {
                if (prow[c] != 0) row[c] -= factor * prow[c];
            }
        }
        basis[pr] = pc;
    }

    enum class Step { Improved, Optimal, Unbounded };

    // Bland's rule: smallest eligible entering column, leaving row by minimum
    // ratio with smallest basic variable breaking ties.
    Step pivot_step(bool lock_artificials) {
        int enter = -1;
        for (int c = 0; c < cols; ++c) {
            if (lock_artificials && artificial[c]) continue;
            if (a[m][c] > 0) {
                enter = c;
                break;
            }
        }
        if (enter < 0) return Step::Optimal;
        int leave = -1;
        Rational best_ratio;
        for (int r = 0; r < m; ++r) {
            if (dead[r]) continue;
            if (a[r][enter] <= 0) continue;
            Rational ratio = a[r][cols] / a[r][enter];
            if (leave < 0 || ratio < best_ratio ||
                (ratio == best_ratio && basis[r] < basis[leave])) {
                leave = r;
                best_ratio = ratio;
            }
        }
        if (leave < 0) return Step::Unbounded;
        pivot(leave, enter);
        return Step::Improved;
    }
};

}  // namespace

LpSolution solve_lp(const LpProblem& p) {
    const int n = p.var_count;
    const int m = static_cast<int>(p.rows.size());
    if (static_cast<int>(p.objective.size()) != n) {
        throw ContractViolation("solve_lp: objective length mismatch");
    }

    Tableau t;
    t.m = m;
    t.basis.assign(m, -1);
    t.unit_col.assign(m, -1);
    t.row_sign.assign(m, 1);
    t.dead.assign(m, 0);

    // Normalize rhs >= 0, then count slack/surplus/artificial columns.
    std::vector<LpRow> rows = p.rows;
    for (int r = 0; r < m; ++r) {
        if (rows[r].rhs < 0) {
            rows[r].rhs = -rows[r].rhs;
            for (auto& [var, coef] : rows[r].coeffs) coef = -coef;
            if (rows[r].sense == RowSense::LessEq) rows[r].sense = RowSense::GreaterEq;
            else if (rows[r].sense == RowSense::GreaterEq) rows[r].sense = RowSense::LessEq;
            t.row_sign[r] = -1;
        }
    }
    int extra = 0;
    for (const LpRow& row : rows) {
        extra += (row.sense == RowSense::GreaterEq) ? 2 : 1;
    }
    t.cols = n + extra;
    t.artificial.assign(t.cols, 0);
    t.a.assign(m + 1, std::vector<Rational>(t.cols + 1, Rational(0)));

    bool any_artificial = false;
    int next = n;
    for (int r = 0; r < m; ++r) {
        for (const auto& [var, coef] : rows[r].coeffs) {
            if (var < 0 || var >= n) throw ContractViolation("solve_lp: variable out of range");
            t.a[r][var] += coef;
        }
        t.a[r][t.cols] = rows[r].rhs;
        switch (rows[r].sense) {
            case RowSense::LessEq:
                t.a[r][next] = 1;
                t.basis[r] = next;
                t.unit_col[r] = next;
                ++next;
                break;
            case RowSense::GreaterEq:
                t.a[r][next] = -1;  // surplus
                ++next;
                t.a[r][next] = 1;  // artificial
                t.artificial[next] = 1;
                t.basis[r] = next;
                t.unit_col[r] = next;
                any_artificial = true;
                ++next;
                break;
            case RowSense::Equal:
                t.a[r][next] = 1;  // artificial
                t.artificial[next] = 1;
                t.basis[r] = next;
                t.unit_col[r] = next;
                any_artificial = true;
                ++next;
                break;
        }
    }

    LpSolution out;

    if (any_artificial) {
        // Phase 1: maximize -sum(artificials). Price out the artificial basis.
        for (int c = 0; c <= t.cols; ++c) {
            Rational rc(0);
            if (c < t.cols && t.artificial[c]) rc = -1;
            for (int r = 0; r < m; ++r) {
                if (t.artificial[t.basis[r]]) rc += t.a[r][c];
            }
            t.a[m][c] = rc;
        }
        for (;;) {
            Tableau::Step step = t.pivot_step(false);
            if (step == Tableau::Step::Optimal) break;
            if (step == Tableau::Step::Unbounded) {
                // Phase 1 maximizes -sum(artificials) <= 0, always bounded.
                throw ContractViolation("solve_lp: phase 1 reported unbounded");
            }
        }
        // Infeasible when some artificial is stuck at a positive value.
        Rational infeas(0);
        for (int r = 0; r < m; ++r) {
            if (t.artificial[t.basis[r]]) infeas += t.a[r][t.cols];
        }
        if (infeas != 0) {
            out.status = LpStatus::Infeasible;
            return out;
        }
        // Drive remaining artificials out of the basis (their value is 0, so
        // any nonzero pivot keeps feasibility); rows with no candidate are
        // redundant and drop out of further pivoting.
        for (int r = 0; r < m; ++r) {
            if (!t.artificial[t.basis[r]]) continue;
            int target = -1;
            for (int c = 0; c < t.cols; ++c) {
                if (!t.artificial[c] && t.a[r][c] != 0) {
                    target = c;
                    break;
                }
            }
            if (target >= 0) t.pivot(r, target);
            else t.dead[r] = 1;
        }
    }

    // Phase 2: rebuild reduced costs for the real objective; artificial
    // columns stay locked out.
    for (int c = 0; c <= t.cols; ++c) {
        Rational rc(0);
        if (c < t.cols && c < n) rc = p.objective[c];
        for (int r = 0; r < m; ++r) {
            if (t.dead[r]) continue;
            int b = t.basis[r];
            if (b < n && p.objective[b] != 0) rc -= p.objective[b] * t.a[r][c];
        }
        t.a[m][c] = rc;
    }
    for (;;) {
        Tableau::Step step = t.pivot_step(true);
        if (step == Tableau::Step::Optimal) break;
        if (step == Tableau::Step::Unbounded) {
            out.status = LpStatus::Unbounded;
            return out;
        }
    }

    out.status = LpStatus::Optimal;
    out.x.assign(n, Rational(0));
    for (int r = 0; r < m; ++r) {
        if (!t.dead[r] && t.basis[r] < n) out.x[t.basis[r]] = t.a[r][t.cols];
    }
    out.objective = 0;
    for (int c = 0; c < n; ++c) {
        if (p.objective[c] != 0 && out.x[c] != 0) out.objective += p.objective[c] * out.x[c];
    }
    // Duals read off the reduced costs of each row's original unit column
    // (slack for <= rows, artificial for >= and = rows), undoing the rhs
    // normalization sign.
    out.dual.assign(m, Rational(0));
    for (int r = 0; r < m; ++r) {
        if (t.dead[r]) continue;
        Rational y = -t.a[m][t.unit_col[r]];
        out.dual[r] = (t.row_sign[r] == 1) ? y : Rational(-y);
    }
    return out;
}

}  // namespace gaptensor

#pragma once

#include <utility>
#include <vector>

#include "gaptensor/rational.hpp"

namespace gaptensor {

enum class LpStatus { Optimal, Infeasible, Unbounded };

enum class RowSense { LessEq, GreaterEq, Equal };

struct LpRow {
    std::vector<std::pair<int, Rational>> coeffs;  // sparse (variable, coefficient)
    RowSense sense = RowSense::LessEq;
    Rational rhs;
};

// maximize objective . x  subject to the rows, x >= 0 componentwise.
struct LpProblem {
    int var_count = 0;
    std::vector<Rational> objective;  // size var_count
    std::vector<LpRow> rows;
};

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    Rational objective;
    std::vector<Rational> x;     // size var_count when Optimal
    // One multiplier per input row when Optimal. Max-problem convention:
    // <= rows give y >= 0, >= rows give y <= 0, equalities are free, and
    // objective = sum_i y_i * rhs_i (strong duality).
    std::vector<Rational> dual;
};

// Exact two-phase dense tableau simplex over rationals with Bland's rule.
// Deterministic; intended for desk-scale instances.
LpSolution solve_lp(const LpProblem& p);

}  // namespace gaptensor

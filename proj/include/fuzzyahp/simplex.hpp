#pragma once

#include <cstddef>
#include <vector>

namespace fahp::lp {

enum class Sense { LessEqual, GreaterEqual, Equal };

struct Constraint {
    std::vector<double> coeffs;
    Sense sense;
    double rhs;
};

/// maximize objective . x  subject to constraints, x >= 0
struct LinearProgram {
    std::size_t num_vars = 0;
    std::vector<double> objective;
    std::vector<Constraint> constraints;
};

enum class Status { Optimal, Infeasible, Unbounded };

struct Solution {
    Status status = Status::Infeasible;
    std::vector<double> x;
    double objective = 0;
    std::size_t pivots = 0;
    /// Sum of artificial variables left after phase one (0 when feasible).
    double infeasibility = 0;
    /// Optimal dual values, one per constraint (>= 0 for <= rows of a
    /// maximization). Empty unless optimal.
    std::vector<double> duals;
};

struct Tolerances {
    double pivot = 1e-9;
    double reduced_cost = 1e-12;
    /// Phase-one residual accepted as feasible.
    double feasibility = 1e-9;
};

/// Dense two-phase tableau simplex with Harris ratio test and a Bland fallback against cycling. Meant for small
/// problems (tens of rows); no scaling or presolve.
Solution solve(const LinearProgram& lp, const Tolerances& tol = {});

} // namespace fahp::lp

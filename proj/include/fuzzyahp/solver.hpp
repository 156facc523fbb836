#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fuzzyahp/hierarchy.hpp"

namespace fahp {

struct SolverConfig {
    double lambda_lo = -10.0;
    double lambda_cap = 1.0;
    double bisection_tol = 1e-6;
    /// Lower bound on every weight (realizes w > 0).
    double weight_floor = 1e-6;

    /// Throws ArgumentError on an empty search interval or non-positive tolerances.
    void check() const;
};

struct SolveResult {
    std::vector<std::string> items;
    /// Crisp priority vector in `items` order; sums to 1.
    std::vector<double> weights;
    /// Consistency index: the largest lambda (within tolerance) at which the
    /// judgments admit a weight vector.
    double lambda = 0;
    bool consistent = false;
    /// Bisection steps for the solver, lattice points for the oracle.
    std::size_t iterations = 0;
    /// lambda reached the search cap.
    bool clamped = false;
    /// Minimum constraint slack of the returned point.
    double slack = 0;
    /// Largest range of any single weight over the feasible set at `lambda`.
    double face_width = 0;
    /// The optimal region is wider than 1000 * bisection_tol in some weight,
    /// so the reported point is one of many optima.
    bool non_unique = false;

    double weight(const std::string& id) const;
    std::map<std::string, double> weight_map() const;
};

/// Minimum membership of w[row]/w[col] over all judgments, i.e. the largest
/// lambda at which `w` satisfies every constraint. `w` is in `m.items` order.
double lambda_at(const ComparisonMatrix& m, std::span<const double> w);

struct FeasiblePoint {
    std::vector<double> weights;
    double slack = 0;
};

/// For fixed lambda the constraints
///   w_r >= (l + lambda (m - l)) w_c,   w_r <= (u - lambda (u - m)) w_c
/// are linear in w. Returns the point that maximizes the minimum slack over
/// those constraints (with sum w = 1, w >= weight_floor), or nullopt if the
/// polytope is empty. Judgments whose interval has collapsed to a point
/// (crisp, or lambda = 1) become equalities and carry no slack.
std::optional<FeasiblePoint> feasible_at(const ComparisonMatrix& m, double lambda, const SolverConfig& cfg = {});

/// Fuzzy preference programming: maximize lambda subject to the membership
/// constraints, by bisection over [lambda_lo, lambda_cap]. Feasibility is
/// monotone in lambda so the bracket is exact.
///
/// The optimal weight set can have positive width. The reported point is the
/// lexicographic max-min of the constraint slacks at the final lambda, which
/// is independent of item order.
///
/// Throws SolverError listing a minimal conflicting judgment set when even
/// lambda_lo is infeasible.
SolveResult solve_fpp(const ComparisonMatrix& m, const SolverConfig& cfg = {});

inline constexpr std::size_t kOracleMaxItems = 4;
/// Largest lambda or weight difference accepted between solver and oracle.
inline constexpr double kOracleTolerance = 0.03;

/// Exhaustive search over the simplex lattice with spacing `grid_step`
/// (every weight at least one step). Returns the lattice point with the
/// highest lambda_at. Crisp judgments are treated as hard constraints: points
/// are first ranked by their worst relative deviation from crisp ratios, then
/// by the minimum membership over the judgments with spread, which is the
/// reported lambda.
///
/// Refuses n > 4 and steps outside [1e-3, 0.05] with ArgumentError.
SolveResult oracle_solve(const ComparisonMatrix& m, double grid_step);

/// Solves every block of a validated hierarchy; blocks are independent and
/// solved concurrently. Keyed by internal node id.
std::map<std::string, SolveResult> solve_blocks(const Hierarchy& h, const SolverConfig& cfg = {});

} // namespace fahp

#include "fuzzyahp/solver.hpp"

#include <cmath>
#include <functional>
#include <future>
#include <limits>
#include <numeric>
#include <sstream>

#include "fuzzyahp/error.hpp"
#include "fuzzyahp/simplex.hpp"

namespace fahp {

void SolverConfig::check() const {
    if (!(lambda_lo < lambda_cap)) throw ArgumentError("solver config: lambda_lo must be below lambda_cap");
    if (!(bisection_tol > 0)) throw ArgumentError("solver config: bisection_tol must be positive");
    if (!(weight_floor > 0)) throw ArgumentError("solver config: weight_floor must be positive");
}

double SolveResult::weight(const std::string& id) const {
    for (std::size_t i = 0; i < items.size(); ++i)
        if (items[i] == id) return weights[i];
    throw LookupError("no weight for item '" + id + "'");
}

std::map<std::string, double> SolveResult::weight_map() const {
    std::map<std::string, double> out;
    for (std::size_t i = 0; i < items.size(); ++i) out.emplace(items[i], weights[i]);
    return out;
}

double lambda_at(const ComparisonMatrix& m, std::span<const double> w) {
    if (w.size() != m.items.size()) {
        throw ArgumentError("weight vector has " + std::to_string(w.size()) + " entries for " +
                            std::to_string(m.items.size()) + " items");
    }
    const double total = std::accumulate(w.begin(), w.end(), 0.0);
    if (std::abs(total - 1.0) > 1e-9) {
        std::ostringstream msg;
        msg << "weight vector must sum to 1, sums to " << total;
        throw ArgumentError(msg.str());
    }
    double lambda = std::numeric_limits<double>::infinity();
    for (const auto& j : m.judgments) {
        const double ratio = w[static_cast<std::size_t>(m.index_of(j.row))] / w[static_cast<std::size_t>(m.index_of(j.col))];
        lambda = std::min(lambda, membership(j.value, ratio));
    }
    return lambda;
}

namespace {

// Weights are shifted by the floor, w = floor + v with v >= 0, so every
// ratio constraint is expressed as an affine slack a . v + b over v.
struct SlackRow {
    std::vector<double> a;
    double b = 0;
    std::size_t judgment = 0;
};

struct ConstraintSet {
    std::size_t n = 0;
    double floor = 0;
    std::vector<SlackRow> inequalities; // slack >= 0
    std::vector<SlackRow> equalities;   // slack == 0
};

// nullopt when some interval is already empty at this lambda
std::optional<ConstraintSet> build_constraints(const ComparisonMatrix& m, const std::vector<std::size_t>& subset,
                                               double lambda, const SolverConfig& cfg) {
    ConstraintSet cs;
    cs.n = m.items.size();
    cs.floor = cfg.weight_floor;
    const double eps = cfg.weight_floor;

    for (std::size_t k : subset) {
        const auto& j = m.judgments[k];
        const auto r = static_cast<std::size_t>(m.index_of(j.row));
        const auto c = static_cast<std::size_t>(m.index_of(j.col));
        const double l = j.value.lower(), mode = j.value.mode(), u = j.value.upper();
        const double lo = l + lambda * (mode - l);
        const double hi = u - lambda * (u - mode);
        const double width_tol = 1e-12 * std::max(1.0, std::abs(lo));

        if (lo > hi + width_tol) return std::nullopt;
        if (hi - lo <= width_tol) {
            // w_r - ratio * w_c
            const double ratio = 0.5 * (lo + hi);
            SlackRow eq{std::vector<double>(cs.n, 0.0), eps * (1.0 - ratio), k};
            eq.a[r] = 1.0;
            eq.a[c] = -ratio;
            cs.equalities.push_back(std::move(eq));
            continue;
        }
        // w_r - lo * w_c
        SlackRow lower{std::vector<double>(cs.n, 0.0), eps * (1.0 - lo), k};
        lower.a[r] = 1.0;
        lower.a[c] = -lo;
        cs.inequalities.push_back(std::move(lower));
        // hi * w_c - w_r
        SlackRow upper{std::vector<double>(cs.n, 0.0), eps * (hi - 1.0), k};
        upper.a[c] = hi;
        upper.a[r] = -1.0;
        cs.inequalities.push_back(std::move(upper));
    }
    return cs;
}

// Variables: v (n) followed by the common slack level t. Rows with a frozen
// level must keep slack >= level; the others must keep slack >= t.
lp::LinearProgram base_program(const ConstraintSet& cs, const std::vector<std::optional<double>>& frozen,
                               bool with_level) {
    const std::size_t n = cs.n;
    lp::LinearProgram prog;
    prog.num_vars = n + 1;
    prog.objective.assign(n + 1, 0.0);

    for (std::size_t i = 0; i < cs.inequalities.size(); ++i) {
        const auto& row = cs.inequalities[i];
        // -a . v + t <= b   or   -a . v <= b - level
        std::vector<double> coeffs(n + 1, 0.0);
        for (std::size_t k = 0; k < n; ++k) coeffs[k] = -row.a[k];
        double rhs = row.b;
        if (frozen[i])
            rhs -= *frozen[i];
        else if (with_level)
            coeffs[n] = 1.0;
        prog.constraints.push_back({std::move(coeffs), lp::Sense::LessEqual, rhs});
    }
    for (const auto& row : cs.equalities) {
        std::vector<double> coeffs(row.a);
        coeffs.push_back(0.0);
        prog.constraints.push_back({std::move(coeffs), lp::Sense::Equal, -row.b});
    }
    std::vector<double> sum(n + 1, 1.0);
    sum[n] = 0.0;
    prog.constraints.push_back({std::move(sum), lp::Sense::Equal, 1.0 - cs.floor * static_cast<double>(n)});
    if (!with_level) {
        std::vector<double> pin(n + 1, 0.0);
        pin[n] = 1.0;
        prog.constraints.push_back({std::move(pin), lp::Sense::Equal, 0.0});
    }
    return prog;
}

double slack_of(const SlackRow& row, const std::vector<double>& v) {
    double s = row.b;
    for (std::size_t k = 0; k < row.a.size(); ++k) s += row.a[k] * v[k];
    return s;
}

FeasiblePoint to_point(const ConstraintSet& cs, const std::vector<double>& x, double slack) {
    FeasiblePoint p;
    p.weights.resize(cs.n);
    double total = 0;
    for (std::size_t i = 0; i < cs.n; ++i) total += p.weights[i] = cs.floor + std::max(0.0, x[i]);
    for (auto& w : p.weights) w /= total;
    p.slack = slack;
    return p;
}

// Maximizes the minimum slack; slack is 0 when there are no inequality rows.
std::optional<FeasiblePoint> max_slack_point(const ConstraintSet& cs) {
    if (cs.floor * static_cast<double>(cs.n) >= 1.0) return std::nullopt;
    const bool with_level = !cs.inequalities.empty();
    auto prog = base_program(cs, std::vector<std::optional<double>>(cs.inequalities.size()), with_level);
    prog.objective[cs.n] = 1.0;
    const auto sol = lp::solve(prog);
    if (sol.status != lp::Status::Optimal) return std::nullopt;
    return to_point(cs, sol.x, with_level ? sol.x[cs.n] : 0.0);
}

std::optional<FeasiblePoint> feasible_subset(const ComparisonMatrix& m, const std::vector<std::size_t>& subset,
                                             double lambda, const SolverConfig& cfg) {
    auto cs = build_constraints(m, subset, lambda, cfg);
    if (!cs) return std::nullopt;
    return max_slack_point(*cs);
}

// Lexicographic max-min of the constraint slacks: raise the common level,
// freeze the rows whose dual value is positive (they are tight in every
// optimum), repeat with the rest. The result does not depend on item or
// judgment order.
std::optional<FeasiblePoint> leximin_point(const ConstraintSet& cs) {
    const std::size_t rows = cs.inequalities.size();
    const std::size_t n = cs.n;
    auto first = max_slack_point(cs);
    if (!first || rows == 0) return first;

    constexpr double kDualTol = 1e-9;
    constexpr double kTight = 1e-9;
    constexpr double kFreezeMargin = 1e-8;
    std::vector<std::optional<double>> frozen(rows);
    std::vector<double> x;

    for (std::size_t stage = 0; stage < rows; ++stage) {
        auto prog = base_program(cs, frozen, true);
        prog.objective[n] = 1.0;
        const auto sol = lp::solve(prog);
        if (sol.status != lp::Status::Optimal) break;
        const double level = sol.x[n];
        x = sol.x;

        std::vector<std::size_t> blocked;
        for (std::size_t i = 0; i < rows; ++i)
            if (!frozen[i] && sol.duals[i] > kDualTol) blocked.push_back(i);
        if (blocked.empty()) {
            // numerical fallback: freeze whatever is tight at the current point
            for (std::size_t i = 0; i < rows; ++i)
                if (!frozen[i] && slack_of(cs.inequalities[i], x) <= level + kTight) blocked.push_back(i);
        }
        if (blocked.empty()) break;
        // a hair below the level so round-off cannot make later stages infeasible
        for (std::size_t i : blocked) frozen[i] = level - std::min(kFreezeMargin, 0.5 * level);

        bool done = true;
        for (const auto& f : frozen) done = done && f.has_value();
        if (done) break;
    }
    if (x.empty()) return first;
    return to_point(cs, x, first->slack);
}

// Largest spread of any single weight over the feasible set.
double face_width(const ConstraintSet& cs) {
    double width = 0;
    const std::vector<std::optional<double>> none(cs.inequalities.size());
    for (std::size_t k = 0; k < cs.n; ++k) {
        double ends[2] = {0, 0};
        for (int side = 0; side < 2; ++side) {
            auto prog = base_program(cs, none, false);
            prog.objective[k] = side == 0 ? -1.0 : 1.0;
            const auto sol = lp::solve(prog);
            if (sol.status != lp::Status::Optimal) return 0.0;
            ends[side] = sol.x[k];
        }
        width = std::max(width, ends[1] - ends[0]);
    }
    return width;
}

std::vector<std::size_t> all_judgments(const ComparisonMatrix& m) {
    std::vector<std::size_t> idx(m.judgments.size());
    std::iota(idx.begin(), idx.end(), 0);
    return idx;
}

// Deletion filter: drop every judgment whose removal keeps the set infeasible.
std::vector<std::size_t> conflicting_subset(const ComparisonMatrix& m, double lambda, const SolverConfig& cfg) {
    auto set = all_judgments(m);
    for (std::size_t k = 0; k < set.size();) {
        auto trial = set;
        trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(k));
        if (!feasible_subset(m, trial, lambda, cfg))
            set = std::move(trial);
        else
            ++k;
    }
    return set;
}

} // namespace

std::optional<FeasiblePoint> feasible_at(const ComparisonMatrix& m, double lambda, const SolverConfig& cfg) {
    return feasible_subset(m, all_judgments(m), lambda, cfg);
}

SolveResult solve_fpp(const ComparisonMatrix& m, const SolverConfig& cfg) {
    cfg.check();
    validate_matrix(m);

    SolveResult out;
    out.items = m.items;
    out.iterations = 1;

    double lo = cfg.lambda_cap;
    if (!feasible_at(m, cfg.lambda_cap, cfg)) {
        ++out.iterations;
        if (!feasible_at(m, cfg.lambda_lo, cfg)) {
            std::ostringstream msg;
            msg << "judgments of block '" << m.parent << "' are infeasible even at lambda = " << cfg.lambda_lo
                << "; conflicting pairs:";
            for (std::size_t k : conflicting_subset(m, cfg.lambda_lo, cfg))
                msg << " (" << m.judgments[k].row << ", " << m.judgments[k].col << ")";
            throw SolverError(msg.str());
        }
        lo = cfg.lambda_lo;
        double hi = cfg.lambda_cap;
        while (hi - lo > cfg.bisection_tol) {
            const double mid = 0.5 * (lo + hi);
            ++out.iterations;
            if (feasible_at(m, mid, cfg))
                lo = mid;
            else
                hi = mid;
        }
    }

    const auto cs = build_constraints(m, all_judgments(m), lo, cfg);
    auto point = cs ? leximin_point(*cs) : std::nullopt;
    if (!point) throw SolverError("block '" + m.parent + "': lost feasibility at the final lambda");

    out.lambda = lo;
    out.weights = std::move(point->weights);
    out.slack = point->slack;
    out.consistent = lo >= 0.0;
    out.clamped = cfg.lambda_cap - lo <= cfg.bisection_tol;
    out.face_width = face_width(*cs);
    out.non_unique = out.face_width > 1e3 * cfg.bisection_tol;
    return out;
}

SolveResult oracle_solve(const ComparisonMatrix& m, double grid_step) {
    const std::size_t n = m.items.size();
    if (n > kOracleMaxItems) {
        throw ArgumentError("oracle refuses block '" + m.parent + "' with " + std::to_string(n) +
                            " items (limit " + std::to_string(kOracleMaxItems) + ")");
    }
    if (!(grid_step >= 1e-3 && grid_step <= 0.05)) {
        std::ostringstream msg;
        msg << "oracle grid step must be in [0.001, 0.05], got " << grid_step;
        throw ArgumentError(msg.str());
    }
    validate_matrix(m);

    const auto K = static_cast<int>(std::lround(1.0 / grid_step));
    struct Pair {
        std::size_t r, c;
        const Tfn* value;
    };
    std::vector<Pair> crisp, fuzzy;
    for (const auto& j : m.judgments) {
        Pair p{static_cast<std::size_t>(m.index_of(j.row)), static_cast<std::size_t>(m.index_of(j.col)), &j.value};
        (j.value.lower() == j.value.upper() ? crisp : fuzzy).push_back(p);
    }

    std::vector<int> parts(n, 1);
    std::vector<double> w(n);
    double best_violation = std::numeric_limits<double>::infinity();
    double best_lambda = -std::numeric_limits<double>::infinity();
    std::vector<double> best_w;
    std::size_t evaluated = 0;

    auto evaluate = [&]() {
        ++evaluated;
        for (std::size_t i = 0; i < n; ++i) w[i] = parts[i] / static_cast<double>(K);
        double violation = 0;
        for (const auto& p : crisp)
            violation = std::max(violation, std::abs(w[p.r] / w[p.c] - p.value->mode()) / p.value->mode());
        double lambda = 1.0;
        for (const auto& p : fuzzy) lambda = std::min(lambda, membership(*p.value, w[p.r] / w[p.c]));
        if (violation < best_violation || (violation == best_violation && lambda > best_lambda)) {
            best_violation = violation;
            best_lambda = lambda;
            best_w = w;
        }
    };

    // enumerate compositions of K into n positive parts
    std::function<void(std::size_t, int)> recurse = [&](std::size_t i, int remaining) {
        if (i + 1 == n) {
            parts[i] = remaining;
            evaluate();
            return;
        }
        const int others = static_cast<int>(n - i - 1);
        for (int k = 1; k <= remaining - others; ++k) {
            parts[i] = k;
            recurse(i + 1, remaining - k);
        }
    };
    recurse(0, K);

    SolveResult out;
    out.items = m.items;
    out.weights = best_w;
    out.lambda = best_lambda;
    out.consistent = best_lambda >= 0.0;
    out.clamped = best_lambda >= 1.0 - 1e-12;
    out.iterations = evaluated;
    return out;
}

std::map<std::string, SolveResult> solve_blocks(const Hierarchy& h, const SolverConfig& cfg) {
    std::vector<std::pair<std::string, std::future<SolveResult>>> jobs;
    for (const auto& [id, m] : h.matrices)
        jobs.emplace_back(id, std::async(std::launch::async, [&m = m, &cfg] { return solve_fpp(m, cfg); }));
    std::map<std::string, SolveResult> out;
    for (auto& [id, job] : jobs) out.emplace(id, job.get());
    return out;
}

} // namespace fahp

#include "fuzzyahp/simplex.hpp"

#include <cmath>
#include <limits>

#include "fuzzyahp/error.hpp"

namespace fahp::lp {

namespace {

// Consecutive degenerate pivots tolerated before switching to Bland's rule.
constexpr std::size_t kBlandAfter = 20;
// Primal infeasibility the ratio test may introduce in exchange for a larger pivot.
constexpr double kHarrisSlack = 1e-11;

class Tableau {
public:
    Tableau(const LinearProgram& lp, const Tolerances& tol) : tol_(tol), n_(lp.num_vars) {
        const std::size_t m = lp.constraints.size();
        std::size_t slacks = 0, artificials = 0;
        for (const auto& c : lp.constraints) {
            if (c.coeffs.size() != n_) throw ArgumentError("LP constraint width does not match variable count");
            const bool flip = c.rhs < 0;
            Sense s = c.sense;
            if (flip && s != Sense::Equal) s = (s == Sense::LessEqual) ? Sense::GreaterEqual : Sense::LessEqual;
            if (s != Sense::Equal) ++slacks;
            if (s != Sense::LessEqual) ++artificials;
        }
        cols_ = n_ + slacks + artificials;
        first_artificial_ = n_ + slacks;
        rows_.assign(m, std::vector<double>(cols_ + 1, 0.0));
        basis_.assign(m, 0);
        row_id_.resize(m);
        unit_col_.resize(m);
        row_sign_.resize(m);

        std::size_t next_slack = n_, next_art = first_artificial_;
        for (std::size_t i = 0; i < m; ++i) {
            const auto& c = lp.constraints[i];
            const double sign = c.rhs < 0 ? -1.0 : 1.0;
            Sense s = c.sense;
            if (sign < 0 && s != Sense::Equal) s = (s == Sense::LessEqual) ? Sense::GreaterEqual : Sense::LessEqual;
            auto& row = rows_[i];
            for (std::size_t j = 0; j < n_; ++j) row[j] = sign * c.coeffs[j];
            row[cols_] = sign * c.rhs;
            if (s == Sense::LessEqual) {
                row[next_slack] = 1.0;
                basis_[i] = next_slack++;
            } else {
                if (s == Sense::GreaterEqual) row[next_slack++] = -1.0;
                row[next_art] = 1.0;
                basis_[i] = next_art++;
            }
            unit_col_[i] = basis_[i];
            row_sign_[i] = sign;
            row_id_[i] = i;
        }
        original_ = rows_;
        allowed_.assign(cols_, true);
    }

    // Phase one: maximize -sum(artificials). Returns the remaining infeasibility.
    double phase_one() {
        std::vector<double> cost(cols_, 0.0);
        for (std::size_t j = first_artificial_; j < cols_; ++j) cost[j] = -1.0;
        set_objective(cost);
        iterate();
        refine();
        double infeasibility = 0;
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (basis_[i] >= first_artificial_) infeasibility += std::max(0.0, rows_[i][cols_]);
        return infeasibility;
    }

    // Pivots artificials out of the basis, drops redundant rows, bans artificial columns.
    void drive_out_artificials() {
        for (std::size_t i = 0; i < rows_.size();) {
            if (basis_[i] < first_artificial_) {
                ++i;
                continue;
            }
            // largest pivot keeps the exchange well conditioned
            std::size_t entering = cols_;
            double biggest = tol_.pivot;
            for (std::size_t j = 0; j < first_artificial_; ++j) {
                if (std::abs(rows_[i][j]) > biggest) {
                    biggest = std::abs(rows_[i][j]);
                    entering = j;
                }
            }
            if (entering == cols_) {
                rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
                basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
                row_id_.erase(row_id_.begin() + static_cast<std::ptrdiff_t>(i));
                continue;
            }
            // the artificial sits at zero up to phase-one round-off
            rows_[i][cols_] = 0.0;
            pivot(i, entering);
            ++i;
        }
        for (std::size_t j = first_artificial_; j < cols_; ++j) allowed_[j] = false;
    }

    bool phase_two(const std::vector<double>& objective) {
        std::vector<double> cost(cols_, 0.0);
        for (std::size_t j = 0; j < n_; ++j) cost[j] = objective[j];
        set_objective(cost);
        const bool bounded = iterate();
        refine();
        return bounded;
    }

    std::vector<double> primal() const {
        std::vector<double> x(n_, 0.0);
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (basis_[i] < n_) x[basis_[i]] = std::max(0.0, rows_[i][cols_]);
        return x;
    }

    // Row multipliers of the current basis, y = c_B B^-1, per original
    // constraint. Rows dropped as redundant get 0.
    std::vector<double> duals() const {
        std::vector<double> y(unit_col_.size(), 0.0);
        for (std::size_t i : row_id_) y[i] = row_sign_[i] * objective_row_[unit_col_[i]];
        return y;
    }

    std::size_t pivots() const { return pivots_; }

private:
    // objective_row_[j] = z_j - c_j; last entry holds the objective value.
    void set_objective(const std::vector<double>& cost) {
        objective_row_.assign(cols_ + 1, 0.0);
        for (std::size_t j = 0; j < cols_; ++j) objective_row_[j] = -cost[j];
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const double cb = cost[basis_[i]];
            if (cb == 0.0) continue;
            for (std::size_t j = 0; j <= cols_; ++j) objective_row_[j] += cb * rows_[i][j];
        }
    }

    // Most negative reduced cost with a two-pass (Harris) ratio test that
    // prefers large pivots. After kBlandAfter degenerate pivots in a row the
    // rule becomes Bland's (lowest index entering, lowest basic index on
    // ratio ties) until the objective moves again, so cycling cannot occur.
    bool iterate() {
        std::size_t degenerate_run = 0;
        for (;;) {
            const bool bland = degenerate_run >= kBlandAfter;
            std::size_t entering = cols_;
            double most_negative = -tol_.reduced_cost;
            for (std::size_t j = 0; j < cols_; ++j) {
                if (!allowed_[j] || objective_row_[j] >= most_negative) continue;
                entering = j;
                if (bland) break;
                most_negative = objective_row_[j];
            }
            if (entering == cols_) return true;

            const std::size_t leaving = bland ? bland_ratio(entering) : harris_ratio(entering);
            if (leaving == rows_.size()) return false;
            const double step = std::max(0.0, rows_[leaving][cols_]) / rows_[leaving][entering];
            degenerate_run = step > 1e-12 ? 0 : degenerate_run + 1;
            pivot(leaving, entering);
        }
    }

    std::size_t bland_ratio(std::size_t entering) const {
        std::size_t leaving = rows_.size();
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const double a = rows_[i][entering];
            if (a <= tol_.pivot) continue;
            const double ratio = std::max(0.0, rows_[i][cols_]) / a;
            if (ratio < best || (ratio == best && basis_[i] < basis_[leaving])) {
                best = ratio;
                leaving = i;
            }
        }
        return leaving;
    }

    std::size_t harris_ratio(std::size_t entering) const {
        double bound = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const double a = rows_[i][entering];
            if (a > tol_.pivot) bound = std::min(bound, (std::max(0.0, rows_[i][cols_]) + kHarrisSlack) / a);
        }
        std::size_t leaving = rows_.size();
        double largest = 0;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const double a = rows_[i][entering];
            if (a <= tol_.pivot || std::max(0.0, rows_[i][cols_]) / a > bound) continue;
            if (a > largest || (a == largest && basis_[i] < basis_[leaving])) {
                largest = a;
                leaving = i;
            }
        }
        return leaving;
    }

    void pivot(std::size_t r, std::size_t s) {
        auto& prow = rows_[r];
        const double inv = 1.0 / prow[s];
        for (auto& v : prow) v *= inv;
        prow[s] = 1.0;
        auto eliminate = [&](std::vector<double>& row) {
            const double f = row[s];
            if (f == 0.0) return;
            for (std::size_t j = 0; j <= cols_; ++j) row[j] -= f * prow[j];
            row[s] = 0.0;
        };
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (i != r) eliminate(rows_[i]);
        if (!objective_row_.empty()) eliminate(objective_row_);
        basis_[r] = s;
        ++pivots_;
    }

    // Recomputes the basic values from the original data for the current
    // basis (Gaussian elimination, partial pivoting), discarding round-off
    // accumulated over the pivots. Kept only if the result is feasible.
    void refine() {
        const std::size_t m = rows_.size();
        if (m == 0) return;
        std::vector<std::vector<double>> a(m, std::vector<double>(m + 1));
        for (std::size_t i = 0; i < m; ++i) {
            const auto& orig = original_[row_id_[i]];
            for (std::size_t k = 0; k < m; ++k) a[i][k] = orig[basis_[k]];
            a[i][m] = orig[cols_];
        }
        for (std::size_t c = 0; c < m; ++c) {
            std::size_t p = c;
            for (std::size_t i = c + 1; i < m; ++i)
                if (std::abs(a[i][c]) > std::abs(a[p][c])) p = i;
            if (std::abs(a[p][c]) < 1e-13) return;
            std::swap(a[p], a[c]);
            for (std::size_t i = c + 1; i < m; ++i) {
                const double f = a[i][c] / a[c][c];
                if (f == 0.0) continue;
                for (std::size_t k = c; k <= m; ++k) a[i][k] -= f * a[c][k];
            }
        }
        std::vector<double> x(m);
        for (std::size_t c = m; c-- > 0;) {
            double v = a[c][m];
            for (std::size_t k = c + 1; k < m; ++k) v -= a[c][k] * x[k];
            x[c] = v / a[c][c];
        }
        for (double& v : x) {
            if (v < -tol_.feasibility) return;
            v = std::max(0.0, v);
        }
        for (std::size_t k = 0; k < m; ++k) rows_[k][cols_] = x[k];
    }

    Tolerances tol_;
    std::size_t n_;
    std::size_t cols_ = 0;
    std::size_t first_artificial_ = 0;
    std::vector<std::vector<double>> rows_;
    std::vector<std::vector<double>> original_;
    std::vector<std::size_t> row_id_;
    // column holding +e_i in the initial tableau, and the rhs sign flip
    std::vector<std::size_t> unit_col_;
    std::vector<double> row_sign_;
    std::vector<std::size_t> basis_;
    std::vector<double> objective_row_;
    std::vector<bool> allowed_;
    std::size_t pivots_ = 0;
};

} // namespace

Solution solve(const LinearProgram& lp, const Tolerances& tol) {
    if (lp.objective.size() != lp.num_vars) throw ArgumentError("LP objective width does not match variable count");

    Tableau t(lp, tol);
    Solution out;
    out.infeasibility = t.phase_one();
    if (out.infeasibility > tol.feasibility) {
        out.status = Status::Infeasible;
        out.pivots = t.pivots();
        return out;
    }
    t.drive_out_artificials();
    const bool bounded = t.phase_two(lp.objective);
    out.status = bounded ? Status::Optimal : Status::Unbounded;
    out.x = t.primal();
    for (std::size_t j = 0; j < lp.num_vars; ++j) out.objective += lp.objective[j] * out.x[j];
    if (bounded) out.duals = t.duals();
    out.pivots = t.pivots();
    return out;
}

} // namespace fahp::lp

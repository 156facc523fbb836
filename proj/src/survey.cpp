#include "fuzzyahp/survey.hpp"

#include <cmath>
#include <sstream>

#include "fuzzyahp/error.hpp"

namespace fahp {

CaspScore::CaspScore(const std::vector<int>& criteria) {
    if (criteria.size() != criteria_.size()) {
        throw ArgumentError("CASP score needs exactly 10 criteria, got " + std::to_string(criteria.size()));
    }
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        if (criteria[i] < 1 || criteria[i] > 5) {
            throw ArgumentError("CASP criterion " + std::to_string(i + 1) + " out of range 1..5: " +
                                std::to_string(criteria[i]));
        }
        criteria_[i] = criteria[i];
    }
}

double CaspScore::mean() const {
    int total = 0;
    for (int c : criteria_) total += c;
    return total / 10.0;
}

bool casp_pass(const CaspScore& s) {
    // integer comparison: mean > 4 <=> total > 40
    int total = 0;
    for (int c : s.criteria()) total += c;
    return total > 40;
}

DelphiRatings::DelphiRatings(std::vector<std::string> items, std::vector<std::string> experts,
                             std::vector<std::vector<int>> ratings)
    : items_(std::move(items)), experts_(std::move(experts)), ratings_(std::move(ratings)) {
    if (items_.empty()) throw ArgumentError("Delphi ratings need at least one item");
    if (experts_.empty()) throw ArgumentError("Delphi ratings need at least one expert");
    if (ratings_.size() != items_.size())
        throw ArgumentError("Delphi ratings: expected " + std::to_string(items_.size()) + " rows, got " +
                            std::to_string(ratings_.size()));
    std::set<std::string> seen;
    for (const auto& item : items_)
        if (!seen.insert(item).second) throw ArgumentError("Delphi ratings: duplicate item '" + item + "'");
    seen.clear();
    for (const auto& expert : experts_)
        if (!seen.insert(expert).second) throw ArgumentError("Delphi ratings: duplicate expert '" + expert + "'");

    for (std::size_t i = 0; i < ratings_.size(); ++i) {
        if (ratings_[i].size() != experts_.size())
            throw ArgumentError("Delphi ratings: item '" + items_[i] + "' has " + std::to_string(ratings_[i].size()) +
                                " ratings for " + std::to_string(experts_.size()) + " experts");
        for (std::size_t e = 0; e < experts_.size(); ++e) {
            int v = ratings_[i][e];
            if (v < 0 || v > 4)
                throw ArgumentError("Delphi rating out of range 0..4 for item '" + items_[i] + "', expert '" +
                                    experts_[e] + "': " + std::to_string(v));
        }
    }
}

double DelphiRatings::consensus(std::size_t item) const {
    const auto& row = ratings_.at(item);
    std::size_t important = 0;
    for (int v : row)
        if (v >= 3) ++important;
    return static_cast<double>(important) / static_cast<double>(row.size());
}

DelphiRoundResult delphi_round(const DelphiRatings& r, double threshold) {
    if (!(threshold > 0.0 && threshold <= 1.0)) {
        std::ostringstream msg;
        msg << "Delphi threshold must be in (0, 1], got " << threshold;
        throw ArgumentError(msg.str());
    }
    DelphiRoundResult out;
    for (std::size_t i = 0; i < r.items().size(); ++i) {
        if (r.consensus(i) >= threshold)
            out.accepted.insert(r.items()[i]);
        else
            out.deferred.insert(r.items()[i]);
    }
    return out;
}

std::set<std::string> run_delphi(const std::vector<DelphiRatings>& rounds, double threshold) {
    std::set<std::string> accepted;
    std::set<std::string> pending;
    for (std::size_t k = 0; k < rounds.size(); ++k) {
        if (k > 0) {
            std::set<std::string> rated(rounds[k].items().begin(), rounds[k].items().end());
            if (rated != pending) {
                std::ostringstream msg;
                msg << "Delphi round " << k + 1 << " must rate exactly the " << pending.size()
                    << " items deferred by round " << k << ", got " << rated.size() << " items";
                for (const auto& id : pending)
                    if (!rated.count(id)) {
                        msg << " (missing '" << id << "')";
                        break;
                    }
                for (const auto& id : rated)
                    if (!pending.count(id)) {
                        msg << " (unexpected '" << id << "')";
                        break;
                    }
                throw ValidationError(msg.str());
            }
        }
        auto result = delphi_round(rounds[k], threshold);
        accepted.insert(result.accepted.begin(), result.accepted.end());
        pending = std::move(result.deferred);
    }
    return accepted;
}

ItemResponses::ItemResponses(std::vector<std::string> items, std::vector<std::vector<double>> rows)
    : items_(std::move(items)), rows_(std::move(rows)) {
    if (items_.size() < 2) throw ArgumentError("item responses need at least 2 items");
    if (rows_.size() < 2) throw ArgumentError("item responses need at least 2 respondents");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (rows_[r].size() != items_.size())
            throw ArgumentError("respondent " + std::to_string(r + 1) + " has " + std::to_string(rows_[r].size()) +
                                " responses for " + std::to_string(items_.size()) + " items");
        for (double v : rows_[r])
            if (!std::isfinite(v))
                throw ArgumentError("respondent " + std::to_string(r + 1) + " has a missing or non-finite response");
    }
}

namespace {

// two-pass variance around the mean
double variance(const std::vector<double>& xs, VarianceConvention convention) {
    const double n = static_cast<double>(xs.size());
    double mean = 0;
    for (double x : xs) mean += x;
    mean /= n;
    double ss = 0;
    for (double x : xs) ss += (x - mean) * (x - mean);
    return ss / (convention == VarianceConvention::Sample ? n - 1 : n);
}

} // namespace

double cronbach_alpha(const ItemResponses& x, VarianceConvention convention) {
    const std::size_t k = x.item_count();
    const std::size_t n = x.respondent_count();

    std::vector<double> totals(n, 0.0);
    double item_var_sum = 0;
    std::vector<double> column(n);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t r = 0; r < n; ++r) {
            column[r] = x.rows()[r][i];
            totals[r] += column[r];
        }
        item_var_sum += variance(column, convention);
    }
    const double total_var = variance(totals, convention);
    if (!(total_var > 0.0)) throw StatisticError("Cronbach's alpha is undefined: total score variance is zero");

    const double kd = static_cast<double>(k);
    return kd / (kd - 1.0) * (1.0 - item_var_sum / total_var);
}

} // namespace fahp

#pragma once

#include <array>
#include <set>
#include <string>
#include <vector>

namespace fahp {

/// Ten CASP appraisal criteria, each scored 1..5.
class CaspScore {
public:
    explicit CaspScore(const std::vector<int>& criteria);

    const std::array<int, 10>& criteria() const { return criteria_; }
    double mean() const;

private:
    std::array<int, 10> criteria_{};
};

/// An article passes when the mean criterion score is strictly above 4.
bool casp_pass(const CaspScore& s);

/// Importance ratings of items by experts on the 0..4 scale
/// (4 very important, 3 important, 2 fairly important, 1 low, 0 unimportant).
/// ratings[i][e] is expert e's rating of item i.
class DelphiRatings {
public:
    DelphiRatings(std::vector<std::string> items, std::vector<std::string> experts,
                  std::vector<std::vector<int>> ratings);

    const std::vector<std::string>& items() const { return items_; }
    const std::vector<std::string>& experts() const { return experts_; }
    const std::vector<std::vector<int>>& ratings() const { return ratings_; }

    /// Fraction of experts rating item i as important (3) or very important (4).
    double consensus(std::size_t item) const;

private:
    std::vector<std::string> items_;
    std::vector<std::string> experts_;
    std::vector<std::vector<int>> ratings_;
};

struct DelphiRoundResult {
    std::set<std::string> accepted;
    std::set<std::string> deferred;
};

inline constexpr double kDefaultDelphiThreshold = 0.75;

/// Accepts items whose consensus fraction is >= threshold, defers the rest.
DelphiRoundResult delphi_round(const DelphiRatings& r, double threshold = kDefaultDelphiThreshold);

/// Runs successive rounds; each round must rate exactly the items deferred by
/// the previous one. Items still deferred after the last round are dropped.
std::set<std::string> run_delphi(const std::vector<DelphiRatings>& rounds,
                                 double threshold = kDefaultDelphiThreshold);

/// Respondents x items questionnaire responses, no missing cells.
class ItemResponses {
public:
    ItemResponses(std::vector<std::string> items, std::vector<std::vector<double>> rows);

    const std::vector<std::string>& items() const { return items_; }
    const std::vector<std::vector<double>>& rows() const { return rows_; }
    std::size_t item_count() const { return items_.size(); }
    std::size_t respondent_count() const { return rows_.size(); }

private:
    std::vector<std::string> items_;
    std::vector<std::vector<double>> rows_;
};

enum class VarianceConvention { Sample, Population };

/// Cronbach's alpha: k/(k-1) * (1 - sum(item variances) / var(total)).
/// Throws StatisticError when the total score has zero variance.
double cronbach_alpha(const ItemResponses& x, VarianceConvention convention = VarianceConvention::Sample);

} // namespace fahp

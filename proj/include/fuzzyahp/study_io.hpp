#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzyahp/composition.hpp"
#include "fuzzyahp/fuzzy.hpp"
#include "fuzzyahp/hierarchy.hpp"
#include "fuzzyahp/solver.hpp"
#include "fuzzyahp/survey.hpp"

namespace fahp {

struct Study {
    std::string name;
    LinguisticScale scale = default_scale();
    Hierarchy hierarchy;
    SolverConfig solver;
};

/// Parses a study document. Judgments are either [l, m, u] or
/// {"term": "<label>"} resolved against the study's scale (default scale when
/// absent). The result has passed validate(). Errors are ValidationError with
/// the line/column or the document path of the offending value.
Study parse_study(std::string_view text);
Study load_study(const std::filesystem::path& path);

/// Writes a study in the form parse_study reads (numeric judgments).
std::string dump_study(const Study& s);

struct BlockResult {
    std::string id;
    std::string label;
    std::vector<std::string> items;
    std::vector<double> weights;
    double lambda = 0;
    bool consistent = false;
    bool clamped = false;
    bool non_unique = false;
    double face_width = 0;
    std::size_t iterations = 0;

    bool operator==(const BlockResult&) const = default;
};

struct ResultsDocument {
    std::string tool_version;
    std::string study;
    SolverConfig config;
    std::optional<std::string> timestamp;
    /// internal nodes in hierarchy preorder
    std::vector<BlockResult> blocks;
    std::vector<GlobalRow> global;
};

/// Blocks in hierarchy order with labels from the hierarchy.
ResultsDocument make_results(const Study& s, const std::map<std::string, SolveResult>& solved,
                             const GlobalRanking& ranking, const SolverConfig& used);

/// Pretty-printed, full-precision numbers, trailing newline.
std::string dump_results(const ResultsDocument& doc);
ResultsDocument parse_results(std::string_view text);

/// Long-format ratings with header exactly `item,expert,rating`; one row per
/// (item, expert) pair. Items and experts keep their first-appearance order.
/// Errors name `source` and the 1-based line number.
DelphiRatings read_ratings_csv(std::istream& in, const std::string& source);

/// First row item ids, then one row of numeric responses per respondent.
ItemResponses read_responses_csv(std::istream& in, const std::string& source);

std::string read_file(const std::filesystem::path& path);

} // namespace fahp

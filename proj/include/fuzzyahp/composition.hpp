#pragma once

#include <map>
#include <string>
#include <vector>

#include "fuzzyahp/hierarchy.hpp"
#include "fuzzyahp/solver.hpp"

namespace fahp {

struct GlobalRow {
    std::string leaf;
    std::string category;
    double category_weight = 0;
    double local_weight = 0;
    /// category_weight * local_weight, not renormalized
    double global_weight = 0;
    int rank = 0;
};

/// Rows sorted by rank (descending global weight).
struct GlobalRanking {
    std::vector<GlobalRow> rows;

    const GlobalRow& row(const std::string& leaf) const;
};

using WeightMap = std::map<std::string, double>;

/// global = category weight x local weight for every leaf of every category.
/// Throws CompositionError when a category has no weight.
GlobalRanking compose_global(const WeightMap& category_weights, const std::map<std::string, WeightMap>& local_weights);

/// 1 for the largest weight; equal weights are ordered by ascending id.
std::map<std::string, int> rank(const WeightMap& weights);

/// Divides each weight by the total. Throws ArgumentError on a non-positive weight.
WeightMap normalize(const WeightMap& weights);

/// Composes solved block weights over a hierarchy of any depth: a leaf's
/// category weight is the product of local weights from the root down to its
/// parent. A node with a single child passes its whole weight down.
GlobalRanking compose_hierarchy(const Hierarchy& h, const std::map<std::string, WeightMap>& block_weights);

} // namespace fahp

#include "fuzzyahp/composition.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "fuzzyahp/error.hpp"

namespace fahp {

const GlobalRow& GlobalRanking::row(const std::string& leaf) const {
    for (const auto& r : rows)
        if (r.leaf == leaf) return r;
    throw LookupError("no ranking row for '" + leaf + "'");
}

namespace {

void require_positive(const std::string& id, double w, const char* what) {
    if (!(w > 0.0) || !std::isfinite(w)) {
        std::ostringstream msg;
        msg << what << " for '" << id << "' must be positive, got " << w;
        throw CompositionError(msg.str());
    }
}

} // namespace

std::map<std::string, int> rank(const WeightMap& weights) {
    std::vector<std::pair<std::string, double>> order(weights.begin(), weights.end());
    // map iteration is already id-ascending, so a stable sort keeps the tie rule
    std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
    std::map<std::string, int> out;
    int r = 0;
    for (const auto& [id, w] : order) out.emplace(id, ++r);
    return out;
}

WeightMap normalize(const WeightMap& weights) {
    double total = 0;
    for (const auto& [id, w] : weights) {
        if (!(w > 0.0) || !std::isfinite(w)) {
            std::ostringstream msg;
            msg << "cannot normalize: weight for '" << id << "' is not positive (" << w << ")";
            throw ArgumentError(msg.str());
        }
        total += w;
    }
    WeightMap out;
    for (const auto& [id, w] : weights) out.emplace(id, w / total);
    return out;
}

GlobalRanking compose_global(const WeightMap& category_weights, const std::map<std::string, WeightMap>& local_weights) {
    GlobalRanking out;
    WeightMap global;
    for (const auto& [category, locals] : local_weights) {
        for (const auto& [leaf, local] : locals) {
            auto it = category_weights.find(category);
            if (it == category_weights.end())
                throw CompositionError("no weight for category '" + category + "' of leaf '" + leaf + "'");
            require_positive(category, it->second, "category weight");
            require_positive(leaf, local, "local weight");
            if (global.count(leaf)) throw CompositionError("leaf '" + leaf + "' appears under two categories");
            GlobalRow row{leaf, category, it->second, local, it->second * local, 0};
            global.emplace(leaf, row.global_weight);
            out.rows.push_back(std::move(row));
        }
    }
    const auto ranks = rank(global);
    for (auto& row : out.rows) row.rank = ranks.at(row.leaf);
    std::sort(out.rows.begin(), out.rows.end(), [](const GlobalRow& a, const GlobalRow& b) { return a.rank < b.rank; });
    return out;
}

GlobalRanking compose_hierarchy(const Hierarchy& h, const std::map<std::string, WeightMap>& block_weights) {
    if (h.root.is_leaf()) throw CompositionError("hierarchy root '" + h.root.id + "' has no children");

    WeightMap category_weights;
    std::map<std::string, WeightMap> local_weights;

    std::function<void(const Node&, double)> descend = [&](const Node& node, double weight) {
        WeightMap locals;
        if (node.children.size() == 1) {
            locals.emplace(node.children.front().id, 1.0);
        } else {
            auto it = block_weights.find(node.id);
            if (it == block_weights.end()) throw CompositionError("no block weights for node '" + node.id + "'");
            for (const auto& c : node.children) {
                auto w = it->second.find(c.id);
                if (w == it->second.end())
                    throw CompositionError("block '" + node.id + "' has no weight for child '" + c.id + "'");
                locals.emplace(c.id, w->second);
            }
        }
        bool has_leaf = false;
        for (const auto& c : node.children) {
            if (c.is_leaf()) {
                has_leaf = true;
                local_weights[node.id].emplace(c.id, locals.at(c.id));
            } else {
                descend(c, weight * locals.at(c.id));
            }
        }
        if (has_leaf) category_weights.emplace(node.id, weight);
    };
    descend(h.root, 1.0);
    return compose_global(category_weights, local_weights);
}

} // namespace fahp

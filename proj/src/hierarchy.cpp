#include "fuzzyahp/hierarchy.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "fuzzyahp/error.hpp"

namespace fahp {

int ComparisonMatrix::index_of(const std::string& id) const {
    auto it = std::find(items.begin(), items.end(), id);
    return it == items.end() ? -1 : static_cast<int>(it - items.begin());
}

namespace {

std::string pair_name(const ComparisonJudgment& j) { return "(" + j.row + ", " + j.col + ")"; }

void check_matrix(const ComparisonMatrix& m, const std::set<std::string>* all_ids) {
    const std::string where = "matrix '" + m.parent + "'";
    if (m.items.size() < 2) throw ValidationError(where + " must compare at least 2 items");

    std::set<std::string> items;
    for (const auto& id : m.items)
        if (!items.insert(id).second) throw ValidationError(where + " lists item '" + id + "' twice");

    const std::size_t n = m.items.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };

    std::set<std::pair<std::string, std::string>> pairs;
    for (const auto& j : m.judgments) {
        for (const auto* id : {&j.row, &j.col}) {
            if (!items.count(*id)) {
                if (all_ids && all_ids->count(*id))
                    throw ValidationError(where + ": judgment " + pair_name(j) + " references '" + *id +
                                          "', which is not a sibling under '" + m.parent + "'");
                throw ValidationError(where + ": judgment " + pair_name(j) + " references unknown item '" + *id + "'");
            }
        }
        if (j.row == j.col) throw ValidationError(where + ": judgment " + pair_name(j) + " compares an item with itself");
        auto key = std::minmax(j.row, j.col);
        if (!pairs.emplace(key.first, key.second).second)
            throw ValidationError(where + ": duplicated judgment for pair " + pair_name(j));
        parent[find(static_cast<std::size_t>(m.index_of(j.row)))] = find(static_cast<std::size_t>(m.index_of(j.col)));
    }

    for (std::size_t i = 1; i < n; ++i) {
        if (find(i) != find(0))
            throw ValidationError(where + ": judgment graph is disconnected ('" + m.items[i] +
                                  "' is not linked to '" + m.items[0] + "'); weights are under-determined");
    }
}

void walk(const Node& node, const std::function<void(const Node&)>& visit) {
    visit(node);
    for (const auto& c : node.children) walk(c, visit);
}

} // namespace

void validate_matrix(const ComparisonMatrix& m) { check_matrix(m, nullptr); }

Hierarchy validate(Hierarchy h) {
    std::set<std::string> ids;
    std::map<std::string, const Node*> internal;
    walk(h.root, [&](const Node& node) {
        if (node.id.empty()) throw ValidationError("node with empty id (label '" + node.label + "')");
        if (!ids.insert(node.id).second) throw ValidationError("duplicate node id '" + node.id + "'");
        if (node.children.size() >= 2) internal.emplace(node.id, &node);
    });

    for (const auto& [key, m] : h.matrices) {
        if (m.parent != key)
            throw ValidationError("matrix stored under '" + key + "' declares parent '" + m.parent + "'");
        auto it = internal.find(key);
        if (it == internal.end()) {
            if (!ids.count(key)) throw ValidationError("matrix attached to unknown node '" + key + "'");
            throw ValidationError("matrix attached to node '" + key + "', which has fewer than 2 children");
        }
        std::set<std::string> children;
        for (const auto& c : it->second->children) children.insert(c.id);
        std::set<std::string> listed(m.items.begin(), m.items.end());
        if (listed != children || m.items.size() != children.size())
            throw ValidationError("matrix '" + key + "' must list exactly the children of node '" + key + "'");
        check_matrix(m, &ids);
    }

    for (const auto& [id, node] : internal)
        if (!h.matrices.count(id)) throw ValidationError("internal node '" + id + "' has no comparison matrix");

    return h;
}

std::vector<const Node*> internal_nodes(const Node& root) {
    std::vector<const Node*> out;
    walk(root, [&](const Node& n) {
        if (!n.is_leaf()) out.push_back(&n);
    });
    return out;
}

std::vector<const Node*> leaves(const Node& root) {
    std::vector<const Node*> out;
    walk(root, [&](const Node& n) {
        if (n.is_leaf()) out.push_back(&n);
    });
    return out;
}

} // namespace fahp

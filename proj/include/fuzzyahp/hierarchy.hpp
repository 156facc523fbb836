#pragma once

#include <map>
#include <string>
#include <vector>

#include "fuzzyahp/fuzzy.hpp"

namespace fahp {

struct Node {
    std::string id;
    std::string label;
    std::vector<Node> children;

    bool is_leaf() const { return children.empty(); }
};

/// Fuzzy estimate of w[row] / w[col].
struct ComparisonJudgment {
    std::string row;
    std::string col;
    TriangularFuzzyNumber value;
};

/// Judgments over the children of one internal node.
struct ComparisonMatrix {
    std::string parent;
    std::vector<std::string> items;
    std::vector<ComparisonJudgment> judgments;

    /// Index of an item id in `items`, or -1.
    int index_of(const std::string& id) const;
};

/// Root node plus one comparison matrix per internal node with >= 2 children,
/// keyed by the internal node id.
struct Hierarchy {
    Node root;
    std::map<std::string, ComparisonMatrix> matrices;
};

/// Checks a single matrix in isolation: n >= 2, unique items, judgments only
/// between distinct listed items, at most one judgment per unordered pair,
/// connected judgment graph. Throws ValidationError.
void validate_matrix(const ComparisonMatrix& m);

/// Checks the whole hierarchy and returns it unchanged (judgment orientation is
/// preserved as given). Throws ValidationError identifying the node or pair.
Hierarchy validate(Hierarchy h);

/// Nodes with at least one child, in depth-first pre-order.
std::vector<const Node*> internal_nodes(const Node& root);

/// Leaves in depth-first pre-order.
std::vector<const Node*> leaves(const Node& root);

/// The bundled supply-chain 4.0 study: 3 categories, 10 challenges, 4 matrices.
Hierarchy paper_study();

} // namespace fahp

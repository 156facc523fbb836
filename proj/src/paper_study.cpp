#include "fuzzyahp/hierarchy.hpp"
#include "fuzzyahp/paper_reference.hpp"

namespace fahp {

namespace {

ComparisonMatrix block(std::string parent, std::vector<std::string> items, std::vector<ComparisonJudgment> js) {
    return {std::move(parent), std::move(items), std::move(js)};
}

} // namespace

Hierarchy paper_study() {
    Hierarchy h;
    h.root = Node{"SC4", "Supply chain 4.0 implementation challenges", {
        Node{"W1", "Technical challenges", {
            {"W11", "System complexity", {}},
            {"W12", "Analytical challenges and high computational load", {}},
            {"W13", "Security and privacy", {}},
            {"W14", "Connectivity challenges", {}},
        }},
        Node{"W2", "Environmental, financial and cultural challenges", {
            {"W21", "Environmental risks", {}},
            {"W22", "Energy management", {}},
            {"W23", "Investment cost", {}},
            {"W24", "Lack of trust", {}},
        }},
        Node{"W3", "Technological challenges", {
            {"W31", "Lack of knowledge and skills", {}},
            {"W32", "Lack of adequate infrastructure", {}},
        }},
    }};

    // Lower-triangular entries: row over column.
    h.matrices.emplace("SC4", block("SC4", {"W1", "W2", "W3"}, {
        {"W2", "W1", {2.1, 2.7, 3.8}},
        {"W3", "W1", {1.5, 1.75, 2.5}},
        {"W3", "W2", {3.1, 3.95, 5.12}},
    }));
    h.matrices.emplace("W1", block("W1", {"W11", "W12", "W13", "W14"}, {
        {"W12", "W11", {3.1, 4.2, 5.1}},
        {"W13", "W11", {2.1, 2.8, 4.7}},
        {"W13", "W12", {2.3, 3.1, 4.2}},
        {"W14", "W11", {3.1, 3.5, 5.4}},
        {"W14", "W12", {3.1, 3.5, 4.5}},
        {"W14", "W13", {2.1, 2.45, 3.21}},
    }));
    h.matrices.emplace("W2", block("W2", {"W21", "W22", "W23", "W24"}, {
        {"W22", "W21", {2.5, 3.5, 4.2}},
        {"W23", "W21", {2.8, 3.1, 3.9}},
        {"W23", "W22", {2.25, 3.4, 4.9}},
        {"W24", "W21", {3.1, 3.25, 3.9}},
        {"W24", "W22", {2.35, 3.41, 4.25}},
        {"W24", "W23", {1.25, 2.47, 4.31}},
    }));
    h.matrices.emplace("W3", block("W3", {"W31", "W32"}, {
        {"W32", "W31", {2.5, 3.47, 4.25}},
    }));
    return validate(std::move(h));
}

const PaperReference& paper_reference() {
    static const PaperReference ref{
        {
            {"SC4", {{"W1", 0.373887}, {"W2", 0.281210}, {"W3", 0.347111}}},
            {"W1", {{"W11", 0.258811}, {"W12", 0.165998}, {"W13", 0.387849}, {"W14", 0.194306}}},
            {"W2", {{"W21", 0.271194}, {"W22", 0.209380}, {"W23", 0.268777}, {"W24", 0.256814}}},
            {"W3", {{"W31", 0.363775}, {"W32", 0.636225}}},
        },
        {{"SC4", 0.4374}, {"W1", 0.3214}, {"W2", 0.2541}, {"W3", 0.4251}},
        {
            {"W11", 0.096766}, {"W12", 0.062065}, {"W13", 0.145012}, {"W14", 0.072648}, {"W21", 0.076263},
            {"W22", 0.05888}, {"W23", 0.075583}, {"W24", 0.072219}, {"W31", 0.12627}, {"W32", 0.220841},
        },
        {
            {"W11", 4}, {"W12", 9}, {"W13", 2}, {"W14", 7}, {"W21", 5},
            {"W22", 10}, {"W23", 6}, {"W24", 8}, {"W31", 3}, {"W32", 1},
        },
    };
    return ref;
}

} // namespace fahp

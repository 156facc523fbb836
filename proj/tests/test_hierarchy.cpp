#include <string>

#include "doctest.h"
#include "fuzzyahp/error.hpp"
#include "fuzzyahp/hierarchy.hpp"

using namespace fahp;

namespace {

Hierarchy small() {
    Hierarchy h;
    h.root = Node{"G", "goal", {
        Node{"A", "a", {{"A1", "", {}}, {"A2", "", {}}}},
        Node{"B", "b", {{"B1", "", {}}, {"B2", "", {}}, {"B3", "", {}}}},
    }};
    h.matrices.emplace("G", ComparisonMatrix{"G", {"A", "B"}, {{"B", "A", {1, 2, 3}}}});
    h.matrices.emplace("A", ComparisonMatrix{"A", {"A1", "A2"}, {{"A2", "A1", {2, 3, 4}}}});
    h.matrices.emplace("B", ComparisonMatrix{"B", {"B1", "B2", "B3"},
                                             {{"B2", "B1", {1, 2, 3}}, {"B3", "B2", {1, 1, 2}}}});
    return h;
}

std::string validation_message(Hierarchy h) {
    try {
        validate(std::move(h));
    } catch (const ValidationError& e) {
        return e.what();
    }
    return "";
}

} // namespace

TEST_CASE("bundled study is valid and complete") {
    const Hierarchy h = paper_study();
    CHECK(leaves(h.root).size() == 10);
    CHECK(h.matrices.size() == 4);
    CHECK(internal_nodes(h.root).size() == 4);
    CHECK(h.matrices.at("SC4").judgments.size() == 3);
    CHECK(h.matrices.at("W1").judgments.size() == 6);
    CHECK(h.matrices.at("W2").judgments.size() == 6);
    const auto& tech = h.matrices.at("W3").judgments;
    REQUIRE(tech.size() == 1);
    CHECK(tech[0].row == "W32");
    CHECK(tech[0].col == "W31");
    CHECK(tech[0].value == Tfn(2.5, 3.47, 4.25));
    CHECK(h.matrices.at("SC4").judgments[2].value == Tfn(3.1, 3.95, 5.12));
    CHECK(h.matrices.at("W2").judgments[5].value == Tfn(1.25, 2.47, 4.31));
}

TEST_CASE("validate is idempotent and preserves orientation") {
    const Hierarchy once = validate(small());
    const Hierarchy twice = validate(once);
    CHECK(twice.matrices.at("G").judgments[0].row == "B");
    CHECK(twice.matrices.at("G").judgments[0].col == "A");
    CHECK(twice.matrices.at("B").judgments.size() == once.matrices.at("B").judgments.size());
    CHECK_NOTHROW(validate(paper_study()));
}

TEST_CASE("incomplete but connected matrices are accepted") { CHECK_NOTHROW(validate(small())); }

TEST_CASE("duplicate node id") {
    Hierarchy h = small();
    h.root.children[1].children[2].id = "A1";
    CHECK(validation_message(h).find("duplicate node id 'A1'") != std::string::npos);
}

TEST_CASE("two items without judgments are disconnected") {
    Hierarchy h = small();
    h.matrices.at("A").judgments.clear();
    CHECK(validation_message(h).find("disconnected") != std::string::npos);
    CHECK_THROWS_AS(validate_matrix(ComparisonMatrix{"X", {"a", "b"}, {}}), ValidationError);
}

TEST_CASE("disconnected three-item block names the unlinked item") {
    Hierarchy h = small();
    h.matrices.at("B").judgments.pop_back();
    const auto msg = validation_message(h);
    CHECK(msg.find("disconnected") != std::string::npos);
    CHECK(msg.find("'B3'") != std::string::npos);
}

TEST_CASE("judgment crossing categories") {
    Hierarchy h = small();
    h.matrices.at("A").judgments.push_back({"A1", "B1", {1, 2, 3}});
    const auto msg = validation_message(h);
    CHECK(msg.find("not a sibling") != std::string::npos);
    CHECK(msg.find("(A1, B1)") != std::string::npos);
}

TEST_CASE("dangling judgment reference") {
    Hierarchy h = small();
    h.matrices.at("A").judgments.push_back({"A1", "Z9", {1, 2, 3}});
    CHECK(validation_message(h).find("unknown item 'Z9'") != std::string::npos);
}

TEST_CASE("duplicated pair in either orientation") {
    Hierarchy h = small();
    h.matrices.at("A").judgments.push_back({"A1", "A2", {1, 2, 3}});
    const auto msg = validation_message(h);
    CHECK(msg.find("duplicated judgment") != std::string::npos);
    CHECK(msg.find("(A1, A2)") != std::string::npos);
}

TEST_CASE("self comparison") {
    Hierarchy h = small();
    h.matrices.at("A").judgments.push_back({"A1", "A1", {1, 1, 1}});
    CHECK(validation_message(h).find("with itself") != std::string::npos);
}

TEST_CASE("missing matrix for an internal node") {
    Hierarchy h = small();
    h.matrices.erase("B");
    CHECK(validation_message(h).find("internal node 'B' has no comparison matrix") != std::string::npos);
}

TEST_CASE("matrix on a leaf, an unknown node, or with the wrong item list") {
    Hierarchy h = small();
    h.matrices.emplace("A1", ComparisonMatrix{"A1", {"x", "y"}, {{"x", "y", {1, 2, 3}}}});
    CHECK(validation_message(h).find("fewer than 2 children") != std::string::npos);

    h = small();
    h.matrices.emplace("Q", ComparisonMatrix{"Q", {"x", "y"}, {{"x", "y", {1, 2, 3}}}});
    CHECK(validation_message(h).find("unknown node 'Q'") != std::string::npos);

    h = small();
    h.matrices.at("B").items.pop_back();
    CHECK(validation_message(h).find("exactly the children") != std::string::npos);
}

TEST_CASE("single-child nodes need no matrix") {
    Hierarchy h;
    h.root = Node{"G", "", {Node{"A", "", {{"A1", "", {}}}}, Node{"B", "", {}}}};
    h.matrices.emplace("G", ComparisonMatrix{"G", {"A", "B"}, {{"A", "B", {1, 1, 1}}}});
    CHECK_NOTHROW(validate(h));
}

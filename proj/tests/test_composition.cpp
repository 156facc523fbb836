#include <cmath>
#include <numeric>

#include "doctest.h"
#include "fuzzyahp/composition.hpp"
#include "fuzzyahp/error.hpp"
#include "fuzzyahp/paper_reference.hpp"

using namespace fahp;

namespace {

// published block weights, recomposed through compose_global
GlobalRanking published_ranking() {
    const auto& ref = paper_reference();
    WeightMap categories;
    std::map<std::string, WeightMap> locals;
    for (const auto& [block, items] : ref.block_weights) {
        WeightMap w(items.begin(), items.end());
        if (block == "SC4")
            categories = w;
        else
            locals[block] = w;
    }
    return compose_global(categories, locals);
}

} // namespace

TEST_CASE("published global weights are the category-local products") {
    const auto g = published_ranking();
    const auto& ref = paper_reference();
    REQUIRE(g.rows.size() == 10);
    for (const auto& row : g.rows) {
        CHECK(row.global_weight == doctest::Approx(row.category_weight * row.local_weight).epsilon(1e-15));
        CHECK(std::abs(row.global_weight - ref.global_weight.at(row.leaf)) <= 5e-6);
        CHECK(row.rank == ref.global_rank.at(row.leaf));
    }
    CHECK(g.row("W13").global_weight == doctest::Approx(0.145012).epsilon(1e-5));
    CHECK(g.row("W32").rank == 1);
    CHECK(g.row("W32").global_weight == doctest::Approx(0.220841).epsilon(1e-5));
    CHECK(g.rows.front().leaf == "W32");
    CHECK(g.rows.back().leaf == "W22");
    CHECK(g.row("W21").category == "W2");
}

TEST_CASE("global weights are not renormalized") {
    const auto g = published_ranking();
    double total = 0;
    for (const auto& row : g.rows) total += row.global_weight;
    CHECK(total == doctest::Approx(1.006547).epsilon(1e-5));

    WeightMap globals;
    for (const auto& row : g.rows) globals[row.leaf] = row.global_weight;
    const auto norm = normalize(globals);
    double sum = 0;
    for (const auto& [id, w] : norm) sum += w;
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-15));
    // normalizing does not change the order
    CHECK(rank(norm) == rank(globals));
}

TEST_CASE("rank ties go to the smaller id") {
    const auto r = rank({{"b", 0.3}, {"a", 0.3}, {"c", 0.4}});
    CHECK(r.at("c") == 1);
    CHECK(r.at("a") == 2);
    CHECK(r.at("b") == 3);
}

TEST_CASE("normalize validation and idempotence") {
    const WeightMap w{{"a", 2}, {"b", 3}, {"c", 5}};
    const auto once = normalize(w);
    CHECK(once.at("a") == doctest::Approx(0.2));
    const auto twice = normalize(once);
    for (const auto& [id, v] : once) CHECK(twice.at(id) == doctest::Approx(v).epsilon(1e-15));
    CHECK_THROWS_AS(normalize({{"a", 0.0}, {"b", 1.0}}), ArgumentError);
    CHECK_THROWS_AS(normalize({{"a", -1.0}}), ArgumentError);
}

TEST_CASE("scaling category weights scales globals and keeps ranks") {
    const WeightMap cats{{"A", 0.6}, {"B", 0.4}};
    const std::map<std::string, WeightMap> locals{{"A", {{"a1", 0.7}, {"a2", 0.3}}}, {"B", {{"b1", 0.5}, {"b2", 0.5}}}};
    const auto g = compose_global(cats, locals);
    const auto g2 = compose_global({{"A", 1.2}, {"B", 0.8}}, locals);
    for (const auto& row : g.rows) {
        CHECK(g2.row(row.leaf).global_weight == doctest::Approx(2 * row.global_weight));
        CHECK(g2.row(row.leaf).rank == row.rank);
    }
    CHECK(g.row("a1").rank == 1);
    CHECK(g.row("b1").rank == 2);
    CHECK(g.row("b2").rank == 3);
}

TEST_CASE("compose_global errors") {
    const std::map<std::string, WeightMap> locals{{"A", {{"a1", 1.0}}}};
    CHECK_THROWS_AS(compose_global({}, locals), CompositionError);
    CHECK_THROWS_AS(compose_global({{"A", 0.0}}, locals), CompositionError);
    CHECK_THROWS_AS(compose_global({{"A", 0.5}, {"B", 0.5}},
                                   {{"A", {{"x", 1.0}}}, {"B", {{"x", 1.0}}}}),
                    CompositionError);
}

TEST_CASE("compose_hierarchy multiplies along the path") {
    Hierarchy h;
    h.root = {"G", "goal", {
        {"A", "a", {{"A1", "", {}}, {"A2", "", {}}}},
        {"B", "b", {{"B1", "", {{"B11", "", {}}, {"B12", "", {}}}}}},
    }};
    const std::map<std::string, WeightMap> blocks{
        {"G", {{"A", 0.25}, {"B", 0.75}}},
        {"A", {{"A1", 0.6}, {"A2", 0.4}}},
        {"B1", {{"B11", 0.1}, {"B12", 0.9}}},
    };
    const auto g = compose_hierarchy(h, blocks);
    REQUIRE(g.rows.size() == 4);
    CHECK(g.row("B12").global_weight == doctest::Approx(0.75 * 0.9));
    CHECK(g.row("B12").category == "B1");
    CHECK(g.row("B12").category_weight == doctest::Approx(0.75));
    CHECK(g.row("A1").global_weight == doctest::Approx(0.15));
    CHECK(g.row("B12").rank == 1);
    double total = 0;
    for (const auto& row : g.rows) total += row.global_weight;
    CHECK(total == doctest::Approx(1.0));
}

TEST_CASE("compose_hierarchy on the bundled study matches compose_global") {
    const auto& ref = paper_reference();
    std::map<std::string, WeightMap> blocks;
    for (const auto& [block, items] : ref.block_weights) blocks[block] = WeightMap(items.begin(), items.end());
    const auto g = compose_hierarchy(paper_study(), blocks);
    const auto p = published_ranking();
    for (const auto& row : p.rows) {
        CHECK(g.row(row.leaf).global_weight == doctest::Approx(row.global_weight).epsilon(1e-15));
        CHECK(g.row(row.leaf).rank == row.rank);
    }
}

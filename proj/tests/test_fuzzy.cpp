#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "doctest.h"
#include "fuzzyahp/error.hpp"
#include "fuzzyahp/fuzzy.hpp"

using namespace fahp;

namespace {

Tfn random_tfn(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> mode(0.2, 7.0), spread(0.05, 2.0);
    const double m = mode(rng);
    const double l = m * std::exp(-spread(rng) * 0.5);
    return {l, m, m + spread(rng)};
}

} // namespace

TEST_CASE("triangular fuzzy number invariants") {
    CHECK_NOTHROW(Tfn(1, 1, 1));
    CHECK_NOTHROW(Tfn(0.5, 2, 2));
    CHECK_THROWS_AS(Tfn(0, 1, 2), ArgumentError);
    CHECK_THROWS_AS(Tfn(2, 1, 3), ArgumentError);
    CHECK_THROWS_AS(Tfn(1, 3, 2), ArgumentError);
    CHECK_THROWS_AS(Tfn(1, 2, std::numeric_limits<double>::infinity()), ArgumentError);
    CHECK(Tfn(2, 2, 2).is_crisp());
    CHECK_FALSE(Tfn(2, 2, 3).is_crisp());
}

TEST_CASE("default linguistic scale") {
    CHECK(scale_lookup("very low") == Tfn(1, 2, 3));
    CHECK(scale_lookup("low") == Tfn(2, 3, 4));
    CHECK(scale_lookup("medium") == Tfn(3, 4, 5));
    CHECK(scale_lookup("high") == Tfn(4, 5, 6));
    CHECK(scale_lookup("very high") == Tfn(5, 6, 7));
    CHECK(default_scale().entries().size() == 5);
}

TEST_CASE("unknown term names the term and the valid ones") {
    try {
        scale_lookup("extreme");
        FAIL("expected LookupError");
    } catch (const LookupError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("'extreme'") != std::string::npos);
        CHECK(msg.find("'very high'") != std::string::npos);
        CHECK(msg.find("'medium'") != std::string::npos);
    }
}

TEST_CASE("custom scales reject duplicate terms and non-increasing modes") {
    CHECK_THROWS_AS(LinguisticScale({{"a", {1, 2, 3}}, {"a", {2, 3, 4}}}), ArgumentError);
    CHECK_THROWS_AS(LinguisticScale({{"a", {1, 2, 3}}, {"b", {1, 2, 3}}}), ArgumentError);
    LinguisticScale custom({{"equal", {1, 1, 1}}, {"more", {1, 3, 5}}});
    CHECK(scale_lookup("more", custom) == Tfn(1, 3, 5));
}

TEST_CASE("membership examples") {
    const Tfn j(2, 3, 4);
    CHECK(membership(j, 3) == 1.0);
    CHECK(membership(j, 2.5) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(membership(j, 5) == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(membership(j, 1) == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK_THROWS_AS(membership(j, 0), DomainError);
    CHECK_THROWS_AS(membership(j, -1), DomainError);
}

TEST_CASE("crisp and half-crisp judgments") {
    const double inf = std::numeric_limits<double>::infinity();
    CHECK(membership(Tfn(2, 2, 2), 2) == 1.0);
    CHECK(membership(Tfn(2, 2, 2), 2.0001) == -inf);
    CHECK(membership(Tfn(2, 2, 2), 1.9999) == -inf);
    CHECK(membership(Tfn(2, 2, 3), 1.5) == -inf);
    CHECK(membership(Tfn(2, 2, 3), 2.5) == doctest::Approx(0.5));
}

TEST_CASE("membership properties on random judgments") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        const Tfn j = random_tfn(rng);
        CHECK(membership(j, j.mode()) == 1.0);
        CHECK(membership(j, j.lower()) == doctest::Approx(0.0).epsilon(1e-12).scale(1.0));
        CHECK(membership(j, j.upper()) == doctest::Approx(0.0).epsilon(1e-12).scale(1.0));

        // increasing up to the mode, decreasing after
        double prev = -std::numeric_limits<double>::infinity();
        for (int k = 1; k <= 20; ++k) {
            const double r = k == 20 ? j.mode() : j.mode() * k / 20.0;
            const double mu = membership(j, r);
            CHECK(mu >= prev);
            prev = mu;
        }
        for (int k = 0; k <= 20; ++k) {
            const double r = j.mode() + k * 0.25;
            const double mu = membership(j, r);
            CHECK(mu <= prev);
            prev = mu;
        }
    }
}

TEST_CASE("reciprocal") {
    const Tfn r = reciprocal(Tfn(2, 3, 4));
    CHECK(r.lower() == doctest::Approx(0.25));
    CHECK(r.mode() == doctest::Approx(1.0 / 3.0));
    CHECK(r.upper() == doctest::Approx(0.5));
    CHECK(reciprocal(Tfn(1, 1, 1)) == Tfn(1, 1, 1));

    const Tfn twice = reciprocal(reciprocal(Tfn(2.5, 3.47, 4.25)));
    CHECK(twice.lower() == doctest::Approx(2.5).epsilon(1e-14));
    CHECK(twice.mode() == doctest::Approx(3.47).epsilon(1e-14));
    CHECK(twice.upper() == doctest::Approx(4.25).epsilon(1e-14));

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const Tfn j = random_tfn(rng);
        const Tfn back = reciprocal(reciprocal(j));
        CHECK(std::abs(back.lower() - j.lower()) <= 1e-12 * j.lower());
        CHECK(std::abs(back.mode() - j.mode()) <= 1e-12 * j.mode());
        CHECK(std::abs(back.upper() - j.upper()) <= 1e-12 * j.upper());
    }
}

TEST_CASE("aggregate judgments") {
    std::vector<Tfn> same{{2, 3, 4}, {2, 3, 4}};
    Tfn g = aggregate_judgments(same);
    CHECK(g.lower() == doctest::Approx(2).epsilon(1e-12));
    CHECK(g.mode() == doctest::Approx(3).epsilon(1e-12));
    CHECK(g.upper() == doctest::Approx(4).epsilon(1e-12));

    std::vector<Tfn> pair{{1, 2, 3}, {4, 8, 12}};
    g = aggregate_judgments(pair);
    CHECK(g.lower() == doctest::Approx(2).epsilon(1e-12));
    CHECK(g.mode() == doctest::Approx(4).epsilon(1e-12));
    CHECK(g.upper() == doctest::Approx(6).epsilon(1e-12));

    std::vector<Tfn> crisp{{1, 1, 1}, {4, 4, 4}};
    g = aggregate_judgments(crisp);
    CHECK(g.lower() == doctest::Approx(2).epsilon(1e-12));
    CHECK(g.upper() == doctest::Approx(2).epsilon(1e-12));

    g = aggregate_judgments(pair, AggregationMethod::Arithmetic);
    CHECK(g.lower() == doctest::Approx(2.5));
    CHECK(g.mode() == doctest::Approx(5));
    CHECK(g.upper() == doctest::Approx(7.5));

    CHECK_THROWS_AS(aggregate_judgments(std::vector<Tfn>{}), ArgumentError);
}

TEST_CASE("aggregation of copies is idempotent and the mode stays within input modes") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> count(1, 30);
    for (int trial = 0; trial < 200; ++trial) {
        const Tfn j = random_tfn(rng);
        std::vector<Tfn> copies(static_cast<std::size_t>(count(rng)), j);
        const Tfn g = aggregate_judgments(copies);
        CHECK(std::abs(g.lower() - j.lower()) <= 1e-12 * std::max(1.0, j.lower()));
        CHECK(std::abs(g.mode() - j.mode()) <= 1e-12 * std::max(1.0, j.mode()));
        CHECK(std::abs(g.upper() - j.upper()) <= 1e-12 * std::max(1.0, j.upper()));

        std::vector<Tfn> mixed;
        double lo = 1e9, hi = 0;
        for (int k = 0; k < 5; ++k) {
            mixed.push_back(random_tfn(rng));
            lo = std::min(lo, mixed.back().mode());
            hi = std::max(hi, mixed.back().mode());
        }
        for (auto method : {AggregationMethod::Geometric, AggregationMethod::Arithmetic}) {
            const Tfn a = aggregate_judgments(mixed, method);
            CHECK(a.mode() >= lo * (1 - 1e-12));
            CHECK(a.mode() <= hi * (1 + 1e-12));
        }
    }
}

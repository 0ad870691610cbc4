#include <catch2/catch_amalgamated.hpp>

#include "conley/morse_model.hpp"
#include "conley/scenarios.hpp"
#include "support.hpp"

using conley::BasisLabel;
using conley::BettiVector;
using conley::ComponentRef;
using conley::MorseDecomposition;

namespace {

MorseDecomposition two_level_pair() {
    MorseDecomposition d;
    d.sets.push_back({"low", 0, {{"x", BettiVector{{0, 1}}}, {"y", BettiVector{{0, 1}}}}});
    d.sets.push_back({"high", 1, {{"z", BettiVector{{1, 1}}}}});
    return d;
}

}  // namespace

TEST_CASE("bundled scenarios validate") {
    CHECK(validate(conley::delay_scenario().decomposition).ok);
    for (int n = 0; n <= 8; ++n) {
        CHECK(validate(conley::chafee_infante(n, true).decomposition).ok);
        CHECK(validate(conley::chafee_infante(n, false).decomposition).ok);
    }
}

TEST_CASE("validation diagnostics name each violation") {
    SECTION("duplicate level") {
        MorseDecomposition d = two_level_pair();
        d.sets[1].level = 0;
        conley::MorseValidation v = validate(d);
        CHECK_FALSE(v.ok);
        CHECK_THAT(v.problems.front(), Catch::Matchers::ContainsSubstring("strictly increasing"));
    }
    SECTION("duplicate set id") {
        MorseDecomposition d = two_level_pair();
        d.sets[1].id = "low";
        CHECK_FALSE(validate(d).ok);
    }
    SECTION("empty set") {
        MorseDecomposition d = two_level_pair();
        d.sets[1].components.clear();
        CHECK_FALSE(validate(d).ok);
    }
    SECTION("duplicate component id") {
        MorseDecomposition d = two_level_pair();
        d.sets[0].components[1].id = "x";
        CHECK_FALSE(validate(d).ok);
    }
    SECTION("symmetry pair across levels is rejected") {
        MorseDecomposition d = two_level_pair();
        d.symmetry_pairs.push_back({ComponentRef{0, 0}, ComponentRef{1, 0}});
        conley::MorseValidation v = validate(d);
        CHECK_FALSE(v.ok);
        CHECK_THAT(v.problems.front(), Catch::Matchers::ContainsSubstring("different levels"));
    }
    SECTION("component may appear in one pair only") {
        MorseDecomposition d = two_level_pair();
        d.sets[0].components.push_back({"w", BettiVector{{0, 1}}});
        d.symmetry_pairs.push_back({ComponentRef{0, 0}, ComponentRef{0, 1}});
        d.symmetry_pairs.push_back({ComponentRef{0, 0}, ComponentRef{0, 2}});
        CHECK_FALSE(validate(d).ok);
    }
    SECTION("paired components need matching index homology") {
        MorseDecomposition d = two_level_pair();
        d.sets[0].components[1].betti = BettiVector{{0, 2}};
        d.symmetry_pairs.push_back({ComponentRef{0, 0}, ComponentRef{0, 1}});
        CHECK_FALSE(validate(d).ok);
    }
    SECTION("self-pairing is rejected") {
        MorseDecomposition d = two_level_pair();
        d.symmetry_pairs.push_back({ComponentRef{0, 0}, ComponentRef{0, 0}});
        CHECK_FALSE(validate(d).ok);
    }
    SECTION("valid input passes with no problems") {
        conley::MorseValidation v = validate(two_level_pair());
        CHECK(v.ok);
        CHECK(v.problems.empty());
    }
}

TEST_CASE("total space of the delay decomposition lists degrees 0 through 4") {
    MorseDecomposition d = conley::delay_scenario().decomposition;
    std::vector<BasisLabel> labels = total_space(d);
    REQUIRE(labels.size() == 5);
    for (int i = 0; i < 5; ++i) CHECK(labels[i].degree == i);
    CHECK(labels[0].set == 0);
    CHECK(labels[2].set == 1);
    CHECK(labels[4].set == 2);
}

TEST_CASE("total space of the n=1 cascade groups paired components") {
    MorseDecomposition d = conley::chafee_infante(1).decomposition;
    std::vector<BasisLabel> labels = total_space(d);
    REQUIRE(labels.size() == 5);
    // Two coordinates at degree 0, two at degree 1, one at degree 2.
    CHECK(labels[0].degree == 0);
    CHECK(labels[1].degree == 0);
    CHECK(labels[2].degree == 1);
    CHECK(labels[3].degree == 1);
    CHECK(labels[4].degree == 2);
    CHECK(labels[0].comp == 0);
    CHECK(labels[1].comp == 1);
}

TEST_CASE("a single Morse set with a one-dimensional index gives one label") {
    MorseDecomposition d;
    d.sets.push_back({"only", 0, {{"c", BettiVector{{0, 1}}}}});
    std::vector<BasisLabel> labels = total_space(d);
    REQUIRE(labels.size() == 1);
    CHECK(labels[0] == BasisLabel{0, 0, 0, 0});
}

TEST_CASE("total space size matches the summed index dimensions") {
    auto rng = testsupport::make_rng(0x70a1);
    for (int trial = 0; trial < 40; ++trial) {
        MorseDecomposition d = testsupport::random_decomposition(rng);
        int expected = 0;
        for (const auto& set : d.sets)
            for (const auto& comp : set.components) expected += comp.betti.total_dim();
        CHECK(static_cast<int>(total_space(d).size()) == expected);
    }
}

TEST_CASE("interval subspaces slice the labeling") {
    MorseDecomposition d = conley::delay_scenario().decomposition;

    CHECK(interval_subspace(d, {0, 2}) == total_space(d));

    std::vector<BasisLabel> upper = interval_subspace(d, {1, 2});
    REQUIRE(upper.size() == 3);
    CHECK(upper[0].degree == 2);
    CHECK(upper[1].degree == 3);
    CHECK(upper[2].degree == 4);

    std::vector<BasisLabel> bottom = interval_subspace(d, {0, 0});
    REQUIRE(bottom.size() == 2);
    CHECK(bottom[0].set == 0);

    CHECK_THROWS_AS(interval_subspace(d, {2, 1}), std::out_of_range);
    CHECK_THROWS_AS(interval_subspace(d, {0, 3}), std::out_of_range);
}

TEST_CASE("prefix and suffix intervals partition the labeling") {
    auto rng = testsupport::make_rng(0x9a17);
    for (int trial = 0; trial < 30; ++trial) {
        MorseDecomposition d = testsupport::random_decomposition(rng);
        int nsets = static_cast<int>(d.sets.size());
        for (int cut = 0; cut + 1 < nsets; ++cut) {
            auto prefix = interval_subspace(d, {0, cut});
            auto suffix = interval_subspace(d, {cut + 1, nsets - 1});
            std::vector<BasisLabel> joined = prefix;
            joined.insert(joined.end(), suffix.begin(), suffix.end());
            CHECK(joined == total_space(d));
        }
    }
}

TEST_CASE("component display names") {
    MorseDecomposition d = conley::chafee_infante(0).decomposition;
    CHECK(component_name(d, {0, 0}) == "M0.+");
    CHECK(component_name(d, {0, 1}) == "M0.-");
    CHECK(component_name(d, {1, 0}) == "MN");
}

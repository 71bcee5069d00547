#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "storyarc/evalkit.hpp"

using namespace storyarc;

TEST_CASE("accuracy basics") {
    CHECK(accuracy({"a", "b", "c"}, {"a", "b", "c"}) == doctest::Approx(1.0));
    CHECK(accuracy({"a", "b"}, {"x", "y"}) == doctest::Approx(0.0));
    // 143 of 200 matches -> 0.715
    std::vector<std::string> pred(200, "x"), gold(200, "x");
    for (int i = 143; i < 200; ++i) gold[i] = "y";
    CHECK(accuracy(pred, gold) == doctest::Approx(0.715));
}

TEST_CASE("accuracy rejects mismatched or empty inputs") {
    CHECK_THROWS_AS(accuracy({"a"}, {"a", "b"}), EvalError);
    CHECK_THROWS_AS(accuracy({}, {}), EvalError);
}

TEST_CASE("accuracy is permutation-equivariant") {
    std::vector<std::string> pred = {"a", "b", "a", "c", "b", "c"};
    std::vector<std::string> gold = {"a", "a", "a", "c", "c", "b"};
    double base = accuracy(pred, gold);
    std::vector<size_t> idx = {5, 3, 0, 4, 2, 1};
    std::vector<std::string> p2, g2;
    for (size_t i : idx) {
        p2.push_back(pred[i]);
        g2.push_back(gold[i]);
    }
    CHECK(accuracy(p2, g2) == doctest::Approx(base));
}

TEST_CASE("fleiss kappa is 1 for unanimous raters across categories") {
    // 2 items, 3 raters, unanimous opposite categories
    KappaResult r = fleiss_kappa(std::vector<std::vector<int>>{{3, 0}, {0, 3}});
    CHECK_FALSE(r.degenerate);
    CHECK(r.kappa == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("fleiss kappa hand-computed counter-example") {
    // P = 1/3, Pe = 1/2 -> kappa = -1/3
    KappaResult r = fleiss_kappa(std::vector<std::vector<int>>{{2, 1}, {1, 2}});
    CHECK_FALSE(r.degenerate);
    CHECK(std::abs(r.kappa - (-1.0 / 3.0)) < 1e-12);
}

TEST_CASE("fleiss kappa degenerate single-category input is signalled") {
    KappaResult r = fleiss_kappa(std::vector<std::vector<int>>{{3, 0}});
    CHECK(r.degenerate);
    CHECK(r.kappa == doctest::Approx(1.0));
}

TEST_CASE("fleiss kappa rejects ragged input") {
    CHECK_THROWS_AS(fleiss_kappa(std::vector<std::vector<int>>{{3, 0}, {2, 2}}), EvalError);
    CHECK_THROWS_AS(fleiss_kappa(std::vector<std::vector<int>>{{1}, {1}}), EvalError);  // 1 rater
}

TEST_CASE("fleiss kappa is invariant under category relabeling") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> cat(0, 3);
    for (int trial = 0; trial < 50; ++trial) {
        // 8 items, 5 raters, 4 categories
        std::vector<std::vector<int>> counts(8, std::vector<int>(4, 0));
        for (auto& row : counts)
            for (int r = 0; r < 5; ++r) row[cat(rng)]++;
        KappaResult base = fleiss_kappa(counts);

        std::vector<int> perm = {0, 1, 2, 3};
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<std::vector<int>> relabeled(8, std::vector<int>(4, 0));
        for (size_t i = 0; i < counts.size(); ++i)
            for (int c = 0; c < 4; ++c) relabeled[i][perm[c]] = counts[i][c];
        KappaResult permuted = fleiss_kappa(relabeled);
        CHECK(permuted.degenerate == base.degenerate);
        CHECK(permuted.kappa == doctest::Approx(base.kappa).epsilon(1e-12));
    }
}

TEST_CASE("rater responses load from CSV and build the count matrix") {
    std::istringstream in(
        "item_id,rater_id,answer\n"
        "i1,r1,yes\n"
        "i1,r2,yes\n"
        "i1,r3,no\n"
        "i2,r1,no\n"
        "i2,r2,no\n"
        "i2,r3,no\n");
    RaterResponses resp = RaterResponses::load_csv(in);
    auto counts = resp.count_matrix();
    REQUIRE(counts.size() == 2);
    CHECK(counts[0] == std::vector<int>{2, 1});
    CHECK(counts[1] == std::vector<int>{0, 3});
}

TEST_CASE("rater responses reject unequal rater counts and duplicates") {
    std::istringstream ragged(
        "i1,r1,yes\n"
        "i1,r2,yes\n"
        "i2,r1,no\n");
    CHECK_THROWS_AS(RaterResponses::load_csv(ragged), EvalError);
    std::istringstream dup(
        "i1,r1,yes\n"
        "i1,r1,no\n");
    CHECK_THROWS_AS(RaterResponses::load_csv(dup), EvalError);
}

TEST_CASE("label_shifts applies the dead band") {
    std::vector<std::pair<int, double>> series = {{0, 0.0}, {1, 0.5}, {2, 0.49}, {3, 0.1}};
    auto labels = label_shifts(series, 0.05);
    REQUIRE(labels.size() == 3);
    CHECK(labels[0].label == Shift::positive);
    CHECK(labels[0].event_id == 1);
    CHECK(labels[1].label == Shift::neutral);  // |delta| = 0.01 < 0.05
    CHECK(labels[2].label == Shift::negative);
}

TEST_CASE("constant series is all neutral; steep monotone all positive") {
    std::vector<std::pair<int, double>> flat = {{0, 1.0}, {1, 1.0}, {2, 1.0}};
    for (const auto& l : label_shifts(flat, 0.01)) CHECK(l.label == Shift::neutral);
    std::vector<std::pair<int, double>> up = {{0, 0.0}, {1, 1.0}, {2, 2.0}};
    for (const auto& l : label_shifts(up, 0.01)) CHECK(l.label == Shift::positive);
}

TEST_CASE("dead_band_from_range") {
    CHECK(dead_band_from_range({0.0, 10.0, 5.0}, 0.02) == doctest::Approx(0.2));
    CHECK(dead_band_from_range({3.0, 3.0}, 0.02) == doctest::Approx(0.0));
}

TEST_CASE("shift confusion identity and row normalization") {
    std::vector<ShiftLabel> labels = {{1, Shift::positive}, {2, Shift::neutral},
                                      {3, Shift::negative}, {4, Shift::positive}};
    auto table = shift_confusion(labels, labels);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(table[i][j] == doctest::Approx(i == j ? 1.0 : 0.0));
}

TEST_CASE("shift confusion hand-computed toy alignment") {
    // 10 aligned shifts; rows = system, cols = gold
    std::vector<ShiftLabel> system = {
        {0, Shift::positive}, {1, Shift::positive}, {2, Shift::positive}, {3, Shift::positive},
        {4, Shift::neutral},  {5, Shift::neutral},  {6, Shift::negative}, {7, Shift::negative},
        {8, Shift::negative}, {9, Shift::negative}};
    std::vector<ShiftLabel> gold = {
        {0, Shift::positive}, {1, Shift::positive}, {2, Shift::neutral},  {3, Shift::negative},
        {4, Shift::neutral},  {5, Shift::positive}, {6, Shift::negative}, {7, Shift::negative},
        {8, Shift::negative}, {9, Shift::positive}};
    auto table = shift_confusion(system, gold);
    CHECK(table[0][0] == doctest::Approx(0.50));  // system positive: 2/4 gold positive
    CHECK(table[0][1] == doctest::Approx(0.25));
    CHECK(table[0][2] == doctest::Approx(0.25));
    CHECK(table[1][0] == doctest::Approx(0.50));  // system neutral: 1 pos, 1 neu
    CHECK(table[1][1] == doctest::Approx(0.50));
    CHECK(table[2][0] == doctest::Approx(0.25));  // system negative: 1 pos, 3 neg
    CHECK(table[2][2] == doctest::Approx(0.75));
    // nonempty rows sum to 1
    for (int i = 0; i < 3; ++i) {
        double sum = table[i][0] + table[i][1] + table[i][2];
        CHECK(std::abs(sum - 1.0) < 1e-12);
    }
}

TEST_CASE("shift confusion rejects misaligned event ids") {
    std::vector<ShiftLabel> a = {{1, Shift::positive}};
    std::vector<ShiftLabel> b = {{2, Shift::positive}};
    CHECK_THROWS_AS(shift_confusion(a, b), EvalError);
}

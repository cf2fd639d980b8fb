#include <catch2/catch_amalgamated.hpp>

#include <hookcal/prufer.hpp>

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

using namespace hookcal;

TEST_CASE("decode: smallest-leaf-first traces") {
    CHECK(prufer_decode({2, {}}) == LabeledTree{2, {{1, 2}}});
    CHECK(prufer_decode({3, {2}}) == LabeledTree{3, {{1, 2}, {2, 3}}});
    // a repeated symbol forces the star
    CHECK(prufer_decode({4, {1, 1}}) ==
          LabeledTree{4, {{1, 2}, {1, 3}, {1, 4}}});

    CHECK_THROWS_WITH(prufer_decode({3, {4}}),
                      Catch::Matchers::ContainsSubstring("symbol"));
    CHECK_THROWS_AS(prufer_decode({3, {0}}), std::invalid_argument);
    CHECK_THROWS_AS(prufer_decode({3, {1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(prufer_decode({1, {}}), std::invalid_argument);
}

TEST_CASE("encode: inverse traces") {
    CHECK(prufer_encode(LabeledTree{2, {{1, 2}}}) == PruferSequence{2, {}});
    CHECK(prufer_encode(LabeledTree{3, {{1, 2}, {2, 3}}}) ==
          PruferSequence{3, {2}});
    CHECK(prufer_encode(LabeledTree{4, {{1, 2}, {1, 3}, {1, 4}}}) ==
          PruferSequence{4, {1, 1}});

    // malformed trees are rejected structurally
    CHECK_THROWS_AS(prufer_encode(LabeledTree{4, {{1, 2}, {2, 3}, {1, 3}}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(prufer_encode(LabeledTree{3, {{1, 2}}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(prufer_encode(LabeledTree{1, {}}), std::invalid_argument);
}

TEST_CASE("exhaustive roundtrip in both directions up to n = 7") {
    for (int n = 2; n <= 7; ++n) {
        // every sequence decodes to a tree that encodes back to it
        std::uint64_t count = 0;
        std::vector<int> symbols(static_cast<std::size_t>(n) - 2, 1);
        for (;;) {
            const PruferSequence seq{n, symbols};
            const LabeledTree tree = prufer_decode(seq);
            REQUIRE(prufer_encode(tree) == seq);
            ++count;
            int pos = static_cast<int>(symbols.size()) - 1;
            while (pos >= 0 && symbols[static_cast<std::size_t>(pos)] == n) {
                symbols[static_cast<std::size_t>(pos)] = 1;
                --pos;
            }
            if (pos < 0) break;
            ++symbols[static_cast<std::size_t>(pos)];
        }
        CHECK(BigInt(count) == labeled_tree_count(n));

        // every enumerated tree decodes back from its own code
        enumerate_labeled_trees(n, [&](const LabeledTree& t) {
            REQUIRE(prufer_decode(prufer_encode(t)) == t);
        });
    }
}

TEST_CASE("enumeration counts match Cayley's formula") {
    for (int n : {1, 2, 3, 4, 5, 6, 7}) {
        std::uint64_t count = 0;
        enumerate_labeled_trees(n, [&](const LabeledTree& t) {
            CHECK(t.n == n);
            ++count;
        });
        CHECK(BigInt(count) == labeled_tree_count(n));
    }
}

TEST_CASE("enumeration is duplicate-free and lexicographic") {
    std::set<std::string> seen;
    std::uint64_t count = 0;
    std::vector<LabeledTree> order;
    enumerate_labeled_trees(4, [&](const LabeledTree& t) {
        seen.insert(to_string(t));
        order.push_back(t);
        ++count;
    });
    CHECK(count == 16);
    CHECK(seen.size() == 16);
    // first sequence (1,1) is the star at 1; last (4,4) is the star at 4
    CHECK(order.front() == LabeledTree{4, {{1, 2}, {1, 3}, {1, 4}}});
    CHECK(order.back() == LabeledTree{4, {{1, 4}, {2, 4}, {3, 4}}});
}

TEST_CASE("enumeration refuses past the cap, naming n^(n-2)") {
    CHECK_THROWS_WITH(
        enumerate_labeled_trees(12, [](const LabeledTree&) {}),
        Catch::Matchers::ContainsSubstring("12^10"));
    CHECK_THROWS_AS(enumerate_labeled_trees(7, [](const LabeledTree&) {}, 100),
                    CapacityError);
    CHECK_THROWS_AS(enumerate_labeled_trees(0, [](const LabeledTree&) {}),
                    std::invalid_argument);
}

TEST_CASE("random larger codes roundtrip") {
    std::mt19937_64 rng(20240811);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 8 + static_cast<int>(rng() % 40);
        PruferSequence seq;
        seq.n = n;
        for (int i = 0; i < n - 2; ++i) {
            seq.symbols.push_back(1 + static_cast<int>(rng() % n));
        }
        const LabeledTree tree = prufer_decode(seq);
        CHECK_NOTHROW(validate(tree));
        CHECK(prufer_encode(tree) == seq);
    }
}

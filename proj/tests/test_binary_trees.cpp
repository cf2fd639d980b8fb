#include <catch2/catch_amalgamated.hpp>

#include <hookcal/binary_trees.hpp>
#include <hookcal/sequences.hpp>

#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

using namespace hookcal;

namespace {

BinaryTreeShape left_path(int n) {
    BinaryTreeShape t;
    for (int i = 0; i < n; ++i) {
        t = BinaryTreeShape::branch(t, BinaryTreeShape{});
    }
    return t;
}

// Structure-derived leaf count, independent of hook bookkeeping.
int leaf_count(const BinaryTreeShape& t) {
    if (t.is_empty()) return 0;
    if (t.left().is_empty() && t.right().is_empty()) return 1;
    return leaf_count(t.left()) + leaf_count(t.right());
}

// Walks the shape and checks h(v) = 1 + h(left) + h(right) at every vertex,
// reading children's hooks out of the preorder vector. Returns the subtree
// size derived purely from the structure.
int check_hook_recursion(const BinaryTreeShape& s, const HookVector& hooks,
                         int index, bool& ok) {
    if (s.is_empty()) return 0;
    const int left_size =
        check_hook_recursion(s.left(), hooks, index + 1, ok);
    const int right_size =
        check_hook_recursion(s.right(), hooks, index + 1 + left_size, ok);
    const int left_hook =
        left_size > 0 ? hooks[static_cast<std::size_t>(index + 1)] : 0;
    const int right_hook =
        right_size > 0 ? hooks[static_cast<std::size_t>(index + 1 + left_size)]
                       : 0;
    ok = ok && hooks[static_cast<std::size_t>(index)] ==
                   1 + left_hook + right_hook;
    ok = ok && left_hook == left_size && right_hook == right_size;
    return 1 + left_size + right_size;
}

}  // namespace

TEST_CASE("shape construction and size") {
    const BinaryTreeShape empty;
    CHECK(empty.is_empty());
    CHECK(empty.size() == 0);

    const auto single = BinaryTreeShape::leaf();
    CHECK(single.size() == 1);
    CHECK(single.left().is_empty());
    CHECK(single.right().is_empty());

    const auto lonly = BinaryTreeShape::branch(single, {});
    const auto ronly = BinaryTreeShape::branch({}, single);
    CHECK(lonly.size() == 2);
    CHECK(ronly.size() == 2);
    CHECK(lonly != ronly);  // left and right children are distinguished
    CHECK(lonly == BinaryTreeShape::branch(BinaryTreeShape::leaf(), {}));
}

TEST_CASE("canonical serialization") {
    CHECK(to_string(BinaryTreeShape{}) == ".");
    CHECK(to_string(BinaryTreeShape::leaf()) == "(..)");
    CHECK(to_string(BinaryTreeShape::branch(BinaryTreeShape::leaf(), {})) ==
          "((..).)");
    CHECK(to_string(BinaryTreeShape::branch({}, BinaryTreeShape::leaf())) ==
          "(.(..))");

    SECTION("parse inverts serialization for every shape up to n = 8") {
        for (int n = 0; n <= 8; ++n) {
            enumerate_shapes(n, [&](const BinaryTreeShape& t) {
                CHECK(parse_shape(to_string(t)) == t);
            });
        }
    }

    SECTION("malformed inputs are rejected") {
        CHECK_THROWS_AS(parse_shape(""), std::invalid_argument);
        CHECK_THROWS_AS(parse_shape("("), std::invalid_argument);
        CHECK_THROWS_AS(parse_shape("(.."), std::invalid_argument);
        CHECK_THROWS_AS(parse_shape("(..))"), std::invalid_argument);
        CHECK_THROWS_AS(parse_shape("x"), std::invalid_argument);
        CHECK_THROWS_AS(parse_shape("(..)."), std::invalid_argument);
    }
}

TEST_CASE("enumeration order is the left-size split, k ascending") {
    CHECK(collect_shapes(0).size() == 1);
    CHECK(collect_shapes(0)[0].is_empty());

    std::vector<std::string> two;
    enumerate_shapes(2, [&](const BinaryTreeShape& t) {
        two.push_back(to_string(t));
    });
    // k = 0 (right-only) before k = 1 (left-only)
    CHECK(two == std::vector<std::string>{"(.(..))", "((..).)"});

    std::vector<std::string> three;
    enumerate_shapes(3, [&](const BinaryTreeShape& t) {
        three.push_back(to_string(t));
    });
    CHECK(three == std::vector<std::string>{"(.(.(..)))", "(.((..).))",
                                            "((..)(..))", "((.(..)).)",
                                            "(((..).).)"});
}

TEST_CASE("enumeration count equals the Catalan recurrence") {
    const auto cat = catalan_numbers(12);
    for (int n = 0; n <= 12; ++n) {
        std::uint64_t count = 0;
        enumerate_shapes(n, [&](const BinaryTreeShape&) { ++count; });
        CHECK(BigInt(count) == cat[static_cast<std::size_t>(n)]);
    }
}

TEST_CASE("enumeration is duplicate-free") {
    for (int n = 0; n <= 10; ++n) {
        std::unordered_set<std::string> seen;
        std::uint64_t count = 0;
        enumerate_shapes(n, [&](const BinaryTreeShape& t) {
            seen.insert(to_string(t));
            ++count;
        });
        CHECK(seen.size() == count);
    }
}

TEST_CASE("left-size slices concatenate to the full enumeration") {
    const int n = 6;
    std::vector<std::string> full;
    enumerate_shapes(n, [&](const BinaryTreeShape& t) {
        full.push_back(to_string(t));
    });
    std::vector<std::string> sliced;
    for (int k = 0; k <= n - 1; ++k) {
        enumerate_shapes_with_left_size(n, k, [&](const BinaryTreeShape& t) {
            sliced.push_back(to_string(t));
            CHECK(t.left().size() == k);
        });
    }
    CHECK(sliced == full);

    CHECK_THROWS_AS(enumerate_shapes_with_left_size(3, 3, [](const auto&) {}),
                    std::invalid_argument);
    CHECK_THROWS_AS(enumerate_shapes_with_left_size(3, -1, [](const auto&) {}),
                    std::invalid_argument);
    CHECK_THROWS_AS(enumerate_shapes(-1, [](const auto&) {}),
                    std::invalid_argument);
}

TEST_CASE("hook lengths") {
    CHECK(hook_lengths(BinaryTreeShape::leaf()) == HookVector{1});
    CHECK(hook_lengths(left_path(3)) == HookVector{3, 2, 1});

    const auto balanced = BinaryTreeShape::branch(BinaryTreeShape::leaf(),
                                                  BinaryTreeShape::leaf());
    CHECK(hook_lengths(balanced) == HookVector{3, 1, 1});

    CHECK_THROWS_AS(hook_lengths(BinaryTreeShape{}), std::invalid_argument);
}

TEST_CASE("hook invariants over every shape up to n = 8") {
    for (int n = 1; n <= 8; ++n) {
        enumerate_shapes(n, [&](const BinaryTreeShape& t) {
            const auto hooks = hook_lengths(t);
            REQUIRE(hooks.size() == static_cast<std::size_t>(n));
            CHECK(hooks[0] == n);  // the hook of the root is always n
            bool ok = true;
            const int derived = check_hook_recursion(t, hooks, 0, ok);
            CHECK(ok);
            CHECK(derived == n);
            int ones = 0;
            for (const int h : hooks) {
                CHECK(h >= 1);
                ones += h == 1 ? 1 : 0;
            }
            CHECK(ones == leaf_count(t));
        });
    }
}

TEST_CASE("hook weights match the hand-evaluated cases") {
    // n = 1: (1!/2) * (1 + 1/1) = 1
    CHECK(hook_weight(BinaryTreeShape::leaf(), WeightForm::unlabeled_eq1) ==
          Rational(1));
    // n = 2, either shape: (2!/4) * (3/2) * 2 = 3/2
    CHECK(hook_weight(left_path(2), WeightForm::unlabeled_eq1) ==
          make_rational(BigInt(3), BigInt(2)));
    CHECK(hook_weight(BinaryTreeShape::branch({}, BinaryTreeShape::leaf()),
                      WeightForm::unlabeled_eq1) ==
          make_rational(BigInt(3), BigInt(2)));
    // n = 3 left path, hooks {3,2,1}: (6/8) * (4/3)(3/2)(2) = 3
    CHECK(hook_weight(left_path(3), WeightForm::unlabeled_eq1) == Rational(3));

    CHECK_THROWS_AS(hook_weight(BinaryTreeShape{}, WeightForm::unlabeled_eq1),
                    std::invalid_argument);
}

TEST_CASE("rooted weight is (n+1) times the unlabeled weight") {
    for (int n = 1; n <= 8; ++n) {
        enumerate_shapes(n, [&](const BinaryTreeShape& t) {
            CHECK(hook_weight(t, WeightForm::rooted_eq2) ==
                  Rational(n + 1) * hook_weight(t, WeightForm::unlabeled_eq1));
        });
    }
}

TEST_CASE("hook products stay exact past the 64-bit fast path") {
    // A 25-vertex path exercises the big-integer fallback: the unlabeled
    // weight of a path on n vertices is n!/2^n * (n+1)!/n! = (n+1)!/2^n.
    const int n = 25;
    const auto path = left_path(n);
    CHECK(hook_weight(path, WeightForm::unlabeled_eq1) ==
          make_rational(factorial(static_cast<unsigned>(n) + 1),
                        pow2(static_cast<unsigned>(n))));
}

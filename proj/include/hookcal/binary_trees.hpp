#pragma once

// Binary tree shapes: left and right children are distinguished, so a node
// with only a left child and a node with only a right child are different
// shapes. There are Catalan(n) shapes with n vertices. Vertices are
// identified by preorder index (root = 0, then left subtree, then right).
//
// The hook length h(v) is the number of descendants of v including v
// itself, i.e. the size of the subtree rooted at v. The hook weight of a
// shape with n vertices is
//
//     n!/2^n * prod_v (1 + 1/h(v))        (unlabeled form)
//     (n+1)!/2^n * prod_v (1 + 1/h(v))    (rooted form)
//
// computed exactly as a Rational.

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hookcal/detail/function_ref.hpp"
#include "hookcal/rational.hpp"

namespace hookcal {

enum class WeightForm {
    unlabeled_eq1,  // n!/2^n * prod (1 + 1/h(v))
    rooted_eq2,     // (n+1)!/2^n * prod (1 + 1/h(v))
};

class BinaryTreeShape {
public:
    /// The empty shape (zero vertices).
    BinaryTreeShape() = default;

    static BinaryTreeShape leaf() {
        return branch(BinaryTreeShape{}, BinaryTreeShape{});
    }

    /// New shape whose root has the given subtrees. Children are shared,
    /// not copied, so composition is O(1).
    static BinaryTreeShape branch(BinaryTreeShape left, BinaryTreeShape right) {
        const int size = 1 + left.size() + right.size();
        return BinaryTreeShape(std::make_shared<const Node>(
            std::move(left.root_), std::move(right.root_), size));
    }

    bool is_empty() const { return root_ == nullptr; }

    int size() const { return root_ ? root_->size : 0; }

    /// Left subtree as a shape (empty shape if this is empty).
    BinaryTreeShape left() const {
        return root_ ? BinaryTreeShape(root_->left) : BinaryTreeShape{};
    }

    BinaryTreeShape right() const {
        return root_ ? BinaryTreeShape(root_->right) : BinaryTreeShape{};
    }

    friend bool operator==(const BinaryTreeShape& a, const BinaryTreeShape& b) {
        return equal_nodes(a.root_.get(), b.root_.get());
    }

    friend bool operator!=(const BinaryTreeShape& a, const BinaryTreeShape& b) {
        return !(a == b);
    }

private:
    struct Node {
        std::shared_ptr<const Node> left;
        std::shared_ptr<const Node> right;
        int size;

        Node(std::shared_ptr<const Node> l, std::shared_ptr<const Node> r,
             int sz)
            : left(std::move(l)), right(std::move(r)), size(sz) {}
    };

    explicit BinaryTreeShape(std::shared_ptr<const Node> root)
        : root_(std::move(root)) {}

    static bool equal_nodes(const Node* a, const Node* b) {
        if (a == b) return true;  // shared substructure
        if (!a || !b) return false;
        return a->size == b->size && equal_nodes(a->left.get(), b->left.get()) &&
               equal_nodes(a->right.get(), b->right.get());
    }

    std::shared_ptr<const Node> root_;

    friend std::vector<int> hook_lengths(const BinaryTreeShape&);
    friend Rational hook_weight(const BinaryTreeShape&, WeightForm);
    friend std::string to_string(const BinaryTreeShape&);
};

/// hooks[i] = h(v) for the vertex with preorder index i.
using HookVector = std::vector<int>;

namespace detail {

// Recomputes subtree sizes bottom-up instead of trusting the cached Node
// sizes, so hook_lengths is an independent route the tests can pit against
// BinaryTreeShape::size().
template <typename Node>
int hook_lengths_rec(const Node* node, HookVector& out) {
    const auto index = out.size();
    out.push_back(0);
    int size = 1;
    if (node->left) size += hook_lengths_rec(node->left.get(), out);
    if (node->right) size += hook_lengths_rec(node->right.get(), out);
    out[index] = size;
    return size;
}

// prod (1 + 1/h(v)) = prod (h(v)+1) / prod h(v), folded over cached sizes.
// For n <= 19 both products fit in 64 bits: prod (h(v)+1) <= (n+1)! because
// each split satisfies (k+1)!(n-k)! <= (n+1)!.
template <typename Node>
void hook_product_u64(const Node* node, std::uint64_t& num,
                      std::uint64_t& den) {
    num *= static_cast<std::uint64_t>(node->size) + 1;
    den *= static_cast<std::uint64_t>(node->size);
    if (node->left) hook_product_u64(node->left.get(), num, den);
    if (node->right) hook_product_u64(node->right.get(), num, den);
}

template <typename Node>
void hook_product_big(const Node* node, BigInt& num, BigInt& den) {
    num *= node->size + 1;
    den *= node->size;
    if (node->left) hook_product_big(node->left.get(), num, den);
    if (node->right) hook_product_big(node->right.get(), num, den);
}

}  // namespace detail

/// Hook lengths by preorder index; h(root) = size(t).
inline HookVector hook_lengths(const BinaryTreeShape& t) {
    if (t.is_empty()) {
        throw std::invalid_argument("hook_lengths: empty shape has no vertices");
    }
    HookVector hooks;
    hooks.reserve(static_cast<std::size_t>(t.size()));
    detail::hook_lengths_rec(t.root_.get(), hooks);
    return hooks;
}

inline Rational hook_weight(const BinaryTreeShape& t, WeightForm form) {
    if (t.is_empty()) {
        throw std::invalid_argument("hook_weight: empty shape");
    }
    const int n = t.size();
    BigInt num, den;
    if (n <= 19) {
        std::uint64_t num64 = 1, den64 = 1;
        detail::hook_product_u64(t.root_.get(), num64, den64);
        num = num64;
        den = den64;
    } else {
        num = 1;
        den = 1;
        detail::hook_product_big(t.root_.get(), num, den);
    }
    const unsigned fact_arg =
        form == WeightForm::unlabeled_eq1 ? static_cast<unsigned>(n)
                                          : static_cast<unsigned>(n) + 1;
    return make_rational(factorial(fact_arg) * num,
                         pow2(static_cast<unsigned>(n)) * den);
}

// --- canonical serialization -----------------------------------------------
//
// ser(Empty) = "."    ser(node) = "(" ser(left) ser(right) ")"
// A single vertex is "(..)". This is the interchange format for tree I/O.

namespace detail {

template <typename Node>
void serialize_shape(const Node* node, std::string& out) {
    if (!node) {
        out += '.';
        return;
    }
    out += '(';
    serialize_shape(node->left.get(), out);
    serialize_shape(node->right.get(), out);
    out += ')';
}

inline BinaryTreeShape parse_shape_rec(std::string_view s, std::size_t& pos) {
    if (pos >= s.size()) {
        throw std::invalid_argument("parse_shape: unexpected end of input");
    }
    if (s[pos] == '.') {
        ++pos;
        return BinaryTreeShape{};
    }
    if (s[pos] != '(') {
        throw std::invalid_argument(std::string("parse_shape: unexpected '") +
                                    s[pos] + "'");
    }
    ++pos;
    BinaryTreeShape left = parse_shape_rec(s, pos);
    BinaryTreeShape right = parse_shape_rec(s, pos);
    if (pos >= s.size() || s[pos] != ')') {
        throw std::invalid_argument("parse_shape: missing ')'");
    }
    ++pos;
    return BinaryTreeShape::branch(std::move(left), std::move(right));
}

}  // namespace detail

inline std::string to_string(const BinaryTreeShape& t) {
    std::string out;
    detail::serialize_shape(t.root_.get(), out);
    return out;
}

inline BinaryTreeShape parse_shape(std::string_view s) {
    std::size_t pos = 0;
    BinaryTreeShape t = detail::parse_shape_rec(s, pos);
    if (pos != s.size()) {
        throw std::invalid_argument("parse_shape: trailing input");
    }
    return t;
}

// --- exhaustive enumeration -------------------------------------------------
//
// Deterministic order: shapes of size n are produced by an outer loop over
// the left-subtree size k = 0..n-1 ascending; for each k the left subtree
// varies in the outer position and the right subtree in the inner, both
// recursively in this same order. Shapes are yielded one at a time; nothing
// proportional to Catalan(n) is ever materialized for the target n. Shapes
// of size <= kShapeMemoMaxSize are cached once (a few thousand objects) so
// the inner loops do not re-derive them.

namespace detail {

using ShapeSink = FunctionRef<void(const BinaryTreeShape&)>;

inline constexpr int kShapeMemoMaxSize = 9;  // Catalan(9) = 4862 shapes cached

inline const std::vector<std::vector<BinaryTreeShape>>& shape_memo() {
    static const auto table = [] {
        std::vector<std::vector<BinaryTreeShape>> t(kShapeMemoMaxSize + 1);
        t[0] = {BinaryTreeShape{}};
        for (int m = 1; m <= kShapeMemoMaxSize; ++m) {
            for (int k = 0; k < m; ++k) {
                for (const auto& left : t[static_cast<std::size_t>(k)]) {
                    for (const auto& right :
                         t[static_cast<std::size_t>(m - 1 - k)]) {
                        t[static_cast<std::size_t>(m)].push_back(
                            BinaryTreeShape::branch(left, right));
                    }
                }
            }
        }
        return t;
    }();
    return table;
}

inline void enumerate_shapes_rec(int n, ShapeSink sink);

inline void enumerate_split_rec(int n, int k, ShapeSink sink) {
    auto on_left = [&](const BinaryTreeShape& left) {
        auto on_right = [&](const BinaryTreeShape& right) {
            sink(BinaryTreeShape::branch(left, right));
        };
        enumerate_shapes_rec(n - 1 - k, ShapeSink(on_right));
    };
    enumerate_shapes_rec(k, ShapeSink(on_left));
}

inline void enumerate_shapes_rec(int n, ShapeSink sink) {
    if (n <= kShapeMemoMaxSize) {
        for (const auto& s : shape_memo()[static_cast<std::size_t>(n)]) {
            sink(s);
        }
        return;
    }
    for (int k = 0; k < n; ++k) {
        enumerate_split_rec(n, k, sink);
    }
}

}  // namespace detail

/// Streams every binary tree shape with exactly n vertices exactly once,
/// in the deterministic order described above. n = 0 yields the single
/// empty shape.
template <typename Visitor>
void enumerate_shapes(int n, Visitor&& visit) {
    if (n < 0) {
        throw std::invalid_argument("enumerate_shapes: n must be >= 0");
    }
    detail::enumerate_shapes_rec(n, detail::ShapeSink(visit));
}

/// Streams the shapes of size n whose left subtree has exactly k vertices.
/// Concatenating k = 0..n-1 reproduces enumerate_shapes(n); the slices are
/// independent, which is what parallel verification partitions on.
template <typename Visitor>
void enumerate_shapes_with_left_size(int n, int k, Visitor&& visit) {
    if (n < 1 || k < 0 || k > n - 1) {
        throw std::invalid_argument(
            "enumerate_shapes_with_left_size: need n >= 1 and 0 <= k <= n-1");
    }
    detail::enumerate_split_rec(n, k, detail::ShapeSink(visit));
}

/// Materializes all shapes of size n. Small n only (tests, demos).
inline std::vector<BinaryTreeShape> collect_shapes(int n) {
    std::vector<BinaryTreeShape> out;
    enumerate_shapes(n, [&](const BinaryTreeShape& s) { out.push_back(s); });
    return out;
}

}  // namespace hookcal

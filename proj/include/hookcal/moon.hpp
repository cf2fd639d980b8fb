#pragma once

// Moon's edge-cut bijection. A labeled tree on {1..n+1} with a
// distinguished directed edge (u,w) decomposes into an ordered pair of
// rooted trees by deleting that edge: first the component containing the
// tail u (rooted at u), then the component containing the head w (rooted
// at w). Composing glues the roots back together and marks (root(a),
// root(b)). There are 2n * T_{n+1} marked trees, which is the counting
// content of
//
//   eq4:  2n T_{n+1} = sum_{k=0}^{n-1} C(n+1,k+1) (k+1) T_{k+1} (n-k) T_{n-k}
//   eq5:  R_{n+1} = (n+1)/(2n) sum_{k=0}^{n-1} C(n+1,k+1) R_{k+1} R_{n-k}
//
// with T_m = m^(m-2), R_m = m T_m = m^(m-1).

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hookcal/capacity.hpp"
#include "hookcal/labeled_trees.hpp"
#include "hookcal/prufer.hpp"
#include "hookcal/report.hpp"
#include "hookcal/sequences.hpp"

namespace hookcal {

/// Cuts the marked directed edge (u,w): returns (component of u rooted at
/// u, component of w rooted at w). The two vertex sets partition {1..n+1}.
inline std::pair<RootedLabeledTree, RootedLabeledTree> moon_decompose(
    const EdgeMarkedTree& marked) {
    validate(marked);  // rejects a marked edge that is not present
    const auto [u, w] = marked.marked;

    // Component labels by BFS from u over all edges except the marked one.
    const int n = marked.tree.n;
    std::vector<std::vector<int>> adjacency(static_cast<std::size_t>(n) + 1);
    for (const auto& [a, b] : marked.tree.edges) {
        if ((a == u && b == w) || (a == w && b == u)) {
            continue;
        }
        adjacency[static_cast<std::size_t>(a)].push_back(b);
        adjacency[static_cast<std::size_t>(b)].push_back(a);
    }
    std::vector<char> in_tail(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> queue{u};
    in_tail[static_cast<std::size_t>(u)] = 1;
    while (!queue.empty()) {
        const int v = queue.back();
        queue.pop_back();
        for (const int next : adjacency[static_cast<std::size_t>(v)]) {
            if (!in_tail[static_cast<std::size_t>(next)]) {
                in_tail[static_cast<std::size_t>(next)] = 1;
                queue.push_back(next);
            }
        }
    }

    RootedLabeledTree tail, head;
    tail.root = u;
    head.root = w;
    for (int v = 1; v <= n; ++v) {
        (in_tail[static_cast<std::size_t>(v)] ? tail : head)
            .vertices.push_back(v);
    }
    for (const auto& edge : marked.tree.edges) {
        if ((edge.first == u && edge.second == w) ||
            (edge.first == w && edge.second == u)) {
            continue;
        }
        (in_tail[static_cast<std::size_t>(edge.first)] ? tail : head)
            .edges.push_back(edge);
    }
    LabeledTree::normalize_edges(tail.edges);
    LabeledTree::normalize_edges(head.edges);
    return {std::move(tail), std::move(head)};
}

/// Inverse of moon_decompose: requires disjoint vertex sets whose union is
/// {1..m} for some m >= 2. The result is the tree with both edge sets plus
/// {root(a), root(b)}, marked (root(a), root(b)).
inline EdgeMarkedTree moon_compose(const RootedLabeledTree& a,
                                   const RootedLabeledTree& b) {
    validate(a);
    validate(b);
    std::vector<int> all;
    all.reserve(a.vertices.size() + b.vertices.size());
    all.insert(all.end(), a.vertices.begin(), a.vertices.end());
    all.insert(all.end(), b.vertices.begin(), b.vertices.end());
    std::sort(all.begin(), all.end());
    for (std::size_t i = 0; i < all.size(); ++i) {
        if (all[i] != static_cast<int>(i) + 1) {
            if (i > 0 && all[i] == all[i - 1]) {
                throw std::invalid_argument(
                    "moon_compose: vertex sets overlap at " +
                    std::to_string(all[i]));
            }
            throw std::invalid_argument(
                "moon_compose: vertex sets must partition {1..m}, missing " +
                std::to_string(i + 1));
        }
    }

    EdgeMarkedTree marked;
    marked.tree.n = static_cast<int>(all.size());
    marked.tree.edges = a.edges;
    marked.tree.edges.insert(marked.tree.edges.end(), b.edges.begin(),
                             b.edges.end());
    marked.tree.edges.emplace_back(std::min(a.root, b.root),
                                   std::max(a.root, b.root));
    LabeledTree::normalize_edges(marked.tree.edges);
    marked.marked = {a.root, b.root};
    validate(marked);
    return marked;
}

/// Streams every rooted tree on the given label set: all trees (via the
/// Pruefer codec relabeled onto the set) times all root choices.
template <typename Visitor>
void enumerate_rooted_trees_on(const std::vector<int>& labels,
                               Visitor&& visit) {
    std::vector<int> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.empty()) {
        throw std::invalid_argument(
            "enumerate_rooted_trees_on: empty label set");
    }
    const int s = static_cast<int>(sorted.size());
    enumerate_labeled_trees(s, [&](const LabeledTree& t) {
        RootedLabeledTree rooted;
        rooted.vertices = sorted;
        rooted.edges.reserve(t.edges.size());
        for (const auto& [u, w] : t.edges) {
            rooted.edges.emplace_back(
                sorted[static_cast<std::size_t>(u - 1)],
                sorted[static_cast<std::size_t>(w - 1)]);
        }
        LabeledTree::normalize_edges(rooted.edges);
        for (const int root : sorted) {
            rooted.root = root;
            visit(rooted);
        }
    });
}

/// Streams every ordered pair of rooted trees whose vertex sets partition
/// {1..m}, grouped by tail size 1..m-1 ascending.
template <typename Visitor>
void enumerate_rooted_pairs(int m, Visitor&& visit) {
    if (m < 2) {
        throw std::invalid_argument("enumerate_rooted_pairs: m must be >= 2");
    }
    for (int tail_size = 1; tail_size <= m - 1; ++tail_size) {
        for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
            if (static_cast<int>(std::popcount(mask)) != tail_size) {
                continue;
            }
            std::vector<int> tail_labels, head_labels;
            for (int v = 1; v <= m; ++v) {
                if (mask & (1u << (v - 1))) {
                    tail_labels.push_back(v);
                } else {
                    head_labels.push_back(v);
                }
            }
            enumerate_rooted_trees_on(
                tail_labels, [&](const RootedLabeledTree& tail) {
                    enumerate_rooted_trees_on(
                        head_labels, [&](const RootedLabeledTree& head) {
                            visit(tail, head);
                        });
                });
        }
    }
}

/// eq4 with both sides from closed forms, exact for any n.
inline VerificationReport verify_eq4_closed(int n) {
    if (n < 1) {
        throw std::invalid_argument("verify_eq4_closed: n must be >= 1");
    }
    const auto start = std::chrono::steady_clock::now();
    const BigInt lhs = BigInt(2 * n) * labeled_tree_count(n + 1);
    const auto row = pascal_row(n + 1);
    BigInt rhs = 0;
    for (int k = 0; k <= n - 1; ++k) {
        rhs += row[static_cast<std::size_t>(k + 1)] * (k + 1) *
               labeled_tree_count(k + 1) * (n - k) * labeled_tree_count(n - k);
    }
    return VerificationReport::make(
        IdentityId::eq4, n, Rational(lhs), Rational(rhs),
        "closed form 2n * T_(n+1)",
        "convolution sum with T_m = m^(m-2) closed forms", 0,
        detail::elapsed_ms_since(start));
}

/// eq4 with both sides counted exhaustively: the left side counts edge-
/// marked trees on {1..n+1}, the right side counts the composed pairs from
/// every label split. Refuses when 2n * T_{n+1} exceeds cap.
inline VerificationReport verify_eq4_exhaustive(
    int n, std::uint64_t cap = kDefaultEnumerationCap) {
    if (n < 1) {
        throw std::invalid_argument("verify_eq4_exhaustive: n must be >= 1");
    }
    const int m = n + 1;
    require_capacity(BigInt(2 * n) * labeled_tree_count(m), cap,
                     "2n * T_(n+1) with n = " + std::to_string(n));
    const auto start = std::chrono::steady_clock::now();

    std::uint64_t marked_count = 0;
    enumerate_labeled_trees(
        m, [&](const LabeledTree& tree) { marked_count += 2 * tree.edges.size(); },
        cap);

    std::uint64_t pair_count = 0;
    enumerate_rooted_pairs(
        m, [&](const RootedLabeledTree&, const RootedLabeledTree&) {
            ++pair_count;
        });

    return VerificationReport::make(
        IdentityId::eq4, n, Rational(BigInt(marked_count)),
        Rational(BigInt(pair_count)),
        "exhaustive count of edge-marked trees on {1..n+1}",
        "exhaustive count of ordered rooted pairs over all label splits",
        marked_count, detail::elapsed_ms_since(start));
}

/// True when the eq5 convolution term C(n+1,k+1) R_{k+1} R_{n-k} equals the
/// eq4 term C(n+1,k+1) (k+1)T_{k+1} (n-k)T_{n-k} for every k, i.e. eq5 is
/// exactly eq4 rescaled through R_m = m * T_m.
inline bool eq5_matches_eq4_rescaled(int n) {
    if (n < 1) {
        throw std::invalid_argument("eq5_matches_eq4_rescaled: n must be >= 1");
    }
    const auto row = pascal_row(n + 1);
    for (int k = 0; k <= n - 1; ++k) {
        const BigInt& c = row[static_cast<std::size_t>(k + 1)];
        const BigInt term5 =
            c * rooted_tree_count(k + 1) * rooted_tree_count(n - k);
        const BigInt term4 = c * (k + 1) * labeled_tree_count(k + 1) *
                             (n - k) * labeled_tree_count(n - k);
        if (term5 != term4) {
            return false;
        }
    }
    // The prefactors match too: R_{n+1} = (n+1) T_{n+1} and lhs4 = 2n T_{n+1}.
    return rooted_tree_count(n + 1) == BigInt(n + 1) * labeled_tree_count(n + 1);
}

/// eq5 with R_m = m^(m-1) closed forms and the exact rational prefactor
/// (n+1)/(2n); also cross-checked against eq4 rescaled by R_m = m * T_m.
inline VerificationReport verify_eq5(int n) {
    if (n < 1) {
        throw std::invalid_argument("verify_eq5: n must be >= 1");
    }
    const auto start = std::chrono::steady_clock::now();
    const auto row = pascal_row(n + 1);
    BigInt sum = 0;
    for (int k = 0; k <= n - 1; ++k) {
        sum += row[static_cast<std::size_t>(k + 1)] * rooted_tree_count(k + 1) *
               rooted_tree_count(n - k);
    }
    const Rational rhs =
        make_rational(BigInt(n + 1) * sum, BigInt(2 * n));
    if (!eq5_matches_eq4_rescaled(n)) {
        throw std::logic_error(
            "verify_eq5: rescaling mismatch against eq4 at n = " +
            std::to_string(n));
    }
    return VerificationReport::make(
        IdentityId::eq5, n, Rational(rooted_tree_count(n + 1)), rhs,
        "closed form R_(n+1) = (n+1)^n",
        "rational convolution with R_m = m^(m-1); cross-checked against eq4 "
        "rescaled by R_m = m * T_m",
        0, detail::elapsed_ms_since(start));
}

/// Exhaustive roundtrip of the bijection on {1..m}: every edge-marked tree
/// must survive decompose-then-compose, every ordered rooted pair must
/// survive compose-then-decompose, and the two object counts must agree
/// with 2(m-1) * T_m.
struct BijectionReport {
    int m = 0;
    std::uint64_t marked_count = 0;
    std::uint64_t pair_count = 0;
    BigInt expected_count;               // 2(m-1) * T_m
    std::uint64_t decompose_compose_failures = 0;
    std::uint64_t compose_decompose_failures = 0;
    bool verified = false;
    std::int64_t elapsed_ms = 0;
};

inline BijectionReport run_moon_roundtrip(
    int m, std::uint64_t cap = kDefaultEnumerationCap) {
    if (m < 2) {
        throw std::invalid_argument("run_moon_roundtrip: m must be >= 2");
    }
    BijectionReport report;
    report.m = m;
    report.expected_count = BigInt(2 * (m - 1)) * labeled_tree_count(m);
    require_capacity(report.expected_count, cap,
                     "2(m-1) * T_m with m = " + std::to_string(m));
    const auto start = std::chrono::steady_clock::now();

    enumerate_labeled_trees(
        m,
        [&](const LabeledTree& tree) {
            for (const auto& [u, w] : tree.edges) {
                for (const auto& mark : {std::pair{u, w}, std::pair{w, u}}) {
                    EdgeMarkedTree marked{tree, mark};
                    ++report.marked_count;
                    const auto [tail, head] = moon_decompose(marked);
                    if (!(moon_compose(tail, head) == marked)) {
                        ++report.decompose_compose_failures;
                    }
                }
            }
        },
        cap);

    enumerate_rooted_pairs(m, [&](const RootedLabeledTree& tail,
                                  const RootedLabeledTree& head) {
        ++report.pair_count;
        const auto marked = moon_compose(tail, head);
        const auto [tail2, head2] = moon_decompose(marked);
        if (!(tail2 == tail) || !(head2 == head)) {
            ++report.compose_decompose_failures;
        }
    });

    report.elapsed_ms = detail::elapsed_ms_since(start);
    report.verified = report.decompose_compose_failures == 0 &&
                      report.compose_decompose_failures == 0 &&
                      report.marked_count == report.pair_count &&
                      BigInt(report.marked_count) == report.expected_count;
    return report;
}

}  // namespace hookcal

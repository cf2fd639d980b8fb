#pragma once

// Pruefer codec, smallest-leaf-first convention: encoding repeatedly removes
// the smallest leaf and records its neighbor, stopping when two vertices
// remain. Every sequence of length n-2 over {1..n} decodes to a unique tree,
// which is the constructive witness for Cayley's count n^(n-2).

#include <algorithm>
#include <cstdint>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "hookcal/capacity.hpp"
#include "hookcal/labeled_trees.hpp"
#include "hookcal/sequences.hpp"

namespace hookcal {

struct PruferSequence {
    int n = 2;                 // decodes to a tree on {1..n}
    std::vector<int> symbols;  // length n-2, values in 1..n

    friend bool operator==(const PruferSequence& a, const PruferSequence& b) {
        return a.n == b.n && a.symbols == b.symbols;
    }
};

inline LabeledTree prufer_decode(const PruferSequence& seq) {
    const int n = seq.n;
    if (n < 2) {
        throw std::invalid_argument("prufer_decode: n must be >= 2");
    }
    if (seq.symbols.size() != static_cast<std::size_t>(n - 2)) {
        throw std::invalid_argument("prufer_decode: expected " +
                                    std::to_string(n - 2) + " symbols, got " +
                                    std::to_string(seq.symbols.size()));
    }
    for (const int s : seq.symbols) {
        if (s < 1 || s > n) {
            throw std::invalid_argument("prufer_decode: symbol " +
                                        std::to_string(s) +
                                        " outside 1.." + std::to_string(n));
        }
    }

    std::vector<int> degree(static_cast<std::size_t>(n) + 1, 1);
    for (const int s : seq.symbols) {
        ++degree[static_cast<std::size_t>(s)];
    }
    std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
    for (int v = 1; v <= n; ++v) {
        if (degree[static_cast<std::size_t>(v)] == 1) {
            leaves.push(v);
        }
    }

    LabeledTree tree;
    tree.n = n;
    tree.edges.reserve(static_cast<std::size_t>(n) - 1);
    for (const int s : seq.symbols) {
        const int leaf = leaves.top();
        leaves.pop();
        tree.edges.emplace_back(std::min(leaf, s), std::max(leaf, s));
        if (--degree[static_cast<std::size_t>(s)] == 1) {
            leaves.push(s);
        }
    }
    const int a = leaves.top();
    leaves.pop();
    const int b = leaves.top();
    tree.edges.emplace_back(std::min(a, b), std::max(a, b));
    LabeledTree::normalize_edges(tree.edges);
    return tree;
}

inline PruferSequence prufer_encode(const LabeledTree& t) {
    validate(t);  // malformed input (cycle, disconnection) is rejected here
    const int n = t.n;
    if (n < 2) {
        throw std::invalid_argument("prufer_encode: n must be >= 2");
    }

    std::vector<std::vector<int>> adjacency(static_cast<std::size_t>(n) + 1);
    for (const auto& [u, w] : t.edges) {
        adjacency[static_cast<std::size_t>(u)].push_back(w);
        adjacency[static_cast<std::size_t>(w)].push_back(u);
    }
    std::vector<int> degree(static_cast<std::size_t>(n) + 1, 0);
    std::vector<char> removed(static_cast<std::size_t>(n) + 1, 0);
    std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
    for (int v = 1; v <= n; ++v) {
        degree[static_cast<std::size_t>(v)] =
            static_cast<int>(adjacency[static_cast<std::size_t>(v)].size());
        if (degree[static_cast<std::size_t>(v)] == 1) {
            leaves.push(v);
        }
    }

    PruferSequence seq;
    seq.n = n;
    seq.symbols.reserve(static_cast<std::size_t>(n) - 2);
    for (int step = 0; step < n - 2; ++step) {
        const int leaf = leaves.top();
        leaves.pop();
        removed[static_cast<std::size_t>(leaf)] = 1;
        int neighbor = 0;
        for (const int cand : adjacency[static_cast<std::size_t>(leaf)]) {
            if (!removed[static_cast<std::size_t>(cand)]) {
                neighbor = cand;
                break;
            }
        }
        seq.symbols.push_back(neighbor);
        if (--degree[static_cast<std::size_t>(neighbor)] == 1) {
            leaves.push(neighbor);
        }
    }
    return seq;
}

/// Streams all n^(n-2) labeled trees on {1..n} exactly once by decoding
/// every Pruefer sequence in lexicographic order. n = 1 and n = 2 yield the
/// single tree. Refuses with a CapacityError naming n^(n-2) when the count
/// exceeds cap.
template <typename Visitor>
void enumerate_labeled_trees(int n, Visitor&& visit,
                             std::uint64_t cap = kDefaultEnumerationCap) {
    if (n < 1) {
        throw std::invalid_argument("enumerate_labeled_trees: n must be >= 1");
    }
    require_capacity(labeled_tree_count(n), cap,
                     std::to_string(n) + "^" + std::to_string(n - 2));
    if (n == 1) {
        const LabeledTree single{1, {}};
        visit(single);
        return;
    }
    PruferSequence seq;
    seq.n = n;
    seq.symbols.assign(static_cast<std::size_t>(n) - 2, 1);
    for (;;) {
        const LabeledTree tree = prufer_decode(seq);
        visit(tree);
        // lexicographic odometer over {1..n}^(n-2)
        int pos = static_cast<int>(seq.symbols.size()) - 1;
        while (pos >= 0 && seq.symbols[static_cast<std::size_t>(pos)] == n) {
            seq.symbols[static_cast<std::size_t>(pos)] = 1;
            --pos;
        }
        if (pos < 0) {
            return;
        }
        ++seq.symbols[static_cast<std::size_t>(pos)];
    }
}

}  // namespace hookcal

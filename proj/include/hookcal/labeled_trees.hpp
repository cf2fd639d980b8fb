#pragma once

// Labeled trees on {1..n} as edge lists, rooted labeled trees on arbitrary
// label sets, and labeled trees carrying one distinguished directed edge.
// Rooted trees allow non-contiguous label sets because cutting an edge of a
// tree on {1..n+1} splits the labels into two arbitrary subsets.
//
// Interchange formats (CLI and tests):
//   LabeledTree        "1-2,2-3"            sorted edges, small label first
//   EdgeMarkedTree     "1-2,2-3|1>2"        mark direction after '|'
//   RootedLabeledTree  "2-3|root=2"         root after '|'; a single
//                                           isolated root prints "|root=5"

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hookcal {

struct LabeledTree {
    int n = 0;                                // vertex set is {1..n}
    std::vector<std::pair<int, int>> edges;   // n-1 unordered pairs

    friend bool operator==(const LabeledTree& a, const LabeledTree& b) {
        auto ea = a.edges;
        auto eb = b.edges;
        normalize_edges(ea);
        normalize_edges(eb);
        return a.n == b.n && ea == eb;
    }

    static void normalize_edges(std::vector<std::pair<int, int>>& edges) {
        for (auto& [u, w] : edges) {
            if (u > w) std::swap(u, w);
        }
        std::sort(edges.begin(), edges.end());
    }
};

struct RootedLabeledTree {
    std::vector<int> vertices;                // sorted, unique, positive
    std::vector<std::pair<int, int>> edges;   // tree on `vertices`
    int root = 0;

    friend bool operator==(const RootedLabeledTree& a,
                           const RootedLabeledTree& b) {
        auto va = a.vertices;
        auto vb = b.vertices;
        std::sort(va.begin(), va.end());
        std::sort(vb.begin(), vb.end());
        auto ea = a.edges;
        auto eb = b.edges;
        LabeledTree::normalize_edges(ea);
        LabeledTree::normalize_edges(eb);
        return va == vb && ea == eb && a.root == b.root;
    }
};

struct EdgeMarkedTree {
    LabeledTree tree;
    std::pair<int, int> marked;  // directed: (u,w) and (w,u) are distinct

    friend bool operator==(const EdgeMarkedTree& a, const EdgeMarkedTree& b) {
        return a.tree == b.tree && a.marked == b.marked;
    }
};

namespace detail {

// Union-find on indices 0..n-1.
class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    /// False if x and y were already connected.
    bool unite(std::size_t x, std::size_t y) {
        const auto rx = find(x);
        const auto ry = find(y);
        if (rx == ry) return false;
        parent_[rx] = ry;
        return true;
    }

private:
    std::vector<std::size_t> parent_;
};

inline void check_tree_edges(const std::vector<std::pair<int, int>>& edges,
                             const std::vector<int>& vertices,
                             const std::string& what) {
    if (edges.size() + 1 != vertices.size()) {
        throw std::invalid_argument(what + ": a tree on " +
                                    std::to_string(vertices.size()) +
                                    " vertices needs exactly " +
                                    std::to_string(vertices.size() - 1) +
                                    " edges, got " +
                                    std::to_string(edges.size()));
    }
    DisjointSets dsu(vertices.size());
    auto index_of = [&](int label) {
        const auto it =
            std::lower_bound(vertices.begin(), vertices.end(), label);
        if (it == vertices.end() || *it != label) {
            throw std::invalid_argument(what + ": edge endpoint " +
                                        std::to_string(label) +
                                        " is not in the vertex set");
        }
        return static_cast<std::size_t>(it - vertices.begin());
    };
    for (const auto& [u, w] : edges) {
        if (u == w) {
            throw std::invalid_argument(what + ": self-loop at " +
                                        std::to_string(u));
        }
        if (!dsu.unite(index_of(u), index_of(w))) {
            throw std::invalid_argument(what + ": edges contain a cycle");
        }
    }
    // n-1 edges and no cycle imply connectivity.
}

}  // namespace detail

/// Throws std::invalid_argument unless t is a tree on {1..n}.
inline void validate(const LabeledTree& t) {
    if (t.n < 1) {
        throw std::invalid_argument("LabeledTree: n must be >= 1");
    }
    for (const auto& [u, w] : t.edges) {
        if (u < 1 || u > t.n || w < 1 || w > t.n) {
            throw std::invalid_argument(
                "LabeledTree: edge label outside 1..n");
        }
    }
    std::vector<int> vertices(static_cast<std::size_t>(t.n));
    std::iota(vertices.begin(), vertices.end(), 1);
    detail::check_tree_edges(t.edges, vertices, "LabeledTree");
}

inline bool is_valid_tree(const LabeledTree& t) noexcept {
    try {
        validate(t);
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

/// Throws std::invalid_argument unless t is a tree on its vertex set with
/// root a member.
inline void validate(const RootedLabeledTree& t) {
    if (t.vertices.empty()) {
        throw std::invalid_argument("RootedLabeledTree: empty vertex set");
    }
    auto vertices = t.vertices;
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) !=
        vertices.end()) {
        throw std::invalid_argument("RootedLabeledTree: duplicate vertex");
    }
    if (vertices.front() < 1) {
        throw std::invalid_argument("RootedLabeledTree: labels must be >= 1");
    }
    if (!std::binary_search(vertices.begin(), vertices.end(), t.root)) {
        throw std::invalid_argument(
            "RootedLabeledTree: root is not in the vertex set");
    }
    detail::check_tree_edges(t.edges, vertices, "RootedLabeledTree");
}

/// Throws std::invalid_argument unless the tree is valid and the marked
/// directed edge is an edge of the tree.
inline void validate(const EdgeMarkedTree& m) {
    validate(m.tree);
    const auto [u, w] = m.marked;
    const bool present = std::any_of(
        m.tree.edges.begin(), m.tree.edges.end(), [&](const auto& e) {
            return (e.first == u && e.second == w) ||
                   (e.first == w && e.second == u);
        });
    if (!present) {
        throw std::invalid_argument(
            "EdgeMarkedTree: marked edge " + std::to_string(u) + ">" +
            std::to_string(w) + " is not an edge of the tree");
    }
}

// --- interchange serialization ----------------------------------------------

inline std::string edge_list_string(std::vector<std::pair<int, int>> edges) {
    LabeledTree::normalize_edges(edges);
    std::string out;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(edges[i].first);
        out += '-';
        out += std::to_string(edges[i].second);
    }
    return out;
}

inline std::string to_string(const LabeledTree& t) {
    return edge_list_string(t.edges);
}

inline std::string to_string(const EdgeMarkedTree& m) {
    return edge_list_string(m.tree.edges) + "|" +
           std::to_string(m.marked.first) + ">" +
           std::to_string(m.marked.second);
}

inline std::string to_string(const RootedLabeledTree& t) {
    return edge_list_string(t.edges) + "|root=" + std::to_string(t.root);
}

namespace detail {

inline int parse_label(std::string_view text, const char* what) {
    if (text.empty() ||
        !std::all_of(text.begin(), text.end(),
                     [](char c) { return c >= '0' && c <= '9'; })) {
        throw std::invalid_argument(std::string(what) + ": bad label '" +
                                    std::string(text) + "'");
    }
    return std::stoi(std::string(text));
}

inline std::vector<std::pair<int, int>> parse_edge_list(std::string_view text,
                                                        const char* what) {
    std::vector<std::pair<int, int>> edges;
    if (text.empty()) {
        return edges;
    }
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        const auto item = text.substr(pos, comma - pos);
        const auto dash = item.find('-');
        if (dash == std::string_view::npos) {
            throw std::invalid_argument(std::string(what) +
                                        ": expected 'u-w', got '" +
                                        std::string(item) + "'");
        }
        edges.emplace_back(parse_label(item.substr(0, dash), what),
                           parse_label(item.substr(dash + 1), what));
        pos = comma + 1;
        if (comma == text.size()) break;
    }
    return edges;
}

}  // namespace detail

/// Parses "u-w,u-w,...". The vertex set is {1..max label}; the empty string
/// is the single-vertex tree on {1}.
inline LabeledTree parse_labeled_tree(std::string_view text) {
    LabeledTree t;
    t.edges = detail::parse_edge_list(text, "parse_labeled_tree");
    t.n = 1;
    for (const auto& [u, w] : t.edges) {
        t.n = std::max({t.n, u, w});
    }
    validate(t);
    return t;
}

inline EdgeMarkedTree parse_edge_marked_tree(std::string_view text) {
    const auto bar = text.find('|');
    if (bar == std::string_view::npos) {
        throw std::invalid_argument("parse_edge_marked_tree: missing '|u>w'");
    }
    const auto mark = text.substr(bar + 1);
    const auto gt = mark.find('>');
    if (gt == std::string_view::npos) {
        throw std::invalid_argument("parse_edge_marked_tree: missing '>'");
    }
    EdgeMarkedTree m;
    m.tree = parse_labeled_tree(text.substr(0, bar));
    m.marked = {
        detail::parse_label(mark.substr(0, gt), "parse_edge_marked_tree"),
        detail::parse_label(mark.substr(gt + 1), "parse_edge_marked_tree")};
    validate(m);
    return m;
}

/// Parses "edges|root=r". The vertex set is the edge endpoints plus the
/// root, so "|root=5" is the single vertex 5.
inline RootedLabeledTree parse_rooted_tree(std::string_view text) {
    const auto bar = text.rfind("|root=");
    if (bar == std::string_view::npos) {
        throw std::invalid_argument("parse_rooted_tree: missing '|root=r'");
    }
    RootedLabeledTree t;
    t.edges = detail::parse_edge_list(text.substr(0, bar), "parse_rooted_tree");
    t.root = detail::parse_label(text.substr(bar + 6), "parse_rooted_tree");
    t.vertices.push_back(t.root);
    for (const auto& [u, w] : t.edges) {
        t.vertices.push_back(u);
        t.vertices.push_back(w);
    }
    std::sort(t.vertices.begin(), t.vertices.end());
    t.vertices.erase(std::unique(t.vertices.begin(), t.vertices.end()),
                     t.vertices.end());
    validate(t);
    return t;
}

}  // namespace hookcal

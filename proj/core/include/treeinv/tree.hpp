#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "treeinv/errors.hpp"

namespace treeinv {

/// Undirected edge stored with canonical orientation u < v.
struct Edge {
    int u = 0;
    int v = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Canonicalizes an endpoint pair. Throws NotATreeError on a self-loop.
Edge make_edge(int a, int b);

/// Simple acyclic undirected graph on vertices 0..n-1, possibly
/// disconnected. Immutable after construction; adjacency lists and the
/// edge list are sorted.
class Forest {
public:
    static Forest from_edges(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;
    bool adjacent(int a, int b) const;

    friend bool operator==(const Forest& x, const Forest& y) {
        return x.n_ == y.n_ && x.edges_ == y.edges_;
    }

protected:
    Forest() = default;
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

/// Connected forest on n >= 2 vertices. Everything that accepts a Forest
/// accepts a Tree.
class Tree : public Forest {
public:
    /// Validates vertex range, absence of self-loops and duplicates,
    /// acyclicity and edge count. Throws TooSmallError for n < 2 and
    /// NotATreeError for anything that is not a tree.
    static Tree from_edges(int n, std::vector<Edge> edges);

private:
    Tree() = default;
};

/// The unique path between two distinct vertices of a tree.
struct TreePath {
    std::vector<int> vertices;  // endpoints included, in order

    int length() const { return static_cast<int>(vertices.size()) - 1; }
};

/// Throws SameVertexError if u == v, OutOfRangeError for bad indices.
TreePath path_between(const Tree& tree, int u, int v);

/// Two-coloring of a tree; part[v] is 0 or 1 and part[0] == 0.
/// Vertices u, v get different flags exactly when their distance is odd.
struct Bipartition {
    std::vector<std::uint8_t> part;
};

Bipartition bipartition(const Tree& tree);

/// Forest obtained by dropping every edge incident to a removed vertex.
/// Vertex ids are preserved; removed vertices stay behind isolated, which
/// leaves matching sizes and counts of the genuinely remaining graph
/// unchanged.
Forest remove_vertices(const Forest& forest, std::span<const int> removed);

/// FNV-1a over the vertex count and the canonical edge list. Stable
/// across runs and platforms; used as a short tree identifier in reports.
std::uint64_t tree_hash(const Tree& tree);

}  // namespace treeinv

#include "treeinv/tree.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace treeinv {
namespace {

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(int n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }

    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    // false if already joined
    bool join(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

}  // namespace

Edge make_edge(int a, int b) {
    if (a == b) {
        throw NotATreeError("self-loop at vertex " + std::to_string(a));
    }
    return a < b ? Edge{a, b} : Edge{b, a};
}

Forest Forest::from_edges(int n, std::vector<Edge> edges) {
    if (n < 0) {
        throw OutOfRangeError("negative vertex count");
    }
    Forest f;
    f.n_ = n;
    f.adj_.resize(n);
    UnionFind uf(n);
    for (Edge& e : edges) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
            throw OutOfRangeError("edge endpoint out of range: " +
                                  std::to_string(e.u) + " " + std::to_string(e.v));
        }
        e = make_edge(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Edge& e = edges[i];
        if (i > 0 && e == edges[i - 1]) {
            throw NotATreeError("duplicate edge " + std::to_string(e.u) + "-" +
                                std::to_string(e.v));
        }
        if (!uf.join(e.u, e.v)) {
            throw NotATreeError("cycle through edge " + std::to_string(e.u) + "-" +
                                std::to_string(e.v));
        }
        f.adj_[e.u].push_back(e.v);
        f.adj_[e.v].push_back(e.u);
    }
    f.edges_ = std::move(edges);
    for (auto& nb : f.adj_) {
        std::sort(nb.begin(), nb.end());
    }
    return f;
}

void Forest::check_vertex(int v) const {
    if (v < 0 || v >= n_) {
        throw OutOfRangeError("vertex " + std::to_string(v) + " outside 0.." +
                              std::to_string(n_ - 1));
    }
}

const std::vector<int>& Forest::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

int Forest::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
}

bool Forest::adjacent(int a, int b) const {
    check_vertex(a);
    check_vertex(b);
    const auto& nb = adj_[a];
    return std::binary_search(nb.begin(), nb.end(), b);
}

Tree Tree::from_edges(int n, std::vector<Edge> edges) {
    if (n < 2) {
        throw TooSmallError("a tree needs at least 2 vertices, got " +
                            std::to_string(n));
    }
    if (static_cast<int>(edges.size()) != n - 1) {
        throw NotATreeError("expected " + std::to_string(n - 1) + " edges, got " +
                            std::to_string(edges.size()));
    }
    Tree t;
    // n-1 edges and no cycle force connectivity, so the forest
    // validation is the whole check.
    static_cast<Forest&>(t) = Forest::from_edges(n, std::move(edges));
    return t;
}

TreePath path_between(const Tree& tree, int u, int v) {
    tree.neighbors(u);  // range checks
    tree.neighbors(v);
    if (u == v) {
        throw SameVertexError("path endpoints coincide at vertex " +
                              std::to_string(u));
    }
    const int n = tree.vertex_count();
    std::vector<int> parent(n, -1);
    std::vector<int> queue;
    queue.reserve(n);
    queue.push_back(u);
    parent[u] = u;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int x = queue[head];
        if (x == v) break;
        for (int y : tree.neighbors(x)) {
            if (parent[y] < 0) {
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    TreePath path;
    for (int x = v; x != u; x = parent[x]) {
        path.vertices.push_back(x);
    }
    path.vertices.push_back(u);
    std::reverse(path.vertices.begin(), path.vertices.end());
    return path;
}

Bipartition bipartition(const Tree& tree) {
    const int n = tree.vertex_count();
    Bipartition bp;
    bp.part.assign(n, 0);
    std::vector<char> seen(n, 0);
    std::vector<int> queue{0};
    seen[0] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int x = queue[head];
        for (int y : tree.neighbors(x)) {
            if (!seen[y]) {
                seen[y] = 1;
                bp.part[y] = bp.part[x] ^ 1;
                queue.push_back(y);
            }
        }
    }
    return bp;
}

Forest remove_vertices(const Forest& forest, std::span<const int> removed) {
    std::vector<char> gone(forest.vertex_count(), 0);
    for (int v : removed) {
        if (v < 0 || v >= forest.vertex_count()) {
            throw OutOfRangeError("removed vertex " + std::to_string(v) +
                                  " out of range");
        }
        gone[v] = 1;
    }
    std::vector<Edge> kept;
    kept.reserve(forest.edges().size());
    for (const Edge& e : forest.edges()) {
        if (!gone[e.u] && !gone[e.v]) {
            kept.push_back(e);
        }
    }
    return Forest::from_edges(forest.vertex_count(), std::move(kept));
}

std::uint64_t tree_hash(const Tree& tree) {
    constexpr std::uint64_t kOffset = 1469598103934665603ULL;
    constexpr std::uint64_t kPrime = 1099511628211ULL;
    std::uint64_t h = kOffset;
    auto mix = [&h](std::uint64_t word) {
        for (int byte = 0; byte < 4; ++byte) {
            h ^= (word >> (8 * byte)) & 0xff;
            h *= kPrime;
        }
    };
    mix(static_cast<std::uint64_t>(tree.vertex_count()));
    for (const Edge& e : tree.edges()) {
        mix(static_cast<std::uint64_t>(e.u));
        mix(static_cast<std::uint64_t>(e.v));
    }
    return h;
}

}  // namespace treeinv

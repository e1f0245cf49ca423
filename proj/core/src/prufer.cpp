#include "treeinv/prufer.hpp"

#include <queue>
#include <string>
#include <vector>

#include "treeinv/rng.hpp"

namespace treeinv {

Tree decode_prufer(std::span<const int> seq) {
    const int n = static_cast<int>(seq.size()) + 2;
    std::vector<int> degree(n, 1);
    for (int a : seq) {
        if (a < 0 || a >= n) {
            throw OutOfRangeError("Prufer entry " + std::to_string(a) +
                                  " outside 0.." + std::to_string(n - 1));
        }
        ++degree[a];
    }
    // smallest-leaf convention: always join the smallest current leaf
    std::priority_queue<int, std::vector<int>, std::greater<int>> leaves;
    for (int v = 0; v < n; ++v) {
        if (degree[v] == 1) leaves.push(v);
    }
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    for (int a : seq) {
        const int leaf = leaves.top();
        leaves.pop();
        edges.push_back(make_edge(leaf, a));
        --degree[leaf];
        if (--degree[a] == 1) leaves.push(a);
    }
    const int x = leaves.top();
    leaves.pop();
    const int y = leaves.top();
    edges.push_back(make_edge(x, y));
    return Tree::from_edges(n, std::move(edges));
}

Tree random_tree(int n, std::uint64_t seed) {
    if (n < 2) {
        throw TooSmallError("random_tree needs n >= 2, got " + std::to_string(n));
    }
    std::mt19937_64 engine(seed);
    std::vector<int> seq(n - 2);
    for (int& a : seq) {
        a = static_cast<int>(uniform_below(engine, static_cast<std::uint64_t>(n)));
    }
    return decode_prufer(seq);
}

std::uint64_t labeled_tree_count(int n) {
    if (n < 2) {
        throw TooSmallError("labeled_tree_count needs n >= 2, got " +
                            std::to_string(n));
    }
    std::uint64_t count = 1;
    for (int i = 0; i < n - 2; ++i) {
        const std::uint64_t next = count * static_cast<std::uint64_t>(n);
        if (next / static_cast<std::uint64_t>(n) != count) {
            throw TooLargeError("labeled_tree_count overflows 64 bits for n=" +
                                std::to_string(n));
        }
        count = next;
    }
    return count;
}

namespace {

void check_enumeration_bound(int n) {
    if (n < 2) {
        throw TooSmallError("tree enumeration needs n >= 2, got " +
                            std::to_string(n));
    }
    if (n > 9) {
        throw TooLargeError("tree enumeration is guarded to n <= 9, got " +
                            std::to_string(n));
    }
}

}  // namespace

Tree labeled_tree_by_index(int n, std::uint64_t index) {
    check_enumeration_bound(n);
    if (index >= labeled_tree_count(n)) {
        throw OutOfRangeError("tree index " + std::to_string(index) +
                              " out of range for n=" + std::to_string(n));
    }
    std::vector<int> seq(n - 2);
    for (int i = n - 3; i >= 0; --i) {
        seq[i] = static_cast<int>(index % n);
        index /= n;
    }
    return decode_prufer(seq);
}

void enumerate_labeled_trees(int n, const std::function<void(const Tree&)>& fn) {
    check_enumeration_bound(n);
    const std::uint64_t count = labeled_tree_count(n);
    for (std::uint64_t index = 0; index < count; ++index) {
        fn(labeled_tree_by_index(n, index));
    }
}

}  // namespace treeinv

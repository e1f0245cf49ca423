#pragma once

#include <cstdint>
#include <functional>
#include <span>

#include "treeinv/tree.hpp"

namespace treeinv {

/// Decodes a Prüfer sequence into the tree on seq.size() + 2 vertices,
/// using the smallest-leaf convention. The empty sequence yields the
/// two-vertex path. Entries must lie in [0, n).
Tree decode_prufer(std::span<const int> seq);

/// Uniformly random labeled tree on n >= 2 vertices. Deterministic in the
/// seed and reproducible across platforms.
Tree random_tree(int n, std::uint64_t seed);

/// n^(n-2), the number of labeled trees on n vertices. Throws
/// TooLargeError once the value no longer fits in 64 bits (n > 17).
std::uint64_t labeled_tree_count(int n);

/// The index-th labeled tree on n vertices, 0 <= index < n^(n-2), in
/// lexicographic Prüfer order. Guarded to 2 <= n <= 9 like enumeration;
/// gives random access for chunked sweeps.
Tree labeled_tree_by_index(int n, std::uint64_t index);

/// Calls fn once per labeled tree on n vertices; the n^(n-2) trees have
/// pairwise distinct edge sets. Guarded to 2 <= n <= 9.
void enumerate_labeled_trees(int n, const std::function<void(const Tree&)>& fn);

}  // namespace treeinv

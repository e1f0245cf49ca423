#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "treeinv/tree.hpp"

namespace treeinv {

/// A matching given as a sorted list of canonical edges.
struct Matching {
    std::vector<Edge> edges;

    bool contains(const Edge& e) const;
    bool covers(int v) const;

    friend bool operator==(const Matching&, const Matching&) = default;
};

/// Size of a maximum matching together with the number of maximum
/// matchings. Counts are exact integers of arbitrary size: the count
/// grows exponentially in the vertex count.
struct MatchingSummary {
    int nu = 0;
    mpz_class m = 1;
};

/// Dynamic program over the forest; linear in the number of vertices.
/// The empty forest has summary (0, 1): the empty matching is maximum.
MatchingSummary max_matching_summary(const Forest& forest);

/// Same, restricted to vertices v with removed[v] == 0. The mask must
/// have one entry per vertex.
MatchingSummary max_matching_summary(const Forest& forest,
                                     const std::vector<char>& removed);

/// Explicit list of all maximum matchings, in include-edge-first search
/// order over the canonical edge list. Guarded to n <= 20.
std::vector<Matching> enumerate_max_matchings(const Forest& forest);

/// True when every maximum matching covers u, i.e. removing u drops the
/// maximum matching size.
bool is_saturated(const Tree& tree, int u);

/// Sign attached to an odd distance: +1 for d = 1 mod 4, -1 for
/// d = 3 mod 4. Throws EvenDistanceError for even d (including 0) and
/// OutOfRangeError for negative d.
int sigma(int distance);

/// Signed count of maximum matchings that alternate along the u-v path:
/// edges at odd positions on the path in, even positions out. Zero when
/// the distance is even or no maximum matching alternates. `whole` must
/// be the summary of `tree` itself.
///
/// Computed without enumeration: an alternating maximum matching is
/// forced on the path and maximum on the rest, so the answer is a signed
/// count of maximum matchings of the forest left after deleting the path,
/// subject to a size identity that certifies overall maximality.
mpz_class mu(const Tree& tree, int u, int v, const MatchingSummary& whole);

/// Same value straight from the definition, by enumerating all maximum
/// matchings and filtering on the alternation pattern. Guarded to n <= 20;
/// exists to cross-check `mu`.
mpz_class mu_bruteforce(const Tree& tree, int u, int v);

/// Dense symmetric table of mu values with zero diagonal, plus the
/// maximum matching count m of the tree.
class MuTable {
public:
    /// Raw constructor; values are row-major n*n and only shape-checked.
    MuTable(int n, std::vector<mpz_class> values, mpz_class m);

    int size() const { return n_; }
    const mpz_class& m() const { return m_; }
    const mpz_class& at(int u, int v) const;

    /// {"n": ..., "m": "...", "entries": [[u, v, "..."], ...]} with one
    /// entry per nonzero upper-triangle value, sorted; big integers are
    /// serialized as strings.
    std::string to_json_string() const;

    friend bool operator==(const MuTable&, const MuTable&) = default;

private:
    int n_ = 0;
    std::vector<mpz_class> values_;
    mpz_class m_;
};

MuTable mu_table(const Tree& tree);

}  // namespace treeinv

#pragma once

#include <string>

#include "treeinv/matching.hpp"
#include "treeinv/rational_matrix.hpp"
#include "treeinv/tree.hpp"

namespace treeinv {

/// 0/1 adjacency matrix of the tree.
RationalMatrix adjacency_matrix(const Tree& tree);

/// Generalized inverse of the adjacency matrix: entry (u, v) equals
/// mu(u, v) / m. Symmetric with zero diagonal; coincides with the exact
/// Moore-Penrose pseudoinverse and, for trees with a perfect matching,
/// with the ordinary inverse.
RationalMatrix generalized_inverse(const Tree& tree);
RationalMatrix generalized_inverse(const MuTable& table);

/// Edge-labeled view of a symmetric matrix with zero diagonal: one
/// labeled edge per nonzero upper-triangle entry.
struct LabeledEdge {
    int u = 0;
    int v = 0;
    mpq_class label;

    friend bool operator==(const LabeledEdge&, const LabeledEdge&) = default;
};

struct LabeledGraph {
    int n = 0;
    std::vector<LabeledEdge> edges;  // sorted by (u, v)

    friend bool operator==(const LabeledGraph&, const LabeledGraph&) = default;
};

/// The labeled graph of the generalized inverse.
LabeledGraph inverse_graph(const Tree& tree);

/// Result of the floating-point eigenvalue cross-check.
struct SpectralCheck {
    bool ok = false;
    double max_deviation = 0.0;

    explicit operator bool() const { return ok; }
};

/// Checks in floating point that the nonzero spectra of A and of its
/// generalized inverse are reciprocal multisets, and that both have the
/// same number of zero eigenvalues (n - 2 nu, classified via the exact
/// rank rather than a numeric threshold). Guarded to n <= 64; tol must
/// be positive.
SpectralCheck spectral_reciprocity_check(const Tree& tree, double tol);

/// {"n": ..., "entries": [[i, j, "p/q"], ...]} over the nonzero
/// upper-triangle entries of a symmetric matrix with zero diagonal.
std::string symmetric_matrix_json(const RationalMatrix& m);

}  // namespace treeinv

#pragma once

#include <vector>

#include "treeinv/rational_matrix.hpp"

namespace treeinv {

/// Rank and a basis of the right null space. Basis vectors are
/// normalized to primitive integer vectors whose first nonzero entry is
/// positive, one per free column of the reduced echelon form.
struct NullspaceResult {
    int rank = 0;
    std::vector<std::vector<mpq_class>> basis;
};

/// Fraction-free elimination over the integers (denominators cleared per
/// row first), so intermediate growth stays polynomial and every division
/// is exact.
NullspaceResult rank_and_nullspace(const RationalMatrix& a);

/// A = F * G with F the pivot columns of A (full column rank r) and G the
/// nonzero rows of the reduced echelon form (full row rank r).
struct RankFactorization {
    RationalMatrix f;
    RationalMatrix g;
    int rank = 0;
};

RankFactorization rank_factorize(const RationalMatrix& a);

/// Exact Moore-Penrose pseudoinverse of a square matrix via the rank
/// factorization: pinv(A) = G^T (G G^T)^-1 (F^T F)^-1 F^T. The Gram
/// matrices are invertible because F and G have full rank. For symmetric
/// A this is also the group inverse. Independent of any tree structure;
/// serves as the reference the combinatorial path is checked against.
RationalMatrix exact_pseudoinverse(const RationalMatrix& a);

/// A*B*A == A, B*A*B == B, and A*B == B*A, all exactly.
bool check_group_inverse_axioms(const RationalMatrix& a, const RationalMatrix& b);

/// Equal rank and each null vector of one annihilated by the other.
bool same_nullspace(const RationalMatrix& a, const RationalMatrix& b);

}  // namespace treeinv

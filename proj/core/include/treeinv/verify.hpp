#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "treeinv/matching.hpp"
#include "treeinv/tree.hpp"

namespace treeinv {

/// Outcome of one verification check. A failed check carries a witness
/// describing the first offending position; failures are data, not
/// exceptions.
struct CheckResult {
    std::string name;
    bool pass = true;
    std::string witness;
};

struct VerificationReport {
    std::uint64_t tree_hash = 0;
    int n = 0;
    mpz_class m;
    std::vector<CheckResult> checks;

    int failed_count() const;
    bool all_passed() const { return failed_count() == 0; }
    std::string to_json_string() const;
};

struct VerifyConfig {
    int trials = 20;          // random test vectors per identity check
    std::uint64_t seed = 1;   // base seed for those vectors
    double tol = 1e-9;        // relative tolerance of the float check
    int eigen_max_n = 64;     // beyond this the float check is skipped
};

/// The generalized inverse built from the table equals the exact
/// Moore-Penrose pseudoinverse of the adjacency matrix, entry by entry.
CheckResult check_matches_pseudoinverse(const Tree& tree, const MuTable& table);

/// For every saturated u and every vertex w: the sum of mu(u, .) over the
/// neighbors of w is m when w == u and 0 otherwise.
CheckResult check_saturated_sums(const Tree& tree, const MuTable& table);

/// For every u and every x: the sum of mu(u, .) over endpoints of
/// two-step walks leaving x (a multiset; x itself appears deg(x) times)
/// is m when x is a neighbor of u and 0 otherwise.
CheckResult check_two_step_sums(const Tree& tree, const MuTable& table);

/// For every saturated u and test vectors f (all-ones plus `trials`
/// random integer vectors): sum_v mu(u, v) * sum_{w ~ v} f(w) == m * f(u).
CheckResult check_saturated_identity(const Tree& tree, const MuTable& table,
                                     int trials, std::uint64_t seed);

/// For every u and the same family of test vectors:
/// sum_v mu(u, v) * (two-step neighborhood sum of f at v)
///   == m * (neighborhood sum of f at u).
CheckResult check_two_step_identity(const Tree& tree, const MuTable& table,
                                    int trials, std::uint64_t seed);

/// Exact part: C * A * A == m * A over the integers. Float part (skipped
/// above eigen_max_n vertices): for every eigenpair (lambda, f) of A with
/// |lambda| > tol, C * A * f == m * f within tol * n * max|f|.
CheckResult check_eigen_identity(const Tree& tree, const MuTable& table,
                                 double tol, int eigen_max_n);

/// The table and the adjacency matrix have the same null space, and the
/// table annihilates every null vector of A entry-wise.
CheckResult check_nullspace_equivalence(const Tree& tree, const MuTable& table);

/// Runs every check against a freshly computed table.
VerificationReport verify_all(const Tree& tree, const VerifyConfig& config = {});

/// Runs every check against a caller-supplied table, which lets tests
/// inject faults and prove the checks can fail.
VerificationReport verify_with_table(const Tree& tree, const MuTable& table,
                                     const VerifyConfig& config = {});

}  // namespace treeinv

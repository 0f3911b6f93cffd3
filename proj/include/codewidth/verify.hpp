#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "codewidth/code.hpp"

namespace codewidth {

/// Cumulative Hamming-weight counts of an integer interval: counts[i-1] is
/// the number of integers j in the interval whose m-bit binary expansion has
/// at least i ones. Non-increasing in i.
struct WeightVector {
    int m = 0;
    std::vector<long long> counts;

    WeightVector operator+(const WeightVector& other) const;
    /// Componentwise >=.
    bool dominates(const WeightVector& other) const;
};

/// Weight vector of the interval [lo, hi] within [0, 2^m); empty when
/// lo > hi.
WeightVector weight_vector(long long lo, long long hi, int m);

/// Outcome of one theorem-reproduction check. A failing report carries a
/// machine-readable counterexample that re-fails when evaluated in
/// isolation.
struct VerificationReport {
    std::string check;
    nlohmann::json params;
    bool pass = false;
    nlohmann::json counterexample;  // null on pass
    double millis = 0.0;

    nlohmann::json to_json(bool with_timing) const;
};

/// Componentwise inequality
///   w([alpha-i, alpha-1]) + w([beta-j, beta-1]) >= w([1, i+j])
/// for every i, j in [0, alpha - 2^{m-1}]^2. Accepts 2 <= m <= 14.
VerificationReport check_appendix_b(int m);

/// (U_alpha - U_{alpha-i}) + (U_beta - U_{beta-j}) >= U_{i+j+1} - U_1 over
/// the i, j ranges tied to the separator bounds, with the U-profile of
/// RM(r, m) computed by brute force (m <= 4). An empty j range passes
/// vacuously and is recorded in the params.
VerificationReport check_lemma_u_ineq(int r, int m);

/// U_alpha + U_beta + U_1 == k(r, m) - tau(r, m) using the closed forms;
/// U_1 = 0 is asserted through the minimum distance 2^{m-r} >= 2. For
/// m <= 4 the closed U values are also cross-checked against brute force.
VerificationReport check_lemma_uab(int r, int m);

/// For every cubic tree with n leaves, some internal node v satisfies
/// U_{n_1} + U_{n_2} + U_{n_3} <= k - tau(C). Requires n <= 8; trees are
/// enumerated exhaustively, tau by exhaustive order search.
VerificationReport check_prop1_hypothesis(const LinearCode& code, int threads = 0);

/// treewidth == trelliswidth == min{k, n-k+1} on reed_solomon(n, k, p),
/// both sides exhaustive. Requires n <= 8 and n <= p.
VerificationReport check_mds_theorem(int n, int k, std::uint32_t p, int threads = 0);

/// Reed-Muller width theorem: for m <= 3, exhaustive treewidth equals
/// tau_rm(r, m) (and the node hypothesis holds on every 2^m-leaf tree when
/// m == 3 and r <= m-1); for every m, tau_rm is re-checked against an
/// independent evaluation of the two-case closed form.
VerificationReport check_rm_theorem(int r, int m, int threads = 0);

/// srm_gap(r, m) == k_rm(r, m) - tau_rm(r, m) for all 1 <= r <= m <= max_m
/// (covers the three proof cases m >= 2r+1, m == 2r, m <= 2r-1).
VerificationReport check_srm_identity(int max_m);

/// Standard-bit-order property: prefix dims equal U_{i+1} and suffix dims
/// equal U_{n-i} for RM(r, m), m <= 4, every depth i.
VerificationReport check_std_bit_order(int r, int m);

/// Canonical-representation sweep: for r <= m <= max_m every u < k(r, m)
/// decomposes uniquely and round-trips; closed-form U_alpha/U_beta and
/// Wei-theorem weights are cross-checked against brute force for m <= 4.
VerificationReport check_appendix_c(int max_m);

}  // namespace codewidth

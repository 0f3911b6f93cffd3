#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "codewidth/code.hpp"

namespace codewidth {

/// Maximal limited-support subcode dimensions U_0..U_n:
/// U_s = max dimension of a subcode whose support has size at most s.
/// The sequence starts at 0, ends at k, and climbs in steps of 0 or 1.
struct UProfile {
    std::vector<int> u;

    int n() const { return static_cast<int>(u.size()) - 1; }
    int k() const { return u.back(); }
    int at(long long s) const { return u.at(static_cast<std::size_t>(s)); }
};

/// Generalized Hamming weights d_1 < d_2 < ... < d_k: d_p is the smallest
/// support size of a p-dimensional subcode.
struct GhwProfile {
    std::vector<int> d;

    int k() const { return static_cast<int>(d.size()); }
    int at(int p) const { return d.at(static_cast<std::size_t>(p) - 1); }  // 1-indexed
};

/// Exhaustive U-profile by subset-rank enumeration over all 2^n coordinate
/// subsets. Hard-gated at n <= 20; larger codes must use closed forms.
UProfile u_profile_bruteforce(const LinearCode& code);

/// Inverts the U staircase: d_p = min{ s : U_s >= p }.
GhwProfile ghw_from_uprofile(const UProfile& profile);

/// Weight hierarchy of an (n, k) MDS code: d_p = n - k + p.
GhwProfile ghw_mds(int n, int k);

/// Reed-Muller dimension k(r, m) = sum_{j=0}^{r} C(m, j), with C(m, j) = 0
/// for j > m, so k(r, m) = 2^m whenever r >= m.
long long k_rm(int r, int m);

long long binomial(long long n, long long k);

/// The unique decomposition u = sum_i k(r_i, m_i) with
/// r > r_1 >= ... >= r_l >= 0, m > m_1 >= ... >= m_l >= 0 and
/// m_i - r_i = m - r + 1 - i. Built greedily (largest admissible term
/// first); the constraints are re-validated on the result.
struct CanonicalRep {
    std::vector<std::pair<int, int>> terms;  // (r_i, m_i)
};

CanonicalRep canonical_rep(long long u, int r, int m);

/// d_u(RM(r, m)) = sum_i 2^{m_i} over the canonical representation of u,
/// for 0 <= u < k(r, m). The value u = k is outside that domain and returns
/// 2^m, the support size of the full code.
long long ghw_rm(long long u, int r, int m);

/// Largest integers alpha in [0, 2n/3] and beta in [0, n/3] for n = 2^m.
/// In binary, alpha alternates ...0101 ending at the top bit and beta is its
/// complement below the top bit; alpha + beta = 2^m - 1.
struct AlphaBeta {
    long long alpha, beta;
};

AlphaBeta alpha_beta(int m);

/// Closed forms for U_alpha(RM(r, m)) and U_beta(RM(r, m)), valid for
/// 1 <= r <= m-1. Selects the m >= 2r expressions or the odd/even m < 2r
/// expressions as appropriate.
struct UAlphaBeta {
    long long u_alpha, u_beta;
};

UAlphaBeta u_alpha_beta_closed(int r, int m);

}  // namespace codewidth

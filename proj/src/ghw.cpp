#include "codewidth/ghw.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace codewidth {

UProfile u_profile_bruteforce(const LinearCode& code) {
    const int n = code.length();
    const std::vector<std::int8_t> dims = all_shortened_dims(code);  // gates n <= 20
    std::vector<int> u(static_cast<std::size_t>(n) + 1, 0);
    for (std::uint64_t mask = 0; mask < dims.size(); ++mask) {
        const int s = std::popcount(mask);
        if (dims[mask] > u[s]) u[s] = dims[mask];
    }
    return UProfile{std::move(u)};
}

GhwProfile ghw_from_uprofile(const UProfile& profile) {
    const std::vector<int>& u = profile.u;
    if (u.empty() || u[0] != 0)
        throw std::invalid_argument("ghw_from_uprofile: profile must start at U_0 = 0");
    std::vector<int> d;
    for (std::size_t s = 1; s < u.size(); ++s) {
        const int step = u[s] - u[s - 1];
        if (step != 0 && step != 1)
            throw std::invalid_argument("ghw_from_uprofile: malformed profile, step " +
                                        std::to_string(step) + " at s=" + std::to_string(s));
        if (step == 1) d.push_back(static_cast<int>(s));
    }
    return GhwProfile{std::move(d)};
}

GhwProfile ghw_mds(int n, int k) {
    if (k < 1 || k > n)
        throw std::invalid_argument("ghw_mds: need 1 <= k <= n, got n=" + std::to_string(n) +
                                    " k=" + std::to_string(k));
    std::vector<int> d(static_cast<std::size_t>(k));
    for (int p = 1; p <= k; ++p) d[p - 1] = n - k + p;
    return GhwProfile{std::move(d)};
}

long long binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    long long acc = 1;
    for (long long i = 1; i <= k; ++i) acc = acc * (n - k + i) / i;
    return acc;
}

long long k_rm(int r, int m) {
    if (r < 0 || m < 0)
        throw std::invalid_argument("k_rm: need r >= 0 and m >= 0, got r=" + std::to_string(r) +
                                    " m=" + std::to_string(m));
    if (m > 62) throw std::invalid_argument("k_rm: m > 62 overflows");
    if (r >= m) return 1LL << m;
    long long acc = 0;
    for (int j = 0; j <= r; ++j) acc += binomial(m, j);
    return acc;
}

CanonicalRep canonical_rep(long long u, int r, int m) {
    if (r < 0 || m < 0 || u < 0 || u >= k_rm(r, m))
        throw std::invalid_argument("canonical_rep: u=" + std::to_string(u) +
                                    " outside [0, k(r, m)) for r=" + std::to_string(r) +
                                    " m=" + std::to_string(m));
    std::vector<std::pair<int, int>> terms;
    long long rem = u;
    int r_cap = r - 1;
    int diff = m - r;  // required m_i - r_i, decreases by one per term
    while (rem > 0) {
        int chosen = -1;
        for (int ri = r_cap; ri >= 0; --ri) {
            const int mi = ri + diff;
            if (mi < 0) break;  // mi decreases with ri
            if (k_rm(ri, mi) <= rem) {
                chosen = ri;
                break;
            }
        }
        if (chosen < 0)
            throw std::logic_error("canonical_rep: greedy construction failed for u=" + std::to_string(u));
        terms.emplace_back(chosen, chosen + diff);
        rem -= k_rm(chosen, chosen + diff);
        r_cap = chosen;
        --diff;
    }

    // Re-validate the canonical-form constraints on the result.
    long long sum = 0;
    int prev_r = r, prev_m = m;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const auto [ri, mi] = terms[i];
        const bool order_ok = i == 0 ? (ri < prev_r && mi < prev_m) : (ri <= prev_r && mi <= prev_m);
        if (!order_ok || ri < 0 || mi < 0 || mi - ri != m - r + 1 - static_cast<int>(i) - 1)
            throw std::logic_error("canonical_rep: constraint violation in greedy result");
        sum += k_rm(ri, mi);
        prev_r = ri;
        prev_m = mi;
    }
    if (sum != u) throw std::logic_error("canonical_rep: terms do not sum back to u");
    return CanonicalRep{std::move(terms)};
}

long long ghw_rm(long long u, int r, int m) {
    if (r < 0 || m < 0 || r > m)
        throw std::invalid_argument("ghw_rm: need 0 <= r <= m");
    const long long k = k_rm(r, m);
    if (u < 0 || u > k)
        throw std::invalid_argument("ghw_rm: u=" + std::to_string(u) + " outside [0, k=" +
                                    std::to_string(k) + "]");
    if (u == k) return 1LL << m;  // support of the full code
    long long d = 0;
    for (const auto& [ri, mi] : canonical_rep(u, r, m).terms) d += 1LL << mi;
    return d;
}

AlphaBeta alpha_beta(int m) {
    if (m < 1 || m > 61) throw std::invalid_argument("alpha_beta: need 1 <= m <= 61");
    const long long n2 = 1LL << (m + 1);  // 2n
    const long long n = 1LL << m;
    if (m % 2 == 1) return {(n2 - 1) / 3, (n - 2) / 3};
    return {(n2 - 2) / 3, (n - 1) / 3};
}

UAlphaBeta u_alpha_beta_closed(int r, int m) {
    if (r < 1 || r > m - 1)
        throw std::invalid_argument("u_alpha_beta_closed: need 1 <= r <= m-1, got r=" +
                                    std::to_string(r) + " m=" + std::to_string(m));
    long long ua = 0, ub = 0;
    if (m >= 2 * r) {
        for (int i = 0; i <= r - 1; ++i) ua += k_rm(r - 1 - i, m - 1 - 2 * i);
        for (int i = 1; i <= r - 1; ++i) ub += k_rm(r - 1 - i, m - 2 * i);
    } else if (m % 2 == 1) {
        for (int i = 0; i <= (m - 1) / 2; ++i) ua += k_rm(r - 1 - i, m - 1 - 2 * i);
        for (int i = 1; i <= (m - 1) / 2; ++i) ub += k_rm(r - 1 - i, m - 2 * i);
    } else {
        for (int i = 0; i <= (m - 2) / 2; ++i) ua += k_rm(r - 1 - i, m - 1 - 2 * i);
        for (int i = 1; i <= m / 2; ++i) ub += k_rm(r - 1 - i, m - 2 * i);
    }
    return {ua, ub};
}

}  // namespace codewidth

#include "codewidth/trellis.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <stdexcept>
#include <string>

#include "codewidth/ghw.hpp"
#include "codewidth/parallel.hpp"

namespace codewidth {

CoordinateOrder::CoordinateOrder(std::vector<int> coords) : coords_(std::move(coords)) {
    const int n = static_cast<int>(coords_.size());
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int c : coords_) {
        if (c < 0 || c >= n || seen[static_cast<std::size_t>(c)])
            throw std::invalid_argument("CoordinateOrder: not a permutation of [0, " +
                                        std::to_string(n) + ")");
        seen[static_cast<std::size_t>(c)] = true;
    }
}

CoordinateOrder CoordinateOrder::identity(int n) {
    std::vector<int> coords(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) coords[static_cast<std::size_t>(i)] = i;
    return CoordinateOrder(std::move(coords));
}

CoordinateOrder CoordinateOrder::reversed() const {
    std::vector<int> coords(coords_.rbegin(), coords_.rend());
    return CoordinateOrder(std::move(coords));
}

int TrellisProfile::max_state() const { return *std::max_element(state_dims.begin(), state_dims.end()); }
int TrellisProfile::max_branch() const { return *std::max_element(branch_dims.begin(), branch_dims.end()); }

namespace {

struct PastFutureDims {
    std::vector<int> past;    // past[i]   = dim C_{coords at depths < i},  i = 0..n
    std::vector<int> future;  // future[i] = dim C_{coords at depths >= i}, i = 0..n
};

PastFutureDims past_future_dims(const LinearCode& code, const CoordinateOrder& order) {
    const int n = code.length();
    if (n > 64) throw std::invalid_argument("trellis profiles require n <= 64 (coordinate masks)");
    if (order.size() != n)
        throw std::invalid_argument("coordinate order has size " + std::to_string(order.size()) +
                                    ", code has length " + std::to_string(n));
    PastFutureDims d;
    d.past.resize(static_cast<std::size_t>(n) + 1);
    d.future.resize(static_cast<std::size_t>(n) + 1);
    std::uint64_t mask = 0;
    d.past[0] = 0;
    for (int i = 0; i < n; ++i) {
        mask |= std::uint64_t{1} << order.at(i);
        d.past[static_cast<std::size_t>(i) + 1] = code.dim_shortened(mask);
    }
    mask = 0;
    d.future[static_cast<std::size_t>(n)] = 0;
    for (int i = n - 1; i >= 0; --i) {
        mask |= std::uint64_t{1} << order.at(i);
        d.future[static_cast<std::size_t>(i)] = code.dim_shortened(mask);
    }
    return d;
}

}  // namespace

TrellisProfile trellis_profile(const LinearCode& code, const CoordinateOrder& order) {
    const int n = code.length();
    const int k = code.dimension();
    const PastFutureDims d = past_future_dims(code, order);
    TrellisProfile p{std::vector<int>(static_cast<std::size_t>(n) + 1),
                     std::vector<int>(static_cast<std::size_t>(n)), order};
    for (int i = 0; i <= n; ++i)
        p.state_dims[static_cast<std::size_t>(i)] =
            k - d.past[static_cast<std::size_t>(i)] - d.future[static_cast<std::size_t>(i)];
    for (int i = 0; i < n; ++i)
        p.branch_dims[static_cast<std::size_t>(i)] =
            k - d.past[static_cast<std::size_t>(i)] - d.future[static_cast<std::size_t>(i) + 1];
    return p;
}

GainFallProfile points_of_gain_fall(const LinearCode& code, const CoordinateOrder& order) {
    const int n = code.length();
    const PastFutureDims d = past_future_dims(code, order);
    GainFallProfile gf;
    for (int i = 0; i < n; ++i) {
        if (d.future[static_cast<std::size_t>(i) + 1] == d.future[static_cast<std::size_t>(i)] - 1)
            gf.gains.push_back(i);
        if (d.past[static_cast<std::size_t>(i) + 1] == d.past[static_cast<std::size_t>(i)] + 1)
            gf.falls.push_back(i);
    }
    return gf;
}

GainFall rm_gain_fall_predicate(long long i, int r, int m) {
    if (r < 0 || m < 1 || r > m) throw std::invalid_argument("rm_gain_fall_predicate: need 0 <= r <= m");
    if (i < 0 || i >= (1LL << m))
        throw std::invalid_argument("rm_gain_fall_predicate: i=" + std::to_string(i) +
                                    " outside [0, 2^m)");
    const int ones = std::popcount(static_cast<std::uint64_t>(i));
    return {ones <= r, m - ones <= r};
}

TrellisProfile rm_standard_profile(int r, int m) {
    if (r < 0 || m < 1 || r > m) throw std::invalid_argument("rm_standard_profile: need 0 <= r <= m, m >= 1");
    if (m > 20) throw std::invalid_argument("rm_standard_profile: m > 20 profile would be too large");
    const long long n = 1LL << m;
    const int k = static_cast<int>(k_rm(r, m));

    // future_gains[i] = # gains at depths >= i = dim of the future subcode;
    // a running fall count gives the past dimension.
    std::vector<int> future_gains(static_cast<std::size_t>(n) + 1, 0);
    for (long long i = n - 1; i >= 0; --i)
        future_gains[static_cast<std::size_t>(i)] =
            future_gains[static_cast<std::size_t>(i) + 1] +
            (std::popcount(static_cast<std::uint64_t>(i)) <= r ? 1 : 0);

    TrellisProfile p{std::vector<int>(static_cast<std::size_t>(n) + 1),
                     std::vector<int>(static_cast<std::size_t>(n)),
                     CoordinateOrder::identity(static_cast<int>(n))};
    int falls_before = 0;
    for (long long i = 0; i < n; ++i) {
        p.state_dims[static_cast<std::size_t>(i)] = k - falls_before - future_gains[static_cast<std::size_t>(i)];
        p.branch_dims[static_cast<std::size_t>(i)] =
            k - falls_before - future_gains[static_cast<std::size_t>(i) + 1];
        if (m - std::popcount(static_cast<std::uint64_t>(i)) <= r) ++falls_before;
    }
    p.state_dims[static_cast<std::size_t>(n)] = k - falls_before;  // = 0
    return p;
}

long long sigma_rm(int r, int m) {
    if (r < 0 || m < 0 || r > m) throw std::invalid_argument("sigma_rm: need 0 <= r <= m");
    const int jmax = std::min(r, m - r - 1);
    long long acc = 0;
    for (int j = 0; j <= jmax; ++j) acc += binomial(m - 2 * j - 1, r - j);
    return acc;
}

long long tau_rm(int r, int m) {
    if (r < 0 || m < 0 || r > m) throw std::invalid_argument("tau_rm: need 0 <= r <= m");
    long long acc = 0;
    if (m >= 2 * r + 1) {
        for (int j = 0; j <= r; ++j) acc += binomial(m - 2 * j - 1, r - j);
    } else {
        acc = 1;
        for (int j = 0; j <= m - r - 1; ++j) acc += binomial(m - 2 * j - 1, r - j);
    }
    return acc;
}

int tau_sigma_gap(int r, int m) {
    if (r < 0 || m < 0 || r > m) throw std::invalid_argument("tau_sigma_gap: need 0 <= r <= m");
    return m <= 2 * r ? 1 : 0;
}

long long srm_gap(int r, int m) {
    if (r < 1 || m < r) throw std::invalid_argument("srm_gap: need 1 <= r <= m");
    const int imax = std::min(2 * (r - 1), m - 1);
    long long acc = 0;
    for (int i = 0; i <= imax; ++i) acc += k_rm(r - 1 - (i + 1) / 2, m - 1 - i);
    return acc;
}

long long tau_mds(long long n, long long k) {
    if (k < 1 || k > n) throw std::invalid_argument("tau_mds: need 1 <= k <= n");
    return std::min(k, n - k + 1);
}

namespace {

long long factorial(int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// idx-th permutation of [0, n) in lexicographic order.
std::vector<int> unrank_permutation(long long idx, int n) {
    std::vector<int> pool(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i;
    std::vector<int> perm;
    perm.reserve(static_cast<std::size_t>(n));
    long long f = factorial(n);
    for (int i = n; i >= 1; --i) {
        f /= i;
        const long long d = idx / f;
        idx %= f;
        perm.push_back(pool[static_cast<std::size_t>(d)]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(d));
    }
    return perm;
}

}  // namespace

TrelliswidthResult trelliswidth_exhaustive(const LinearCode& code, int threads) {
    const int n = code.length();
    if (n > 10)
        throw std::invalid_argument("trelliswidth_exhaustive: n=" + std::to_string(n) +
                                    " exceeds the hard gate n <= 10");
    const int k = code.dimension();
    const std::vector<std::int8_t> dims = all_shortened_dims(code);
    const std::uint64_t full = code.full_support();

    const long long total = factorial(n);
    const int nchunks = static_cast<int>(std::min<long long>(total, 64));
    const long long chunk_size = (total + nchunks - 1) / nchunks;

    struct Candidate {
        int value = INT_MAX;
        std::vector<int> perm;
    };
    std::vector<Candidate> best(static_cast<std::size_t>(nchunks));

    detail::for_each_chunk(nchunks, threads, [&](long long c) {
        const long long begin = c * chunk_size;
        const long long end = std::min(total, begin + chunk_size);
        if (begin >= end) return;
        std::vector<int> perm = unrank_permutation(begin, n);
        Candidate& cand = best[static_cast<std::size_t>(c)];
        for (long long it = begin; it < end; ++it) {
            // A reversed order has the reversed branch profile; keep one of
            // each pair.
            if (perm[0] <= perm[static_cast<std::size_t>(n) - 1]) {
                std::uint64_t prefix = 0;
                int value = 0;
                for (int i = 0; i < n && value < cand.value; ++i) {
                    const std::uint64_t bit = std::uint64_t{1} << perm[static_cast<std::size_t>(i)];
                    const int branch = k - dims[prefix] - dims[full & ~(prefix | bit)];
                    if (branch > value) value = branch;
                    prefix |= bit;
                }
                if (value < cand.value) {
                    cand.value = value;
                    cand.perm = perm;
                }
            }
            if (it + 1 < end) std::next_permutation(perm.begin(), perm.end());
        }
    });

    Candidate overall;
    for (const Candidate& cand : best)
        if (cand.value < overall.value) overall = cand;
    return {overall.value, CoordinateOrder(std::move(overall.perm))};
}

}  // namespace codewidth

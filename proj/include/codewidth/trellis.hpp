#pragma once

#include <vector>

#include "codewidth/code.hpp"

namespace codewidth {

/// A coordinate order for a trellis realization: coords()[i] is the code
/// coordinate placed at depth i of the path.
class CoordinateOrder {
public:
    explicit CoordinateOrder(std::vector<int> coords);
    static CoordinateOrder identity(int n);

    int size() const { return static_cast<int>(coords_.size()); }
    int at(int pos) const { return coords_.at(static_cast<std::size_t>(pos)); }
    const std::vector<int>& coords() const { return coords_; }
    CoordinateOrder reversed() const;

    bool operator==(const CoordinateOrder& other) const = default;

private:
    std::vector<int> coords_;
};

/// State dimensions sigma_0..sigma_n and branch dimensions tau_0..tau_{n-1}
/// of the minimal trellis for a coordinate order:
///   sigma_i = k - dim C_{past(i)} - dim C_{future(i)}
///   tau_i   = k - dim C_{past(i)} - dim C_{future(i+1)}
/// where past(i) holds the coordinates at depths < i and future(i) those at
/// depths >= i.
struct TrellisProfile {
    std::vector<int> state_dims;
    std::vector<int> branch_dims;
    CoordinateOrder order;

    int max_state() const;
    int max_branch() const;
};

TrellisProfile trellis_profile(const LinearCode& code, const CoordinateOrder& order);

/// Points of gain: depths where the future shortened-code dimension drops by
/// one. Points of fall: depths where the past dimension grows by one. Both
/// sets have exactly k elements.
struct GainFallProfile {
    std::vector<int> gains, falls;
};

GainFallProfile points_of_gain_fall(const LinearCode& code, const CoordinateOrder& order);

/// For RM(r, m) in the standard bit order, depth i is a gain iff the binary
/// expansion of i has at most r ones, and a fall iff it has at most r zeros.
struct GainFall {
    bool gain, fall;
};

GainFall rm_gain_fall_predicate(long long i, int r, int m);

/// Trellis profile of RM(r, m) in the standard bit order, computed in O(n)
/// by counting gains and falls -- no linear algebra. Must agree with
/// trellis_profile(reed_muller(r, m), identity) wherever both run.
TrellisProfile rm_standard_profile(int r, int m);

/// Berger--Be'ery state complexity of RM(r, m) in the standard bit order:
/// sigma(r, m) = sum_{j=0}^{min{r, m-r-1}} C(m-2j-1, r-j).
long long sigma_rm(int r, int m);

/// Trelliswidth of RM(r, m):
/// sum_{j=0}^{r} C(m-2j-1, r-j) when m >= 2r+1, and one more than the
/// truncated sum (j <= m-r-1) otherwise.
long long tau_rm(int r, int m);

/// 1 iff m <= 2r, which is exactly when tau(r, m) = sigma(r, m) + 1.
int tau_sigma_gap(int r, int m);

/// k(r, m) - tau(r, m) as the closed sum
/// sum_{i=0}^{min{2(r-1), m-1}} k(r-1-ceil(i/2), m-1-i).
long long srm_gap(int r, int m);

/// Trelliswidth of an (n, k) MDS code: min{k, n-k+1}.
long long tau_mds(long long n, long long k);

/// Minimum over all coordinate orders of the maximum branch dimension.
/// Orders are scanned in lexicographic order with reversal symmetry pruned;
/// the witness is the lexicographically least optimal order. Hard-gated at
/// n <= 10.
struct TrelliswidthResult {
    int value;
    CoordinateOrder witness;
};

TrelliswidthResult trelliswidth_exhaustive(const LinearCode& code, int threads = 0);

}  // namespace codewidth

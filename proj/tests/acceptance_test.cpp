// Acceptance suite: reproduces the headline results at desk scale, one
// pass/fail line per criterion. Exits nonzero if any criterion fails.

#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "codewidth/code.hpp"
#include "codewidth/cubic_tree.hpp"
#include "codewidth/ghw.hpp"
#include "codewidth/treedecomp.hpp"
#include "codewidth/trellis.hpp"
#include "codewidth/verify.hpp"

using namespace codewidth;

namespace {

struct Criterion {
    std::string name;
    std::function<bool(std::string&)> run;
};

bool mds_grid(std::string& detail) {
    for (int n = 1; n <= 7; ++n)
        for (int k = 1; k <= n; ++k) {
            const LinearCode code = LinearCode::reed_solomon(n, k, 11);
            const int expected = static_cast<int>(tau_mds(n, k));
            const int tw = treewidth_exhaustive(code).value;
            const int tr = trelliswidth_exhaustive(code).value;
            if (tw != expected || tr != expected) {
                detail = "RS(" + std::to_string(n) + "," + std::to_string(k) + ",11): treewidth " +
                         std::to_string(tw) + ", trelliswidth " + std::to_string(tr) + ", expected " +
                         std::to_string(expected);
                return false;
            }
        }
    detail = "28 codes, both exhaustive searches equal min{k, n-k+1}";
    return true;
}

bool rm_theorem(std::string& detail) {
    const std::vector<std::pair<int, int>> cases = {{0, 2}, {1, 2}, {2, 2}, {0, 3},
                                                    {1, 3}, {2, 3}, {3, 3}};
    for (const auto& [r, m] : cases) {
        const int tw = treewidth_exhaustive(LinearCode::reed_muller(r, m)).value;
        if (tw != tau_rm(r, m)) {
            detail = "RM(" + std::to_string(r) + "," + std::to_string(m) + "): treewidth " +
                     std::to_string(tw) + " != tau " + std::to_string(tau_rm(r, m));
            return false;
        }
    }
    detail = "7 codes, exhaustive treewidth equals the closed-form trelliswidth";
    return true;
}

bool prop1_rm13(std::string& detail) {
    const VerificationReport r = check_prop1_hypothesis(LinearCode::reed_muller(1, 3));
    if (!r.pass || r.params["trees"] != 10395 || r.params["target"] != 1) {
        detail = r.counterexample.dump();
        return false;
    }
    detail = "all 10395 trees have a node with U_{n_1}+U_{n_2}+U_{n_3} <= 1";
    return true;
}

bool trellis_closed_forms(std::string& detail) {
    for (int m = 1; m <= 10; ++m)
        for (int r = 0; r <= m; ++r) {
            const TrellisProfile p = rm_standard_profile(r, m);
            if (p.max_state() != sigma_rm(r, m) || p.max_branch() != tau_rm(r, m)) {
                detail = "counting profile of RM(" + std::to_string(r) + "," + std::to_string(m) +
                         ") disagrees with sigma/tau";
                return false;
            }
        }
    for (int m = 1; m <= 16; ++m)
        for (int r = 0; r <= m; ++r)
            if (tau_rm(r, m) - sigma_rm(r, m) != tau_sigma_gap(r, m)) {
                detail = "gap mismatch at RM(" + std::to_string(r) + "," + std::to_string(m) + ")";
                return false;
            }
    detail = "profile maxima match sigma/tau through m=10; gap criterion through m=16";
    return true;
}

bool ghw_closed_forms(std::string& detail) {
    for (int m = 1; m <= 4; ++m)
        for (int r = 0; r <= m; ++r) {
            const GhwProfile d = ghw_from_uprofile(u_profile_bruteforce(LinearCode::reed_muller(r, m)));
            for (int u = 1; u <= d.k(); ++u)
                if (ghw_rm(u, r, m) != d.at(u)) {
                    detail = "RM(" + std::to_string(r) + "," + std::to_string(m) + ") at u=" +
                             std::to_string(u);
                    return false;
                }
        }
    for (int n = 1; n <= 7; ++n)
        for (int k = 1; k <= n; ++k) {
            const GhwProfile d =
                ghw_from_uprofile(u_profile_bruteforce(LinearCode::reed_solomon(n, k, 11)));
            const GhwProfile closed = ghw_mds(n, k);
            if (d.d != closed.d) {
                detail = "RS(" + std::to_string(n) + "," + std::to_string(k) + ",11)";
                return false;
            }
        }
    detail = "Wei weights match brute force for m <= 4; MDS hierarchy matches for n <= 7";
    return true;
}

bool appendix_b(std::string& detail) {
    for (int m = 2; m <= 12; ++m) {
        const VerificationReport r = check_appendix_b(m);
        if (!r.pass) {
            detail = r.counterexample.dump();
            return false;
        }
    }
    detail = "componentwise inequality holds for all (i, j) pairs, m = 2..12";
    return true;
}

bool identity_sweeps(std::string& detail) {
    for (int m = 1; m <= 24; ++m)
        for (int r = 1; r <= m; ++r)
            if (srm_gap(r, m) != k_rm(r, m) - tau_rm(r, m)) {
                detail = "srm_gap mismatch at (" + std::to_string(r) + "," + std::to_string(m) + ")";
                return false;
            }
    for (int m = 2; m <= 16; ++m)
        for (int r = 1; r <= m - 1; ++r) {
            const VerificationReport rep = check_lemma_uab(r, m);
            if (!rep.pass) {
                detail = rep.counterexample.dump();
                return false;
            }
        }
    detail = "k - tau identity through m=24; U_alpha + U_beta + U_1 identity through m=16";
    return true;
}

bool std_order(std::string& detail) {
    for (int m = 1; m <= 4; ++m)
        for (int r = 0; r <= m; ++r) {
            const VerificationReport rep = check_std_bit_order(r, m);
            if (!rep.pass) {
                detail = rep.counterexample.dump();
                return false;
            }
        }
    detail = "prefix/suffix dims equal the U profile for every RM(r,m), m <= 4";
    return true;
}

bool separators(std::string& detail) {
    long long checked = 0;
    bool ok = true;
    std::string why;
    // The v* bracket is checked from n = 4 on: the lone 3-leaf topology has
    // no node with n_3 in [n/2, 2n/3] (its only split is (1,1,1)), so only
    // the Jordan half of the suite applies there.
    auto check_tree = [&](const CubicTree& t) {
        if (!ok) return;
        const int n = t.num_leaves();
        const NodeSplit jordan = node_split(t, jordan_separator(t));
        if (2 * jordan.counts[2] > n) {
            ok = false;
            why = "jordan separator violation, n=" + std::to_string(n);
            return;
        }
        if (n >= 4) {
            const EdgeSeparator vstar = edge_separator_vstar(t);
            if (2 * vstar.split.counts[2] < n || 3 * vstar.split.counts[2] > 2 * n) {
                ok = false;
                why = "v* range violation, n=" + std::to_string(n);
                return;
            }
        }
        ++checked;
    };
    for (int n = 3; n <= 8; ++n) enumerate_cubic_trees(n, check_tree);
    std::mt19937 rng(0xACCE55);
    for (int trial = 0; trial < 1000 && ok; ++trial) {
        std::uniform_int_distribution<int> ndist(3, 200);
        check_tree(random_cubic_tree(ndist(rng), rng));
    }
    for (int m = 3; m <= 7 && ok; ++m)
        for (int trial = 0; trial < 100 && ok; ++trial) {
            const int n = 1 << m;
            const CubicTree t = random_cubic_tree(n, rng);
            check_tree(t);
            if (!ok) break;
            const int n2 = edge_separator_vstar(t).split.counts[1];
            if (!(6 * n2 > n && 3 * n2 < n)) {
                ok = false;
                why = "n_2* outside (n/6, n/3), n=" + std::to_string(n);
            }
        }
    detail = ok ? std::to_string(checked) + " trees checked, zero violations (v* bracket from n=4)" : why;
    return ok;
}

bool engine_agreement(std::string& detail) {
    for (int m = 1; m <= 4; ++m)
        for (int r = 0; r <= m; ++r) {
            const LinearCode code = LinearCode::reed_muller(r, m);
            const TrellisProfile by_rank = trellis_profile(code, CoordinateOrder::identity(code.length()));
            const TrellisProfile by_count = rm_standard_profile(r, m);
            if (by_rank.state_dims != by_count.state_dims ||
                by_rank.branch_dims != by_count.branch_dims) {
                detail = "RM(" + std::to_string(r) + "," + std::to_string(m) + ")";
                return false;
            }
        }
    detail = "rank-based and gain/fall-count profiles identical at every depth, m <= 4";
    return true;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"MDS theorem: exhaustive treewidth == trelliswidth == min{k, n-k+1}, all n <= 7", mds_grid},
        {"RM theorem: exhaustive treewidth == tau(r, m) for all m <= 3", rm_theorem},
        {"Tree-independent node hypothesis for RM(1,3) over all 10395 cubic trees", prop1_rm13},
        {"Trellis closed forms sigma/tau vs counting profiles (m <= 10, gap to m <= 16)",
         trellis_closed_forms},
        {"GHW closed forms vs subset-rank brute force (RM m <= 4, RS n <= 7)", ghw_closed_forms},
        {"Appendix-B componentwise inequality, m = 2..12", appendix_b},
        {"Identity sweeps: k - tau (m <= 24) and U_alpha + U_beta + U_1 (m <= 16)", identity_sweeps},
        {"Standard-bit-order prefix/suffix dims (m <= 4)", std_order},
        {"Separator suite: Jordan, v* range, and n/6 < n_2* < n/3", separators},
        {"Engine cross-agreement: rank vs gain/fall profiles (m <= 4)", engine_agreement},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        std::string detail;
        bool pass = false;
        try {
            pass = criteria[i].run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::printf("%s criterion %zu: %s (%s)\n", pass ? "PASS" : "FAIL", i + 1,
                    criteria[i].name.c_str(), detail.c_str());
        if (!pass) ++failures;
    }
    if (failures) {
        std::printf("%d of %zu criteria failed\n", failures, criteria.size());
        return 1;
    }
    std::printf("all %zu criteria passed\n", criteria.size());
    return 0;
}

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sortnet/answer.hpp"
#include "sortnet/bst.hpp"
#include "sortnet/oracle.hpp"

namespace sortnet {

enum class CheckMode { strict, lenient };

/// Which proof obligation an untrusted oracle level failed.
enum class OracleFault {
    obligation1,        ///< a triple is not a valid subsumption
    obligation2,        ///< a subsumer is missing from the pruned layer
    unsorted_subsumed,  ///< subsumed networks not strictly increasing
};

/// Strict-mode abort: the oracle failed validation at level `k`.
struct OracleFailure : std::runtime_error {
    OracleFault fault;
    int k;
    int triple_index;  ///< 0-based index of the offending triple, -1 if none

    OracleFailure(OracleFault fault_, int k_, int triple_index_, const std::string& what)
        : std::runtime_error(what), fault(fault_), k(k_), triple_index(triple_index_) {}
};

using NetworkTree = SearchTree<Network, NetworkLess>;

struct Obligation1Result {
    bool ok = true;
    int failing_triple = -1;  ///< first invalid triple, for diagnostics
    std::string detail;
    NetworkTree subsumers;    ///< every subsumer, deduplicated
};

/// Obligation 1: every triple holds a valid permutation image and
/// subsumes(subsumer, subsumed, perm) is true. Also builds the search
/// tree of subsumers for obligation 2. Validation may run across
/// `threads` workers; the result is order-independent.
Obligation1Result oracle_ok_1(const OracleLevel& level, int channels, int threads = 1);

/// R minus removed in one merge pass; both inputs must be strictly
/// increasing in canonical order (contract error otherwise). Elements
/// of removed that are absent from R are skipped silently.
/// merge_comparisons, when given, receives the number of order
/// comparisons spent in the merge itself (<= |R| + |removed|);
/// the upfront sortedness validation is not part of that count.
std::vector<Network> remove_all(const std::vector<Network>& removed,
                                const std::vector<Network>& r,
                                std::size_t* merge_comparisons = nullptr);

/// Obligation 2: values(subsumers) is contained in the strictly
/// increasing sequence r_prime, decided by synchronized ascending
/// traversal (split the tree minimum, advance the sequence on
/// mismatch, fail when the sequence runs out first).
bool oracle_ok_2(const NetworkTree& subsumers, const std::vector<Network>& r_prime);

/// One checked pruning step: validate the level (obligations 1 and 2),
/// then drop all subsumed networks from r. On validation failure,
/// strict mode throws OracleFailure; lenient mode returns r unchanged.
Layer prune_checked(const OracleLevel& level, const Layer& r, CheckMode mode,
                    int threads = 1);

/// First sorting network of the layer in canonical order, if any.
std::optional<Network> has_sorting_network(const Layer& layer);

struct CheckResult {
    Answer answer;
    std::vector<Layer> layers;  ///< pruned layer after each consumed level
    std::vector<LevelTrace> trace;
};

/// The full checked loop: ogenerate, consume one oracle level, prune,
/// test for a sorting network; yes(n,k) on success, maybe when the
/// oracle runs out, no(n,max_size,R) when max_size is reached.
/// n of 0 or 1 answers yes(n,0) immediately.
CheckResult generate_and_prune_checked(int n, int max_size,
                                       const std::vector<OracleLevel>& oracle,
                                       CheckMode mode, int threads = 1);

}  // namespace sortnet

#pragma once

#include <vector>

#include "sortnet/answer.hpp"
#include "sortnet/core.hpp"
#include "sortnet/generate.hpp"

namespace sortnet {

/// One recorded pruning step: `subsumer` stays, `subsumed` goes,
/// and perm witnesses subsumes(subsumer, subsumed, perm).
struct SubsumptionWitness {
    Network subsumer;
    Network subsumed;
    Permutation perm;

    friend bool operator==(const SubsumptionWitness&, const SubsumptionWitness&) = default;
};

struct PruneResult {
    Layer survivors;
    std::vector<SubsumptionWitness> witnesses;
};

/// Deterministic one-pass prune. Candidates are scanned in canonical
/// order; a candidate is removed when an earlier survivor subsumes it
/// (first such survivor in canonical order, permutation chosen by
/// find_subsumption), else it joins the survivor pool for good.
/// `threads` only changes the execution strategy, never the result.
PruneResult prune_search(const Layer& layer, int threads = 1);

struct LevelTrace {
    int k = 0;
    std::size_t generated = 0;
    std::size_t survivors = 0;
    std::size_t witnesses = 0;
    double generate_seconds = 0.0;
    double prune_seconds = 0.0;
};

/// Witnesses for one pruned level, as stored in oracle files.
/// Declared here, next to the triple type; serialization lives with
/// the oracle code.
struct OracleLevel {
    int k = 0;
    std::vector<SubsumptionWitness> triples;

    friend bool operator==(const OracleLevel&, const OracleLevel&) = default;
};

struct ProduceResult {
    Answer answer;
    std::vector<OracleLevel> oracle;  ///< one level per step, k = 1,2,...
    std::vector<Layer> layers;         ///< pruned layer after each step
    std::vector<LevelTrace> trace;
};

/// The producer: iterate ogenerate + prune_search from the empty
/// network, recording witnesses per level, until a sorting network
/// appears (yes) or max_size is exhausted (no). Requires 2 <= n <= cap.
ProduceResult produce(int n, int max_size, int threads = 1);

}  // namespace sortnet

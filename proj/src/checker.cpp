#include "sortnet/checker.hpp"

#include <algorithm>
#include <chrono>

#include "sortnet/parallel.hpp"

namespace sortnet {

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

bool triple_valid(const SubsumptionWitness& triple, int channels) {
    if (triple.perm.size() != channels || !triple.perm.is_valid()) return false;
    try {
        return subsumes(triple.subsumer, triple.subsumed, triple.perm);
    } catch (const std::exception&) {
        return false;  // malformed networks can never validate
    }
}

}  // namespace

Obligation1Result oracle_ok_1(const OracleLevel& level, int channels, int threads) {
    const std::size_t count = level.triples.size();
    std::vector<unsigned char> valid(count, 0);
    parallel_for(count, threads, [&](std::size_t i) {
        valid[i] = triple_valid(level.triples[i], channels) ? 1 : 0;
    });

    Obligation1Result result;
    for (std::size_t i = 0; i < count; ++i) {
        if (!valid[i]) {
            result.ok = false;
            result.failing_triple = static_cast<int>(i);
            result.detail = "triple " + std::to_string(i) + " ('" +
                            format_network(level.triples[i].subsumer) + "' over '" +
                            format_network(level.triples[i].subsumed) +
                            "') is not a valid subsumption";
            return result;
        }
    }
    for (const SubsumptionWitness& triple : level.triples) {
        result.subsumers = result.subsumers.add(triple.subsumer);
    }
    return result;
}

std::vector<Network> remove_all(const std::vector<Network>& removed,
                                const std::vector<Network>& r,
                                std::size_t* merge_comparisons) {
    for (std::size_t i = 1; i < removed.size(); ++i) {
        if (canonical_compare(removed[i - 1], removed[i]) >= 0) {
            throw std::invalid_argument(
                "remove_all: removed sequence not strictly increasing");
        }
    }
    for (std::size_t i = 1; i < r.size(); ++i) {
        if (canonical_compare(r[i - 1], r[i]) >= 0) {
            throw std::invalid_argument("remove_all: R not strictly increasing");
        }
    }

    std::vector<Network> kept;
    kept.reserve(r.size());
    std::size_t comparisons = 0;
    std::size_t j = 0;
    std::size_t i = 0;
    while (i < r.size()) {
        if (j == removed.size()) {
            kept.insert(kept.end(), r.begin() + static_cast<std::ptrdiff_t>(i), r.end());
            break;
        }
        ++comparisons;
        const auto order = canonical_compare(r[i], removed[j]);
        if (order < 0) {
            kept.push_back(r[i]);
            ++i;
        } else if (order == 0) {
            ++i;  // drop it
            ++j;
        } else {
            ++j;  // removed[j] is absent from R: skipped silently
        }
    }
    if (merge_comparisons != nullptr) *merge_comparisons = comparisons;
    return kept;
}

bool oracle_ok_2(const NetworkTree& subsumers, const std::vector<Network>& r_prime) {
    NetworkTree tree = subsumers;
    std::size_t i = 0;
    while (!tree.empty()) {
        auto [wanted, rest] = tree.split_min(Network{});
        while (i < r_prime.size() && canonical_less(r_prime[i], wanted)) ++i;
        if (i == r_prime.size() || !(r_prime[i] == wanted)) return false;
        ++i;
        tree = std::move(rest);
    }
    return true;
}

Layer prune_checked(const OracleLevel& level, const Layer& r, CheckMode mode,
                    int threads) {
    validate_layer(r);
    if (level.k != r.k) {
        throw std::invalid_argument("prune_checked: oracle level k=" +
                                    std::to_string(level.k) +
                                    " does not match layer size " + std::to_string(r.k));
    }

    const Obligation1Result ob1 = oracle_ok_1(level, r.channels, threads);
    if (!ob1.ok) {
        if (mode == CheckMode::strict) {
            throw OracleFailure(OracleFault::obligation1, level.k, ob1.failing_triple,
                                "oracle level k=" + std::to_string(level.k) +
                                    " failed obligation 1: " + ob1.detail);
        }
        return r;
    }

    std::vector<Network> removed;
    removed.reserve(level.triples.size());
    for (const SubsumptionWitness& triple : level.triples) {
        removed.push_back(triple.subsumed);
    }
    for (std::size_t i = 1; i < removed.size(); ++i) {
        if (canonical_compare(removed[i - 1], removed[i]) >= 0) {
            if (mode == CheckMode::strict) {
                throw OracleFailure(OracleFault::unsorted_subsumed, level.k,
                                    static_cast<int>(i),
                                    "oracle level k=" + std::to_string(level.k) +
                                        ": subsumed networks not strictly increasing at triple " +
                                        std::to_string(i));
            }
            return r;
        }
    }

    Layer pruned;
    pruned.channels = r.channels;
    pruned.k = r.k;
    pruned.nets = remove_all(removed, r.nets);

    if (!oracle_ok_2(ob1.subsumers, pruned.nets)) {
        if (mode == CheckMode::strict) {
            throw OracleFailure(OracleFault::obligation2, level.k, -1,
                                "oracle level k=" + std::to_string(level.k) +
                                    " failed obligation 2: a subsumer is missing from the "
                                    "pruned layer");
        }
        return r;
    }
    return pruned;
}

std::optional<Network> has_sorting_network(const Layer& layer) {
    const auto it = std::find_if(layer.nets.begin(), layer.nets.end(),
                                 [](const Network& net) { return is_sorting_network(net); });
    if (it == layer.nets.end()) return std::nullopt;
    return *it;
}

CheckResult generate_and_prune_checked(int n, int max_size,
                                       const std::vector<OracleLevel>& oracle,
                                       CheckMode mode, int threads) {
    if (n > kMaxChannels) {
        throw capacity_error("check: n = " + std::to_string(n) + " above cap " +
                             std::to_string(kMaxChannels));
    }
    if (n < 0) throw std::invalid_argument("check: negative n");
    if (max_size < 0) throw std::invalid_argument("check: negative max_size");

    CheckResult result;
    if (n <= 1) {  // one channel or none is always sorted
        result.answer = Answer::yes(n, 0);
        return result;
    }

    Layer r = initial_layer(n);
    for (int k = 1; k <= max_size; ++k) {
        const auto t0 = std::chrono::steady_clock::now();
        const Layer candidates = ogenerate(r);
        const double generate_seconds = seconds_since(t0);

        if (static_cast<std::size_t>(k - 1) >= oracle.size()) {
            result.answer = Answer::maybe();
            return result;
        }
        const OracleLevel& level = oracle[static_cast<std::size_t>(k - 1)];
        if (level.k != k) {
            throw std::invalid_argument("check: oracle levels not contiguous from k=1");
        }

        const auto t1 = std::chrono::steady_clock::now();
        r = prune_checked(level, candidates, mode, threads);
        const double prune_seconds = seconds_since(t1);

        result.trace.push_back(LevelTrace{k, candidates.size(), r.size(),
                                          level.triples.size(), generate_seconds,
                                          prune_seconds});
        result.layers.push_back(r);

        if (has_sorting_network(r)) {
            result.answer = Answer::yes(n, k);
            return result;
        }
    }
    result.answer = Answer::no(n, max_size, std::move(r));
    return result;
}

}  // namespace sortnet

#include "sortnet/search.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <utility>

#include "sortnet/parallel.hpp"

namespace sortnet {

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

/// First pool member (ascending pool order) subsuming candidate, with
/// the permutation find_subsumption picks for that pair.
std::optional<std::pair<std::uint32_t, Permutation>> first_subsumer(
    const std::vector<std::uint32_t>& pool, std::size_t pool_size,
    const std::vector<NetProfile>& profiles, std::uint32_t candidate, int channels) {
    for (std::size_t s = 0; s < pool_size; ++s) {
        const std::uint32_t idx = pool[s];
        if (auto perm = find_subsumption(profiles[idx], profiles[candidate], channels)) {
            return std::make_pair(idx, std::move(*perm));
        }
    }
    return std::nullopt;
}

}  // namespace

PruneResult prune_search(const Layer& layer, int threads) {
    validate_layer(layer);
    const int n = layer.channels;
    const std::size_t count = layer.nets.size();

    std::vector<NetProfile> profiles(count);
    parallel_for(count, threads,
                 [&](std::size_t i) { profiles[i] = NetProfile::of(layer.nets[i]); });

    // Candidates are scanned in canonical order against the survivors
    // so far. Blocks only batch the scans against the pool frozen at
    // the block start (every pool member precedes every in-block
    // survivor), so the chosen subsumer and permutation match the
    // plain sequential scan exactly.
    constexpr std::size_t kBlock = 64;
    std::vector<std::uint32_t> pool;
    pool.reserve(count);
    PruneResult result;
    result.survivors.channels = n;
    result.survivors.k = layer.k;

    std::vector<std::optional<std::pair<std::uint32_t, Permutation>>> frozen_hit(count);
    for (std::size_t block = 0; block < count; block += kBlock) {
        const std::size_t block_end = std::min(block + kBlock, count);
        const std::size_t frozen = pool.size();
        parallel_for(block_end - block, threads, [&](std::size_t offset) {
            const auto candidate = static_cast<std::uint32_t>(block + offset);
            frozen_hit[candidate] =
                first_subsumer(pool, frozen, profiles, candidate, n);
        });
        for (std::size_t i = block; i < block_end; ++i) {
            auto hit = std::move(frozen_hit[i]);
            if (!hit) {
                for (std::size_t s = frozen; s < pool.size() && !hit; ++s) {
                    const std::uint32_t idx = pool[s];
                    if (auto perm = find_subsumption(profiles[idx], profiles[i], n)) {
                        hit = std::make_pair(idx, std::move(*perm));
                    }
                }
            }
            if (hit) {
                result.witnesses.push_back(SubsumptionWitness{
                    layer.nets[hit->first], layer.nets[i], std::move(hit->second)});
            } else {
                pool.push_back(static_cast<std::uint32_t>(i));
            }
        }
    }

    result.survivors.nets.reserve(pool.size());
    for (const std::uint32_t idx : pool) result.survivors.nets.push_back(layer.nets[idx]);
    return result;
}

ProduceResult produce(int n, int max_size, int threads) {
    if (n > kMaxChannels) {
        throw capacity_error("produce: n = " + std::to_string(n) + " above cap " +
                             std::to_string(kMaxChannels));
    }
    if (n < 2) throw std::invalid_argument("produce: need n >= 2");
    if (max_size < 0) throw std::invalid_argument("produce: negative max_size");

    ProduceResult result;
    Layer r = initial_layer(n);
    for (int k = 1; k <= max_size; ++k) {
        const auto t0 = std::chrono::steady_clock::now();
        const Layer candidates = ogenerate(r);
        const double generate_seconds = seconds_since(t0);

        const auto t1 = std::chrono::steady_clock::now();
        PruneResult pruned = prune_search(candidates, threads);
        const double prune_seconds = seconds_since(t1);

        r = std::move(pruned.survivors);
        result.trace.push_back(LevelTrace{k, candidates.size(), r.size(),
                                          pruned.witnesses.size(), generate_seconds,
                                          prune_seconds});
        result.oracle.push_back(OracleLevel{k, std::move(pruned.witnesses)});
        result.layers.push_back(r);

        if (std::any_of(r.nets.begin(), r.nets.end(),
                        [](const Network& net) { return is_sorting_network(net); })) {
            result.answer = Answer::yes(n, k);
            return result;
        }
    }
    result.answer = Answer::no(n, max_size, std::move(r));
    return result;
}

}  // namespace sortnet

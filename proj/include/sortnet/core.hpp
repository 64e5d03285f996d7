#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sortnet {

/// Hard cap on channel count: the output universe 2^n must fit in a
/// desk-sized occupancy bitset (2^16 bits = 8 KiB per set).
inline constexpr int kMaxChannels = 16;

/// Godel code of a comparator (i,j), i < j: code = j*(j-1)/2 + i.
/// Codes for n <= 16 fit comfortably in 16 bits (max 119).
using Code = std::uint16_t;

/// A 0/1 input or output vector; bit k holds the value on channel k.
using Mask = std::uint32_t;

struct capacity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ChannelPair {
    int lo = 0;
    int hi = 0;
    friend bool operator==(const ChannelPair&, const ChannelPair&) = default;
};

/// code = hi*(hi-1)/2 + lo; strictly increasing in (hi, lo) order.
/// Throws std::invalid_argument unless 0 <= lo < hi.
Code godel_encode(int lo, int hi);

/// Total inverse of godel_encode.
ChannelPair godel_decode(Code code) noexcept;

/// Comparators on n channels, in ascending code order: n*(n-1)/2 of them.
inline int comparator_count(int channels) noexcept {
    return channels * (channels - 1) / 2;
}

struct Comparator {
    Code code = 0;

    Comparator() = default;
    explicit Comparator(Code c) : code(c) {}
    Comparator(int lo, int hi) : code(godel_encode(lo, hi)) {}

    [[nodiscard]] ChannelPair channels() const noexcept { return godel_decode(code); }
    friend bool operator==(const Comparator&, const Comparator&) = default;
};

/// A comparator network: a fixed sequence of comparators on `channels` channels.
struct Network {
    int channels = 0;
    std::vector<Code> comps;

    [[nodiscard]] int size() const noexcept { return static_cast<int>(comps.size()); }
    friend bool operator==(const Network&, const Network&) = default;
};

/// Canonical order: size first, then lexicographic on the code sequence.
std::strong_ordering canonical_compare(const Network& a, const Network& b) noexcept;

inline bool canonical_less(const Network& a, const Network& b) noexcept {
    return canonical_compare(a, b) < 0;
}

struct NetworkLess {
    bool operator()(const Network& a, const Network& b) const noexcept {
        return canonical_less(a, b);
    }
};

/// Text form: comma-separated codes, "-" for the empty network.
std::string format_network(const Network& net);

/// Parses the text form; every code must decode to channels below `channels`.
/// Throws std::invalid_argument on malformed or out-of-range input.
Network parse_network(const std::string& text, int channels);

/// Throws if a comparator reaches outside [0, channels) or channels > cap.
void validate_network(const Network& net);

inline int weight(Mask x) noexcept { return std::popcount(x); }

/// The unique sorted vector of weight w on n channels: all 1s on the top channels.
inline Mask sorted_mask(int w, int channels) noexcept {
    return ((Mask{1} << w) - 1) << (channels - w);
}

inline bool is_sorted_mask(Mask x, int channels) noexcept {
    return x == sorted_mask(weight(x), channels);
}

/// Routes the smaller value to the lower channel; weight is preserved.
inline Mask apply_comparator(Mask x, Comparator c) noexcept {
    const auto [lo, hi] = c.channels();
    const Mask swap = (x >> lo) & ~(x >> hi) & Mask{1};
    return x ^ ((swap << lo) | (swap << hi));
}

Mask eval_network(const Network& net, Mask x) noexcept;

/// Bijection on channel indices, stored as its image sequence.
struct Permutation {
    std::vector<int> image;

    [[nodiscard]] int size() const noexcept { return static_cast<int>(image.size()); }
    [[nodiscard]] bool is_valid() const noexcept;
    static Permutation identity(int n);

    friend bool operator==(const Permutation&, const Permutation&) = default;
};

/// second o first: applies `first`, then `second`.
Permutation compose(const Permutation& second, const Permutation& first);

/// result[perm(i)] = x[i].
Mask permute_mask(const Permutation& perm, Mask x) noexcept;

/// The image of {0,1}^n under a network, as a 2^n-bit occupancy set.
/// Iteration order (ascending mask value) is the canonical set order.
class OutputSet {
public:
    OutputSet() = default;
    explicit OutputSet(int channels);

    [[nodiscard]] int channels() const noexcept { return channels_; }
    [[nodiscard]] bool contains(Mask x) const noexcept {
        return (words_[x >> 6] >> (x & 63)) & 1;
    }
    void insert(Mask x) noexcept { words_[x >> 6] |= std::uint64_t{1} << (x & 63); }
    [[nodiscard]] std::size_t size() const noexcept;
    [[nodiscard]] bool subset_of(const OutputSet& other) const noexcept;

    /// Calls fn(mask) for each member in ascending order.
    template <typename F>
    void for_each(F&& fn) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits != 0) {
                const int b = std::countr_zero(bits);
                bits &= bits - 1;
                fn(static_cast<Mask>(w * 64 + static_cast<std::size_t>(b)));
            }
        }
    }

    friend bool operator==(const OutputSet&, const OutputSet&) = default;

private:
    int channels_ = 0;
    std::vector<std::uint64_t> words_;
};

/// outputs(C) = { C(x) : x in {0,1}^n }. Throws capacity_error for n > cap.
OutputSet outputs(const Network& net);

/// True iff every output vector is sorted (zero-one principle).
bool is_sorting_network(const Network& net);

OutputSet permute_outputs(const Permutation& perm, const OutputSet& set);

/// True iff perm(outputs(a)) is contained in outputs(b).
bool subsumes(const Network& a, const Network& b, const Permutation& perm);

/// Per-network statistics that make subsumption search cheap: the output
/// set, its per-weight class sizes, and per-(channel, weight) one-counts.
struct NetProfile {
    OutputSet out;
    std::uint32_t out_size = 0;
    std::array<std::uint16_t, kMaxChannels + 1> weight_count{};
    std::array<std::array<std::uint16_t, kMaxChannels + 1>, kMaxChannels> chan_weight{};

    static NetProfile of(const Network& net);
};

/// Least permutation (by image sequence) with subsumes(a, b, perm), or
/// nullopt. Rejects without enumeration when |outputs(a)| > |outputs(b)|
/// or some weight class of a is larger than b's.
std::optional<Permutation> find_subsumption(const Network& a, const Network& b);

/// Same, reusing precomputed profiles (the hot path in pruning).
std::optional<Permutation> find_subsumption(const NetProfile& a, const NetProfile& b,
                                            int channels);

}  // namespace sortnet

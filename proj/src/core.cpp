#include "sortnet/core.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace sortnet {

Code godel_encode(int lo, int hi) {
    if (lo < 0 || lo >= hi) {
        throw std::invalid_argument("invalid comparator: require 0 <= lo < hi, got (" +
                                    std::to_string(lo) + "," + std::to_string(hi) + ")");
    }
    return static_cast<Code>(hi * (hi - 1) / 2 + lo);
}

ChannelPair godel_decode(Code code) noexcept {
    int hi = 1;
    while ((hi + 1) * hi / 2 <= static_cast<int>(code)) ++hi;
    return {static_cast<int>(code) - hi * (hi - 1) / 2, hi};
}

std::strong_ordering canonical_compare(const Network& a, const Network& b) noexcept {
    if (a.comps.size() != b.comps.size()) return a.comps.size() <=> b.comps.size();
    for (std::size_t i = 0; i < a.comps.size(); ++i) {
        if (a.comps[i] != b.comps[i]) return a.comps[i] <=> b.comps[i];
    }
    return std::strong_ordering::equal;
}

std::string format_network(const Network& net) {
    if (net.comps.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < net.comps.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(net.comps[i]);
    }
    return out;
}

namespace {

int parse_nonneg(std::string_view token, const char* what) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty()) {
        throw std::invalid_argument(std::string("malformed ") + what + ": '" +
                                    std::string(token) + "'");
    }
    return value;
}

}  // namespace

Network parse_network(const std::string& text, int channels) {
    Network net;
    net.channels = channels;
    if (text == "-") {
        validate_network(net);
        return net;
    }
    if (text.empty()) throw std::invalid_argument("empty network text (use '-')");
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        const int code = parse_nonneg(std::string_view(text).substr(pos, comma - pos),
                                      "comparator code");
        net.comps.push_back(static_cast<Code>(code));
        pos = comma + 1;
    }
    validate_network(net);
    return net;
}

void validate_network(const Network& net) {
    if (net.channels < 0) {
        throw std::invalid_argument("negative channel count");
    }
    if (net.channels > kMaxChannels) {
        throw capacity_error("channel count " + std::to_string(net.channels) +
                             " above cap " + std::to_string(kMaxChannels));
    }
    for (const Code code : net.comps) {
        const auto [lo, hi] = godel_decode(code);
        if (hi >= net.channels) {
            throw std::invalid_argument("comparator code " + std::to_string(code) +
                                        " = (" + std::to_string(lo) + "," + std::to_string(hi) +
                                        ") out of range for " + std::to_string(net.channels) +
                                        " channels");
        }
    }
}

Mask eval_network(const Network& net, Mask x) noexcept {
    for (const Code code : net.comps) x = apply_comparator(x, Comparator(code));
    return x;
}

bool Permutation::is_valid() const noexcept {
    const int n = size();
    if (n > kMaxChannels) return false;
    std::uint32_t seen = 0;
    for (const int v : image) {
        if (v < 0 || v >= n || (seen >> v) & 1) return false;
        seen |= std::uint32_t{1} << v;
    }
    return true;
}

Permutation Permutation::identity(int n) {
    Permutation perm;
    perm.image.resize(static_cast<std::size_t>(n));
    std::iota(perm.image.begin(), perm.image.end(), 0);
    return perm;
}

Permutation compose(const Permutation& second, const Permutation& first) {
    if (second.size() != first.size()) {
        throw std::invalid_argument("permutation size mismatch in compose");
    }
    Permutation result;
    result.image.resize(first.image.size());
    for (std::size_t i = 0; i < first.image.size(); ++i) {
        result.image[i] = second.image[static_cast<std::size_t>(first.image[i])];
    }
    return result;
}

Mask permute_mask(const Permutation& perm, Mask x) noexcept {
    Mask y = 0;
    for (int i = 0; i < perm.size(); ++i) {
        y |= ((x >> i) & Mask{1}) << perm.image[static_cast<std::size_t>(i)];
    }
    return y;
}

OutputSet::OutputSet(int channels)
    : channels_(channels),
      words_((std::size_t{1} << channels) / 64 + ((std::size_t{1} << channels) % 64 != 0)) {}

std::size_t OutputSet::size() const noexcept {
    std::size_t total = 0;
    for (const auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

bool OutputSet::subset_of(const OutputSet& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if ((words_[i] & ~other.words_[i]) != 0) return false;
    }
    return true;
}

OutputSet outputs(const Network& net) {
    validate_network(net);
    OutputSet set(net.channels);
    const Mask limit = Mask{1} << net.channels;
    for (Mask x = 0; x < limit; ++x) set.insert(eval_network(net, x));
    return set;
}

bool is_sorting_network(const Network& net) {
    const OutputSet set = outputs(net);
    bool sorted = true;
    set.for_each([&](Mask m) { sorted = sorted && is_sorted_mask(m, net.channels); });
    return sorted;
}

OutputSet permute_outputs(const Permutation& perm, const OutputSet& set) {
    OutputSet result(set.channels());
    set.for_each([&](Mask m) { result.insert(permute_mask(perm, m)); });
    return result;
}

bool subsumes(const Network& a, const Network& b, const Permutation& perm) {
    if (a.channels != b.channels) {
        throw std::invalid_argument("subsumes: channel counts differ");
    }
    if (perm.size() != a.channels || !perm.is_valid()) {
        throw std::invalid_argument("subsumes: invalid permutation");
    }
    const OutputSet out_a = outputs(a);
    const OutputSet out_b = outputs(b);
    bool contained = true;
    out_a.for_each([&](Mask m) {
        contained = contained && out_b.contains(permute_mask(perm, m));
    });
    return contained;
}

NetProfile NetProfile::of(const Network& net) {
    NetProfile p;
    p.out = outputs(net);
    p.out.for_each([&](Mask m) {
        ++p.out_size;
        const int w = weight(m);
        ++p.weight_count[static_cast<std::size_t>(w)];
        Mask bits = m;
        while (bits != 0) {
            const int ch = std::countr_zero(bits);
            bits &= bits - 1;
            ++p.chan_weight[static_cast<std::size_t>(ch)][static_cast<std::size_t>(w)];
        }
    });
    return p;
}

namespace {

/// Depth-first search over images in ascending lexicographic order.
/// compat[i][p] holds the per-(channel, weight) necessary condition for
/// mapping channel i onto p; the full containment test runs at the leaves.
struct SubsumptionSearch {
    const NetProfile& a;
    const NetProfile& b;
    int n;
    std::array<std::uint32_t, kMaxChannels> compat{};
    std::array<int, kMaxChannels> image{};
    std::uint32_t used = 0;

    bool viable(int i, int p) const noexcept {
        for (int w = 1; w < n; ++w) {
            if (a.chan_weight[static_cast<std::size_t>(i)][static_cast<std::size_t>(w)] >
                b.chan_weight[static_cast<std::size_t>(p)][static_cast<std::size_t>(w)]) {
                return false;
            }
        }
        return true;
    }

    bool contained() const noexcept {
        bool ok = true;
        a.out.for_each([&](Mask m) {
            if (!ok) return;
            Mask y = 0;
            Mask bits = m;
            while (bits != 0) {
                const int ch = std::countr_zero(bits);
                bits &= bits - 1;
                y |= Mask{1} << image[static_cast<std::size_t>(ch)];
            }
            ok = b.out.contains(y);
        });
        return ok;
    }

    bool dfs(int depth) noexcept {
        if (depth == n) return contained();
        std::uint32_t options = compat[static_cast<std::size_t>(depth)] & ~used;
        while (options != 0) {
            const int p = std::countr_zero(options);
            options &= options - 1;
            image[static_cast<std::size_t>(depth)] = p;
            used |= std::uint32_t{1} << p;
            if (dfs(depth + 1)) return true;
            used &= ~(std::uint32_t{1} << p);
        }
        return false;
    }
};

}  // namespace

std::optional<Permutation> find_subsumption(const NetProfile& a, const NetProfile& b,
                                            int channels) {
    if (a.out_size > b.out_size) return std::nullopt;
    for (int w = 0; w <= channels; ++w) {
        if (a.weight_count[static_cast<std::size_t>(w)] >
            b.weight_count[static_cast<std::size_t>(w)]) {
            return std::nullopt;
        }
    }
    SubsumptionSearch search{a, b, channels};
    for (int i = 0; i < channels; ++i) {
        for (int p = 0; p < channels; ++p) {
            if (search.viable(i, p)) search.compat[static_cast<std::size_t>(i)] |= 1u << p;
        }
        if (search.compat[static_cast<std::size_t>(i)] == 0) return std::nullopt;
    }
    if (!search.dfs(0)) return std::nullopt;
    Permutation perm;
    perm.image.assign(search.image.begin(), search.image.begin() + channels);
    return perm;
}

std::optional<Permutation> find_subsumption(const Network& a, const Network& b) {
    if (a.channels != b.channels) {
        throw std::invalid_argument("find_subsumption: channel counts differ");
    }
    return find_subsumption(NetProfile::of(a), NetProfile::of(b), a.channels);
}

}  // namespace sortnet

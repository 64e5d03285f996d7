#include "sortnet/generate.hpp"

#include <stdexcept>
#include <string>

namespace sortnet {

Layer initial_layer(int channels) {
    Layer layer;
    layer.channels = channels;
    layer.k = 0;
    layer.nets.push_back(Network{channels, {}});
    validate_layer(layer);
    return layer;
}

void validate_layer(const Layer& layer) {
    if (layer.k < 0) throw std::invalid_argument("layer: negative size");
    for (std::size_t i = 0; i < layer.nets.size(); ++i) {
        const Network& net = layer.nets[i];
        validate_network(net);
        if (net.channels != layer.channels) {
            throw std::invalid_argument("layer: network " + std::to_string(i) +
                                        " has wrong channel count");
        }
        if (net.size() != layer.k) {
            throw std::invalid_argument("layer: network " + std::to_string(i) +
                                        " has size " + std::to_string(net.size()) +
                                        ", expected " + std::to_string(layer.k));
        }
        if (i > 0 && canonical_compare(layer.nets[i - 1], net) >= 0) {
            throw std::invalid_argument("layer: networks out of canonical order at index " +
                                        std::to_string(i));
        }
    }
}

Layer generate(const Layer& layer) {
    const int codes = comparator_count(layer.channels);
    Layer next;
    next.channels = layer.channels;
    next.k = layer.k + 1;
    next.nets.reserve(layer.nets.size() * static_cast<std::size_t>(codes));
    for (const Network& parent : layer.nets) {
        for (Code c = 0; c < static_cast<Code>(codes); ++c) {
            Network child = parent;
            child.comps.push_back(c);
            next.nets.push_back(std::move(child));
        }
    }
    return next;
}

std::vector<Code> useful_codes(const OutputSet& out, int channels) {
    // Code c = (lo,hi) is useful iff some output has a 1 on lo and a
    // 0 on hi; collect the union of those pairs over all outputs.
    std::uint64_t seen[2] = {0, 0};
    const Mask full = (Mask{1} << channels) - 1;
    out.for_each([&](Mask x) {
        const Mask zeros = ~x & full;
        Mask hi_bits = zeros;
        while (hi_bits != 0) {
            const int hi = std::countr_zero(hi_bits);
            hi_bits &= hi_bits - 1;
            Mask lo_bits = x & ((Mask{1} << hi) - 1);
            while (lo_bits != 0) {
                const int lo = std::countr_zero(lo_bits);
                lo_bits &= lo_bits - 1;
                const Code c = godel_encode(lo, hi);
                seen[c >> 6] |= std::uint64_t{1} << (c & 63);
            }
        }
    });
    std::vector<Code> result;
    const int codes = comparator_count(channels);
    for (Code c = 0; c < static_cast<Code>(codes); ++c) {
        if ((seen[c >> 6] >> (c & 63)) & 1) result.push_back(c);
    }
    return result;
}

Layer ogenerate(const Layer& layer) {
    Layer next;
    next.channels = layer.channels;
    next.k = layer.k + 1;
    for (const Network& parent : layer.nets) {
        for (const Code c : useful_codes(outputs(parent), layer.channels)) {
            Network child = parent;
            child.comps.push_back(c);
            next.nets.push_back(std::move(child));
        }
    }
    return next;
}

}  // namespace sortnet

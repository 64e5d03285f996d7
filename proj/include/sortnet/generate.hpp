#pragma once

#include <vector>

#include "sortnet/core.hpp"

namespace sortnet {

/// All candidate (or surviving) networks of one size, kept strictly
/// increasing in canonical order with no duplicates.
struct Layer {
    int channels = 0;
    int k = 0;
    std::vector<Network> nets;

    [[nodiscard]] std::size_t size() const noexcept { return nets.size(); }
    friend bool operator==(const Layer&, const Layer&) = default;
};

/// The size-0 layer holding only the empty network.
Layer initial_layer(int channels);

/// Throws std::invalid_argument unless the layer invariants hold
/// (sorted, duplicate-free, every net of size k on `channels` channels).
void validate_layer(const Layer& layer);

/// Extends every network by every comparator, in canonical order:
/// parents in order, appended codes ascending. |out| = |in| * n(n-1)/2.
Layer generate(const Layer& layer);

/// As generate, but drops extensions by a redundant comparator: c is
/// redundant for C when appending it changes no output of C, i.e. no
/// output has a 1 on c.lo and a 0 on c.hi.
Layer ogenerate(const Layer& layer);

/// The comparator codes that are non-redundant for a network with the
/// given output set (ascending). Exposed for tests.
std::vector<Code> useful_codes(const OutputSet& out, int channels);

}  // namespace sortnet

#pragma once

#include <string>

#include "sortnet/generate.hpp"

namespace sortnet {

/// Result of a generate-and-prune run. `yes(n,k)`: a size-k sorting
/// network on n channels exists and none smaller does. `no(n,k,R)`:
/// no sorting network of size <= k exists; R is the final layer.
/// `maybe`: the oracle ran out before the question was settled.
struct Answer {
    enum class Kind { yes, no, maybe };

    Kind kind = Kind::maybe;
    int n = 0;
    int k = 0;
    Layer layer;  ///< populated for `no` only

    static Answer yes(int n, int k) { return {Kind::yes, n, k, {}}; }
    static Answer no(int n, int k, Layer layer) {
        return {Kind::no, n, k, std::move(layer)};
    }
    static Answer maybe() { return {}; }
};

/// The machine-readable line: "ANSWER yes n=<n> k=<k>",
/// "ANSWER no n=<n> k=<k>", or "ANSWER maybe".
std::string format_answer(const Answer& answer);

}  // namespace sortnet

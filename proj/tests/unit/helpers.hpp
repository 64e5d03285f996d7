#pragma once

// Independent reference implementations used to cross-check the
// library. Everything here works on explicit value vectors, std::set
// and std::next_permutation — deliberately naive and unrelated to the
// bit-parallel code under test.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "sortnet/core.hpp"

namespace testref {

inline std::vector<int> mask_to_vec(unsigned mask, int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = (mask >> i) & 1u;
    return v;
}

inline unsigned vec_to_mask(const std::vector<int>& v) {
    unsigned mask = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i]) mask |= 1u << i;
    }
    return mask;
}

/// Comparator semantics on an explicit value vector: min to the lower
/// channel index.
inline std::vector<int> apply_net(const sortnet::Network& net, std::vector<int> v) {
    for (const auto code : net.comps) {
        const auto [lo, hi] = sortnet::godel_decode(code);
        if (v[static_cast<std::size_t>(lo)] > v[static_cast<std::size_t>(hi)]) {
            std::swap(v[static_cast<std::size_t>(lo)], v[static_cast<std::size_t>(hi)]);
        }
    }
    return v;
}

inline bool sorts_all_01(const sortnet::Network& net) {
    for (unsigned x = 0; x < (1u << net.channels); ++x) {
        const auto v = apply_net(net, mask_to_vec(x, net.channels));
        if (!std::is_sorted(v.begin(), v.end())) return false;
    }
    return true;
}

inline std::set<unsigned> naive_outputs(const sortnet::Network& net) {
    std::set<unsigned> out;
    for (unsigned x = 0; x < (1u << net.channels); ++x) {
        out.insert(vec_to_mask(apply_net(net, mask_to_vec(x, net.channels))));
    }
    return out;
}

/// y[image[i]] = x[i], on explicit vectors.
inline unsigned apply_perm(const std::vector<int>& image, unsigned mask, int n) {
    const auto x = mask_to_vec(mask, n);
    std::vector<int> y(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        y[static_cast<std::size_t>(image[static_cast<std::size_t>(i)])] =
            x[static_cast<std::size_t>(i)];
    }
    return vec_to_mask(y);
}

inline bool naive_subsumes(const sortnet::Network& a, const sortnet::Network& b,
                           const std::vector<int>& image) {
    const auto out_b = naive_outputs(b);
    for (const unsigned x : naive_outputs(a)) {
        if (!out_b.contains(apply_perm(image, x, a.channels))) return false;
    }
    return true;
}

inline bool naive_subsumes(const sortnet::Network& a, const sortnet::Network& b,
                           const sortnet::Permutation& perm) {
    return naive_subsumes(a, b, perm.image);
}

/// First permutation image, in lexicographic order over all n!, that
/// witnesses subsumption — the reference for find_subsumption.
inline std::optional<std::vector<int>> exhaustive_subsumption(const sortnet::Network& a,
                                                              const sortnet::Network& b) {
    std::vector<int> image(static_cast<std::size_t>(a.channels));
    std::iota(image.begin(), image.end(), 0);
    do {
        if (naive_subsumes(a, b, image)) return image;
    } while (std::next_permutation(image.begin(), image.end()));
    return std::nullopt;
}

inline sortnet::Network random_network(std::mt19937& rng, int channels, int size) {
    std::uniform_int_distribution<int> code(0, sortnet::comparator_count(channels) - 1);
    sortnet::Network net;
    net.channels = channels;
    for (int i = 0; i < size; ++i) {
        net.comps.push_back(static_cast<sortnet::Code>(code(rng)));
    }
    return net;
}

/// All networks on `channels` channels with exactly `size` comparators,
/// in canonical order (odometer over code sequences).
inline std::vector<sortnet::Network> all_networks(int channels, int size) {
    const int codes = sortnet::comparator_count(channels);
    std::vector<sortnet::Network> nets;
    std::vector<int> digits(static_cast<std::size_t>(size), 0);
    while (true) {
        sortnet::Network net;
        net.channels = channels;
        for (const int d : digits) net.comps.push_back(static_cast<sortnet::Code>(d));
        nets.push_back(std::move(net));
        int pos = size - 1;
        while (pos >= 0 && digits[static_cast<std::size_t>(pos)] == codes - 1) {
            digits[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++digits[static_cast<std::size_t>(pos)];
    }
    return nets;
}

}  // namespace testref

// Process-level and filesystem utilities for driving the CLI binary.
namespace testutil {

struct CliResult {
    int exit_code = -1;
    std::string output;  ///< stdout and stderr interleaved

    [[nodiscard]] bool contains(const std::string& needle) const {
        return output.find(needle) != std::string::npos;
    }

    /// The mandatory machine-readable last line.
    [[nodiscard]] std::string answer_line() const {
        std::string line;
        std::size_t pos = 0;
        while (pos < output.size()) {
            const std::size_t eol = std::min(output.find('\n', pos), output.size());
            const std::string candidate = output.substr(pos, eol - pos);
            if (candidate.rfind("ANSWER ", 0) == 0) line = candidate;
            pos = eol + 1;
        }
        return line;
    }
};

/// Runs `<command line> 2>&1` through the shell.
inline CliResult run_command(const std::string& command_line) {
    CliResult result;
    const std::string full = command_line + " 2>&1";
    FILE* pipe = ::popen(full.c_str(), "r");
    if (pipe == nullptr) return result;
    char buffer[4096];
    std::size_t got = 0;
    while ((got = std::fread(buffer, 1, sizeof buffer, pipe)) > 0) {
        result.output.append(buffer, got);
    }
    const int status = ::pclose(pipe);
    if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
    return result;
}

/// Scratch directory for files a test writes, removed on destruction.
struct ScratchDir {
    std::filesystem::path path;

    ScratchDir() {
        std::string tmpl =
            (std::filesystem::temp_directory_path() / "sortnet-test-XXXXXX").string();
        path = ::mkdtemp(tmpl.data());
    }
    ~ScratchDir() {
        std::error_code ec;
        std::filesystem::remove_all(path, ec);
    }
    ScratchDir(const ScratchDir&) = delete;
    ScratchDir& operator=(const ScratchDir&) = delete;

    [[nodiscard]] std::string file(const std::string& name) const {
        return (path / name).string();
    }
};

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << text;
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in),
                       std::istreambuf_iterator<char>());
}

}  // namespace testutil

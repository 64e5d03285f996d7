#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "sortnet/search.hpp"

namespace sortnet {

enum class OracleKind { raw, reduced };

/// A whole oracle file: self-describing header plus one level per
/// pruning step, k contiguous from 1. channels == -1 marks the empty
/// file (no header present).
struct OracleFile {
    int channels = -1;
    OracleKind kind = OracleKind::raw;
    std::vector<OracleLevel> levels;

    friend bool operator==(const OracleFile&, const OracleFile&) = default;
};

/// Syntax or validation error in an oracle file; carries the 1-based
/// line number it was detected on (0 when not line-specific).
struct OracleParseError : std::runtime_error {
    std::size_t line;
    OracleParseError(std::size_t line_number, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_number) + ": " + what),
          line(line_number) {}
};

/// Error raised while preprocessing an untrusted oracle level:
/// duplicate removal of one network, or a subsumption cycle.
struct PreprocessError : std::runtime_error {
    int level_k;
    PreprocessError(int k, const std::string& what)
        : std::runtime_error("level k=" + std::to_string(k) + ": " + what), level_k(k) {}
};

/// Parses the text format. Rejects malformed lines, out-of-range
/// codes, non-bijective permutation images, networks whose size is
/// not the level's k, and non-contiguous level numbering. A file with
/// no content lines at all yields zero levels (channels == -1).
OracleFile read_oracle_text(const std::string& text);
OracleFile read_oracle(const std::string& path);

/// Emits exactly the grammar read_oracle accepts, deterministically.
/// Requires a real header (channels >= 0).
std::string write_oracle_text(const OracleFile& oracle);
void write_oracle(const OracleFile& oracle, const std::string& path);

/// Subsumption graph of one level: an edge subsumed -> subsumer per
/// triple, labeled with the witness permutation. Out-degree <= 1 and
/// acyclicity are enforced at build time.
struct SubsumptionGraph {
    int channels = 0;
    int k = 0;
    struct Edge {
        Network subsumer;
        Permutation perm;
    };
    /// subsumed network -> its one outgoing edge, in canonical order.
    std::map<Network, Edge, NetworkLess> edges;
};

/// One edge per triple. Throws PreprocessError on a network removed
/// twice (out-degree 2) or on a cycle.
SubsumptionGraph build_graph(const OracleLevel& level, int channels);

/// Collapses every path to its root: emits one triple per subsumed
/// network, subsumer = the path's terminal node, permutation = the
/// composition of the labels along the path (so that
/// subsumes(subsumer, subsumed, perm) still holds), sorted by
/// subsumed network in canonical order.
OracleLevel reduce(const SubsumptionGraph& graph);

/// build_graph + reduce on every level; errors carry the level's k.
std::vector<OracleLevel> preprocess(const std::vector<OracleLevel>& raw, int channels);

}  // namespace sortnet

#include "sortnet/oracle.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string_view>

namespace sortnet {

namespace {

bool consume_prefix(std::string_view& s, std::string_view prefix) {
    if (!s.starts_with(prefix)) return false;
    s.remove_prefix(prefix.size());
    return true;
}

/// Parses a leading nonnegative integer, consuming its digits.
std::optional<int> consume_int(std::string_view& s) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr == s.data()) return std::nullopt;
    s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
    return value;
}

struct LineReader {
    std::string_view text;
    std::size_t pos = 0;
    std::size_t line_number = 0;

    /// Next content line (skipping comments); nullopt at end of input.
    /// Blank lines are not part of the grammar and are rejected.
    std::optional<std::string_view> next() {
        while (pos < text.size()) {
            const std::size_t eol = std::min(text.find('\n', pos), text.size());
            const std::string_view line = text.substr(pos, eol - pos);
            pos = eol + 1;
            ++line_number;
            if (line.starts_with('#')) continue;
            if (line.empty()) throw OracleParseError(line_number, "blank line");
            return line;
        }
        return std::nullopt;
    }
};

Network parse_network_field(std::string_view field, int channels, int expected_size,
                            std::size_t line) {
    Network net;
    try {
        net = parse_network(std::string(field), channels);
    } catch (const std::exception& e) {
        throw OracleParseError(line, e.what());
    }
    if (net.size() != expected_size) {
        throw OracleParseError(line, "network of size " + std::to_string(net.size()) +
                                         " in a level of size " +
                                         std::to_string(expected_size));
    }
    return net;
}

Permutation parse_perm_field(std::string_view field, int channels, std::size_t line) {
    Permutation perm;
    std::size_t start = 0;
    while (start <= field.size()) {
        const std::size_t space = std::min(field.find(' ', start), field.size());
        std::string_view token = field.substr(start, space - start);
        const auto value = consume_int(token);
        if (!value || !token.empty()) {
            throw OracleParseError(line, "malformed permutation image");
        }
        perm.image.push_back(*value);
        start = space + 1;
    }
    if (perm.size() != channels || !perm.is_valid()) {
        throw OracleParseError(line, "non-bijective permutation image on " +
                                         std::to_string(channels) + " channels");
    }
    return perm;
}

SubsumptionWitness parse_triple(std::string_view line, int channels, int k,
                                std::size_t line_number) {
    const std::size_t sep1 = line.find(" ; ");
    if (sep1 == std::string_view::npos) {
        throw OracleParseError(line_number, "expected '<net> ; <net> ; <perm>'");
    }
    const std::size_t sep2 = line.find(" ; ", sep1 + 3);
    if (sep2 == std::string_view::npos) {
        throw OracleParseError(line_number, "expected '<net> ; <net> ; <perm>'");
    }
    SubsumptionWitness triple;
    triple.subsumer =
        parse_network_field(line.substr(0, sep1), channels, k, line_number);
    triple.subsumed = parse_network_field(line.substr(sep1 + 3, sep2 - sep1 - 3),
                                          channels, k, line_number);
    triple.perm = parse_perm_field(line.substr(sep2 + 3), channels, line_number);
    return triple;
}

}  // namespace

OracleFile read_oracle_text(const std::string& text) {
    LineReader reader{text};
    OracleFile oracle;

    const auto header = reader.next();
    if (!header) return oracle;  // no content lines: zero levels

    std::string_view h = *header;
    if (!consume_prefix(h, "ORACLE v1 n=")) {
        throw OracleParseError(reader.line_number,
                               "expected header 'ORACLE v1 n=<channels> kind=<raw|reduced>'");
    }
    const auto n = consume_int(h);
    if (!n || *n < 0 || *n > kMaxChannels) {
        throw OracleParseError(reader.line_number, "channel count out of range in header");
    }
    oracle.channels = *n;
    if (!consume_prefix(h, " kind=")) {
        throw OracleParseError(reader.line_number, "expected 'kind=<raw|reduced>' in header");
    }
    if (h == "raw") {
        oracle.kind = OracleKind::raw;
    } else if (h == "reduced") {
        oracle.kind = OracleKind::reduced;
    } else {
        throw OracleParseError(reader.line_number, "unknown oracle kind");
    }

    while (const auto line = reader.next()) {
        std::string_view l = *line;
        if (!consume_prefix(l, "LEVEL k=")) {
            throw OracleParseError(reader.line_number, "expected 'LEVEL k=<size> count=<m>'");
        }
        const auto k = consume_int(l);
        const int expected_k = static_cast<int>(oracle.levels.size()) + 1;
        if (!k || *k != expected_k) {
            throw OracleParseError(reader.line_number,
                                   "levels must be contiguous from k=1; expected k=" +
                                       std::to_string(expected_k));
        }
        if (!consume_prefix(l, " count=")) {
            throw OracleParseError(reader.line_number, "expected 'count=<m>' in level header");
        }
        const auto count = consume_int(l);
        if (!count || *count < 0 || !l.empty()) {
            throw OracleParseError(reader.line_number, "malformed level header");
        }
        OracleLevel level;
        level.k = *k;
        level.triples.reserve(static_cast<std::size_t>(*count));
        for (int i = 0; i < *count; ++i) {
            const auto triple_line = reader.next();
            if (!triple_line) {
                throw OracleParseError(reader.line_number,
                                       "unexpected end of file: level k=" + std::to_string(*k) +
                                           " declares count=" + std::to_string(*count) +
                                           " but has only " + std::to_string(i) + " triples");
            }
            level.triples.push_back(
                parse_triple(*triple_line, oracle.channels, *k, reader.line_number));
        }
        oracle.levels.push_back(std::move(level));
    }
    return oracle;
}

OracleFile read_oracle(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open oracle file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw std::runtime_error("error reading oracle file: " + path);
    return read_oracle_text(buffer.str());
}

std::string write_oracle_text(const OracleFile& oracle) {
    if (oracle.channels < 0 || oracle.channels > kMaxChannels) {
        throw std::invalid_argument("oracle writer needs a channel count in range");
    }
    std::string out = "ORACLE v1 n=" + std::to_string(oracle.channels) +
                      " kind=" + (oracle.kind == OracleKind::raw ? "raw" : "reduced") + "\n";
    for (const OracleLevel& level : oracle.levels) {
        out += "LEVEL k=" + std::to_string(level.k) +
               " count=" + std::to_string(level.triples.size()) + "\n";
        for (const SubsumptionWitness& triple : level.triples) {
            out += format_network(triple.subsumer);
            out += " ; ";
            out += format_network(triple.subsumed);
            out += " ; ";
            for (std::size_t i = 0; i < triple.perm.image.size(); ++i) {
                if (i > 0) out += ' ';
                out += std::to_string(triple.perm.image[i]);
            }
            out += '\n';
        }
    }
    return out;
}

void write_oracle(const OracleFile& oracle, const std::string& path) {
    const std::string text = write_oracle_text(oracle);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot create oracle file: " + path);
    out << text;
    out.flush();
    if (!out) throw std::runtime_error("error writing oracle file: " + path);
}

SubsumptionGraph build_graph(const OracleLevel& level, int channels) {
    SubsumptionGraph graph;
    graph.channels = channels;
    graph.k = level.k;
    for (const SubsumptionWitness& triple : level.triples) {
        const auto [it, inserted] = graph.edges.emplace(
            triple.subsumed, SubsumptionGraph::Edge{triple.subsumer, triple.perm});
        if (!inserted) {
            throw PreprocessError(level.k, "network '" + format_network(triple.subsumed) +
                                               "' removed by two different subsumptions");
        }
    }
    // Walk every path once; a path that revisits a node currently on
    // the walk is a cycle. 0 = unvisited, 1 = on walk, 2 = done.
    std::map<Network, int, NetworkLess> state;
    for (const auto& [start, edge] : graph.edges) {
        if (state[start] == 2) continue;
        std::vector<const Network*> walk;
        const Network* node = &start;
        while (true) {
            const int s = state[*node];
            if (s == 1) {
                throw PreprocessError(level.k, "subsumption cycle through '" +
                                                   format_network(*node) + "'");
            }
            if (s == 2) break;
            state[*node] = 1;
            walk.push_back(node);
            const auto it = graph.edges.find(*node);
            if (it == graph.edges.end()) break;  // reached a root
            node = &it->second.subsumer;
        }
        for (const Network* visited : walk) state[*visited] = 2;
    }
    return graph;
}

OracleLevel reduce(const SubsumptionGraph& graph) {
    OracleLevel level;
    level.k = graph.k;
    level.triples.reserve(graph.edges.size());
    for (const auto& [subsumed, edge] : graph.edges) {
        Permutation perm = edge.perm;
        const Network* target = &edge.subsumer;
        for (auto it = graph.edges.find(*target); it != graph.edges.end();
             it = graph.edges.find(*target)) {
            // perm maps out(target) into out(subsumed); the next label
            // maps out(next target) into out(target). Chaining them
            // applies the label first, then the accumulated map.
            perm = compose(perm, it->second.perm);
            target = &it->second.subsumer;
        }
        level.triples.push_back(SubsumptionWitness{*target, subsumed, std::move(perm)});
    }
    return level;  // std::map iteration keeps subsumed networks sorted
}

std::vector<OracleLevel> preprocess(const std::vector<OracleLevel>& raw, int channels) {
    std::vector<OracleLevel> reduced;
    reduced.reserve(raw.size());
    for (const OracleLevel& level : raw) {
        reduced.push_back(reduce(build_graph(level, channels)));
    }
    return reduced;
}

}  // namespace sortnet

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sortnet/checker.hpp"
#include "sortnet/oracle.hpp"
#include "sortnet/search.hpp"

namespace py = pybind11;

namespace {

using namespace sortnet;

Network to_network(const std::vector<int>& codes, int channels) {
    Network net;
    net.channels = channels;
    net.comps.reserve(codes.size());
    for (const int code : codes) {
        if (code < 0 || code > 0xffff) throw std::invalid_argument("comparator code out of range");
        net.comps.push_back(static_cast<Code>(code));
    }
    validate_network(net);
    return net;
}

std::vector<int> from_network(const Network& net) {
    return std::vector<int>(net.comps.begin(), net.comps.end());
}

Permutation to_perm(const std::vector<int>& image) {
    Permutation perm;
    perm.image = image;
    if (!perm.is_valid()) throw std::invalid_argument("not a permutation image");
    return perm;
}

py::dict answer_to_dict(const Answer& answer) {
    py::dict d;
    switch (answer.kind) {
        case Answer::Kind::yes:
            d["kind"] = "yes";
            break;
        case Answer::Kind::no:
            d["kind"] = "no";
            break;
        case Answer::Kind::maybe:
            d["kind"] = "maybe";
            return d;
    }
    d["n"] = answer.n;
    d["k"] = answer.k;
    return d;
}

py::list trace_to_list(const std::vector<LevelTrace>& trace) {
    py::list levels;
    for (const LevelTrace& level : trace) {
        py::dict d;
        d["k"] = level.k;
        d["generated"] = level.generated;
        d["survivors"] = level.survivors;
        d["witnesses"] = level.witnesses;
        levels.append(d);
    }
    return levels;
}

int default_max_size(int n, const std::optional<int>& max_size) {
    return max_size.value_or(comparator_count(n));
}

}  // namespace

PYBIND11_MODULE(_sortnet, m) {
    m.doc() = "Minimal-size sorting network search and proof re-checking.\n"
              "Networks are lists of comparator codes (code = hi*(hi-1)/2 + lo);\n"
              "0/1 vectors are bit masks with bit k holding channel k.";
    m.attr("__version__") = "1.0.0";
    m.attr("MAX_CHANNELS") = kMaxChannels;

    m.def("godel_encode", &godel_encode, py::arg("lo"), py::arg("hi"),
          "Comparator code of the pair (lo, hi), lo < hi.");
    m.def(
        "godel_decode",
        [](int code) {
            if (code < 0 || code > 0xffff) throw std::invalid_argument("code out of range");
            const auto [lo, hi] = godel_decode(static_cast<Code>(code));
            return py::make_tuple(lo, hi);
        },
        py::arg("code"), "The (lo, hi) channel pair of a comparator code.");
    m.def(
        "parse_network",
        [](const std::string& text, int channels) {
            return from_network(parse_network(text, channels));
        },
        py::arg("text"), py::arg("channels"),
        "Parse the text form: comma-separated codes, '-' for the empty network.");
    m.def(
        "format_network",
        [](const std::vector<int>& codes, int channels) {
            return format_network(to_network(codes, channels));
        },
        py::arg("codes"), py::arg("channels"), "The canonical text form of a network.");
    m.def(
        "apply_network",
        [](const std::vector<int>& codes, int channels, unsigned x) {
            if (x >> channels) throw std::invalid_argument("input mask out of range");
            return static_cast<unsigned>(eval_network(to_network(codes, channels), x));
        },
        py::arg("codes"), py::arg("channels"), py::arg("x"),
        "Run a 0/1 input mask through the network.");
    m.def(
        "outputs",
        [](const std::vector<int>& codes, int channels) {
            std::vector<unsigned> result;
            outputs(to_network(codes, channels)).for_each([&](Mask mask) {
                result.push_back(mask);
            });
            return result;
        },
        py::arg("codes"), py::arg("channels"),
        "All outputs over 0/1 inputs, ascending.");
    m.def(
        "is_sorting_network",
        [](const std::vector<int>& codes, int channels) {
            return is_sorting_network(to_network(codes, channels));
        },
        py::arg("codes"), py::arg("channels"));
    m.def(
        "subsumes",
        [](const std::vector<int>& a, const std::vector<int>& b, int channels,
           const std::vector<int>& perm) {
            return subsumes(to_network(a, channels), to_network(b, channels), to_perm(perm));
        },
        py::arg("a"), py::arg("b"), py::arg("channels"), py::arg("perm"),
        "True iff perm maps every output of a into the outputs of b.");
    m.def(
        "find_subsumption",
        [](const std::vector<int>& a, const std::vector<int>& b,
           int channels) -> std::optional<std::vector<int>> {
            const auto perm =
                find_subsumption(to_network(a, channels), to_network(b, channels));
            if (!perm) return std::nullopt;
            return perm->image;
        },
        py::arg("a"), py::arg("b"), py::arg("channels"),
        "Least witnessing permutation image, or None.");
    m.def(
        "produce",
        [](int n, std::optional<int> max_size, int threads) {
            const ProduceResult result = produce(n, default_max_size(n, max_size), threads);
            py::dict d;
            d["answer"] = answer_to_dict(result.answer);
            d["levels"] = trace_to_list(result.trace);
            return d;
        },
        py::arg("n"), py::arg("max_size") = std::nullopt, py::arg("threads") = 1,
        "Generate-and-prune search; returns the answer and per-level sizes.");
    m.def(
        "produce_to_file",
        [](int n, const std::string& path, std::optional<int> max_size, int threads) {
            const ProduceResult result = produce(n, default_max_size(n, max_size), threads);
            write_oracle(OracleFile{n, OracleKind::raw, result.oracle}, path);
            return answer_to_dict(result.answer);
        },
        py::arg("n"), py::arg("path"), py::arg("max_size") = std::nullopt,
        py::arg("threads") = 1, "produce() that also writes the raw witness oracle.");
    m.def(
        "preprocess_file",
        [](const std::string& in_path, const std::string& out_path) {
            const OracleFile raw = read_oracle(in_path);
            if (raw.channels < 0) throw std::invalid_argument("empty oracle file");
            OracleFile reduced{raw.channels, OracleKind::reduced,
                               preprocess(raw.levels, raw.channels)};
            write_oracle(reduced, out_path);
        },
        py::arg("in_path"), py::arg("out_path"),
        "Collapse subsumption chains and reorder a raw oracle file.");
    m.def(
        "check_file",
        [](int n, const std::string& oracle_path, std::optional<int> max_size, bool strict,
           int threads) {
            const OracleFile oracle = read_oracle(oracle_path);
            if (oracle.channels >= 0 && oracle.channels != n) {
                throw std::invalid_argument("oracle file channel count mismatch");
            }
            const CheckResult result = generate_and_prune_checked(
                n, default_max_size(n, max_size), oracle.levels,
                strict ? CheckMode::strict : CheckMode::lenient, threads);
            py::dict d;
            d["answer"] = answer_to_dict(result.answer);
            d["levels"] = trace_to_list(result.trace);
            return d;
        },
        py::arg("n"), py::arg("oracle_path"), py::arg("max_size") = std::nullopt,
        py::arg("strict") = true, py::arg("threads") = 1,
        "Re-verify a run against an oracle file.");
    m.def(
        "solve",
        [](int n, std::optional<int> max_size, int threads) {
            const int limit = default_max_size(n, max_size);
            if (n <= 1) return answer_to_dict(Answer::yes(n, 0));
            const ProduceResult produced = produce(n, limit, threads);
            const CheckResult checked = generate_and_prune_checked(
                n, limit, preprocess(produced.oracle, n), CheckMode::strict, threads);
            if (!(checked.layers == produced.layers)) {
                throw std::runtime_error("producer and checker disagree");
            }
            return answer_to_dict(checked.answer);
        },
        py::arg("n"), py::arg("max_size") = std::nullopt, py::arg("threads") = 1,
        "produce + preprocess + check in one call, cross-checking the phases.");
}

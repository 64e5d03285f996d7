#include "sortnet/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "sortnet/checker.hpp"
#include "sortnet/oracle.hpp"
#include "sortnet/parallel.hpp"
#include "sortnet/report.hpp"
#include "sortnet/search.hpp"

namespace sortnet {

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

struct Options {
    int n = 0;
    int max_size = -1;
    std::string out;
    std::string oracle;
    bool lenient = false;
    int threads = 0;
    std::string report = "text";
};

int effective_max_size(const Options& opts) {
    // Every n has the n(n-1)/2-comparator bubble network, so this
    // default always suffices for a yes.
    return opts.max_size >= 0 ? opts.max_size : comparator_count(opts.n);
}

ReportFormat report_format(const Options& opts) {
    return opts.report == "json" ? ReportFormat::json : ReportFormat::text;
}

int exit_for(const Answer& answer) {
    return answer.kind == Answer::Kind::yes ? kExitYes : kExitNoOrMaybe;
}

RunReport make_report(std::string command, const Options& opts, int threads,
                      std::vector<LevelTrace> levels, Answer answer, double seconds) {
    RunReport report;
    report.command = std::move(command);
    report.n = opts.n;
    report.max_size = effective_max_size(opts);
    report.threads = threads;
    report.levels = std::move(levels);
    report.answer = std::move(answer);
    report.total_seconds = seconds;
    return report;
}

int cmd_produce(const Options& opts) {
    const int threads = resolve_threads(opts.threads);
    const auto t0 = std::chrono::steady_clock::now();

    ProduceResult result;
    if (opts.n <= 1) {
        result.answer = Answer::yes(opts.n, 0);
    } else {
        result = produce(opts.n, effective_max_size(opts), threads);
    }
    if (!opts.out.empty()) {
        write_oracle(OracleFile{opts.n, OracleKind::raw, result.oracle}, opts.out);
    }

    const RunReport report = make_report("produce", opts, threads, std::move(result.trace),
                                         result.answer, seconds_since(t0));
    std::cout << render_report(report, report_format(opts));
    std::cout << format_answer(result.answer) << "\n";
    return exit_for(result.answer);
}

int cmd_preprocess(const Options& opts) {
    const OracleFile raw = read_oracle(opts.oracle);
    if (raw.channels < 0) {
        // Empty oracle in, empty oracle out.
        std::ofstream out(opts.out, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot create oracle file: " + opts.out);
        std::cout << "preprocess: 0 levels\n";
        return kExitYes;
    }
    OracleFile reduced;
    reduced.channels = raw.channels;
    reduced.kind = OracleKind::reduced;
    reduced.levels = preprocess(raw.levels, raw.channels);
    write_oracle(reduced, opts.out);

    std::size_t in_triples = 0;
    std::size_t out_triples = 0;
    for (const OracleLevel& level : raw.levels) in_triples += level.triples.size();
    for (const OracleLevel& level : reduced.levels) out_triples += level.triples.size();
    std::cout << "preprocess: " << reduced.levels.size() << " levels, " << in_triples
              << " triples in, " << out_triples << " triples out\n";
    return kExitYes;
}

int cmd_check(const Options& opts) {
    const int threads = resolve_threads(opts.threads);
    const auto t0 = std::chrono::steady_clock::now();

    const OracleFile oracle = read_oracle(opts.oracle);
    if (oracle.channels >= 0 && oracle.channels != opts.n) {
        throw std::runtime_error("oracle file is for n=" + std::to_string(oracle.channels) +
                                 ", not n=" + std::to_string(opts.n));
    }
    const CheckMode mode = opts.lenient ? CheckMode::lenient : CheckMode::strict;
    const CheckResult result = generate_and_prune_checked(
        opts.n, effective_max_size(opts), oracle.levels, mode, threads);

    const RunReport report = make_report("check", opts, threads, result.trace,
                                         result.answer, seconds_since(t0));
    std::cout << render_report(report, report_format(opts));
    std::cout << format_answer(result.answer) << "\n";
    return exit_for(result.answer);
}

int cmd_solve(const Options& opts) {
    const int threads = resolve_threads(opts.threads);
    const int max_size = effective_max_size(opts);

    const auto t0 = std::chrono::steady_clock::now();
    ProduceResult produced;
    if (opts.n <= 1) {
        produced.answer = Answer::yes(opts.n, 0);
    } else {
        produced = produce(opts.n, max_size, threads);
    }
    const double produce_seconds = seconds_since(t0);

    const auto t1 = std::chrono::steady_clock::now();
    const std::vector<OracleLevel> reduced = preprocess(produced.oracle, opts.n);
    const CheckResult checked = generate_and_prune_checked(opts.n, max_size, reduced,
                                                           CheckMode::strict, threads);
    const double check_seconds = seconds_since(t1);

    // The checker retraces the producer's run from the witnesses
    // alone; any divergence is a bug worth failing loudly over.
    if (checked.layers.size() != produced.layers.size()) {
        std::cerr << "ERROR solve: producer saw " << produced.layers.size()
                  << " levels, checker " << checked.layers.size() << "\n";
        return kExitError;
    }
    for (std::size_t i = 0; i < checked.layers.size(); ++i) {
        if (!(checked.layers[i] == produced.layers[i])) {
            std::cerr << "ERROR solve: producer and checker disagree on layer k="
                      << produced.layers[i].k << "\n";
            return kExitError;
        }
    }
    if (format_answer(checked.answer) != format_answer(produced.answer)) {
        std::cerr << "ERROR solve: producer answered '" << format_answer(produced.answer)
                  << "' but checker answered '" << format_answer(checked.answer) << "'\n";
        return kExitError;
    }

    const RunReport produce_report = make_report("produce", opts, threads,
                                                 std::move(produced.trace),
                                                 produced.answer, produce_seconds);
    const RunReport check_report = make_report("check", opts, threads, checked.trace,
                                               checked.answer, check_seconds);
    std::cout << render_solve_report(produce_report, check_report, report_format(opts));
    std::cout << format_answer(checked.answer) << "\n";
    return exit_for(checked.answer);
}

void add_common_flags(CLI::App* cmd, Options& opts, bool with_mode) {
    cmd->add_option("--threads", opts.threads,
                    "worker threads (0 = SORTNET_THREADS env or hardware)")
        ->check(CLI::Range(0, 512));
    cmd->add_option("--report", opts.report, "report format")
        ->check(CLI::IsMember({"text", "json"}));
    if (with_mode) {
        auto* strict =
            cmd->add_flag("--strict", "fail loudly on oracle problems (default)");
        auto* lenient = cmd->add_flag(
            "--lenient", opts.lenient,
            "on oracle failure, keep the layer unpruned and continue");
        strict->excludes(lenient);
        lenient->excludes(strict);
    }
}

}  // namespace

int run_cli(int argc, char** argv) {
    CLI::App app{"Minimal-size sorting network search with an independently "
                 "re-checkable pruning trail"};
    app.require_subcommand(1);
    Options opts;

    CLI::App* produce_cmd = app.add_subcommand(
        "produce", "search for the minimal sorting network, logging subsumption witnesses");
    produce_cmd->add_option("-n,--channels", opts.n, "channel count")
        ->required()
        ->check(CLI::Range(0, kMaxChannels));
    produce_cmd->add_option("--max-size", opts.max_size,
                            "largest network size to try (default n(n-1)/2)")
        ->check(CLI::Range(0, 10000));
    produce_cmd->add_option("-o,--out", opts.out, "write the raw witness oracle here");
    add_common_flags(produce_cmd, opts, false);

    CLI::App* preprocess_cmd = app.add_subcommand(
        "preprocess", "reorder a raw oracle and collapse subsumption chains");
    preprocess_cmd->add_option("--oracle", opts.oracle, "raw oracle file")->required();
    preprocess_cmd->add_option("-o,--out", opts.out, "reduced oracle file")->required();

    CLI::App* check_cmd = app.add_subcommand(
        "check", "independently re-verify a run against its oracle file");
    check_cmd->add_option("-n,--channels", opts.n, "channel count")
        ->required()
        ->check(CLI::Range(0, kMaxChannels));
    check_cmd->add_option("--max-size", opts.max_size,
                          "largest network size to try (default n(n-1)/2)")
        ->check(CLI::Range(0, 10000));
    check_cmd->add_option("--oracle", opts.oracle, "oracle file to consume")->required();
    add_common_flags(check_cmd, opts, true);

    CLI::App* solve_cmd = app.add_subcommand(
        "solve", "produce, preprocess and check in one run, cross-checking the phases");
    solve_cmd->add_option("-n,--channels", opts.n, "channel count")
        ->required()
        ->check(CLI::Range(0, kMaxChannels));
    solve_cmd->add_option("--max-size", opts.max_size,
                          "largest network size to try (default n(n-1)/2)")
        ->check(CLI::Range(0, 10000));
    add_common_flags(solve_cmd, opts, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitError;
    }

    try {
        if (produce_cmd->parsed()) return cmd_produce(opts);
        if (preprocess_cmd->parsed()) return cmd_preprocess(opts);
        if (check_cmd->parsed()) return cmd_check(opts);
        if (solve_cmd->parsed()) return cmd_solve(opts);
    } catch (const OracleParseError& e) {
        std::cerr << "ERROR parse " << e.what() << "\n";
        return kExitError;
    } catch (const PreprocessError& e) {
        std::cerr << "ERROR preprocess " << e.what() << "\n";
        return kExitError;
    } catch (const OracleFailure& e) {
        std::cerr << "ERROR oracle level=" << e.k;
        switch (e.fault) {
            case OracleFault::obligation1:
                std::cerr << " obligation=1 triple=" << e.triple_index;
                break;
            case OracleFault::obligation2:
                std::cerr << " obligation=2";
                break;
            case OracleFault::unsorted_subsumed:
                std::cerr << " contract=subsumed-order triple=" << e.triple_index;
                break;
        }
        std::cerr << ": " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "ERROR " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}

}  // namespace sortnet

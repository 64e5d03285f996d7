#include "sortnet/report.hpp"

#include <array>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace sortnet {

std::optional<int> known_optimal_size(int n) {
    static constexpr std::array<int, 11> kOptimal = {0, 0, 1, 3, 5, 9, 12, 16, 19, 25, 29};
    if (n < 0 || n >= static_cast<int>(kOptimal.size())) return std::nullopt;
    return kOptimal[static_cast<std::size_t>(n)];
}

namespace {

std::string answer_kind(const Answer& answer) {
    switch (answer.kind) {
        case Answer::Kind::yes:
            return "yes";
        case Answer::Kind::no:
            return "no";
        case Answer::Kind::maybe:
            return "maybe";
    }
    return "maybe";
}

std::string optimum_note(const RunReport& report) {
    if (report.answer.kind != Answer::Kind::yes) return "";
    const auto known = known_optimal_size(report.n);
    if (!known) return "";
    return report.answer.k == *known ? " (matches known optimum)"
                                     : " (DIFFERS from known optimum " +
                                           std::to_string(*known) + ")";
}

std::string render_text(const RunReport& report) {
    std::ostringstream out;
    out << report.command << " n=" << report.n << " max-size=" << report.max_size
        << " threads=" << report.threads << "\n";
    for (const LevelTrace& level : report.levels) {
        out << "  level k=" << level.k << ": generated " << level.generated
            << ", kept " << level.survivors << ", witnesses " << level.witnesses
            << " [" << std::fixed << std::setprecision(3)
            << level.generate_seconds + level.prune_seconds << "s]\n";
    }
    out << "  total " << std::fixed << std::setprecision(3) << report.total_seconds
        << "s";
    if (report.answer.kind == Answer::Kind::yes) {
        out << "; optimal size " << report.answer.k << optimum_note(report);
    }
    out << "\n";
    return out.str();
}

nlohmann::json report_to_json(const RunReport& report) {
    nlohmann::json j;
    j["command"] = report.command;
    j["n"] = report.n;
    j["max_size"] = report.max_size;
    j["threads"] = report.threads;
    j["levels"] = nlohmann::json::array();
    for (const LevelTrace& level : report.levels) {
        j["levels"].push_back({{"k", level.k},
                               {"generated", level.generated},
                               {"survivors", level.survivors},
                               {"witnesses", level.witnesses},
                               {"generate_seconds", level.generate_seconds},
                               {"prune_seconds", level.prune_seconds}});
    }
    j["answer"] = {{"kind", answer_kind(report.answer)}};
    if (report.answer.kind != Answer::Kind::maybe) {
        j["answer"]["n"] = report.answer.n;
        j["answer"]["k"] = report.answer.k;
    }
    if (const auto known = known_optimal_size(report.n)) j["known_optimum"] = *known;
    j["total_seconds"] = report.total_seconds;
    return j;
}

}  // namespace

std::string render_report(const RunReport& report, ReportFormat format) {
    if (format == ReportFormat::json) return report_to_json(report).dump(2) + "\n";
    return render_text(report);
}

std::string render_solve_report(const RunReport& produce_report,
                                const RunReport& check_report, ReportFormat format) {
    if (format == ReportFormat::json) {
        nlohmann::json j;
        j["command"] = "solve";
        j["n"] = check_report.n;
        j["produce"] = report_to_json(produce_report);
        j["check"] = report_to_json(check_report);
        j["answer"] = report_to_json(check_report)["answer"];
        return j.dump(2) + "\n";
    }
    return render_text(produce_report) + render_text(check_report);
}

}  // namespace sortnet

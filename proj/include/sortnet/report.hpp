#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sortnet/answer.hpp"
#include "sortnet/search.hpp"

namespace sortnet {

enum class ReportFormat { text, json };

/// What one run did: per-level layer sizes and timings plus the final
/// answer. Level entries are contiguous from k = 1.
struct RunReport {
    std::string command;  ///< "produce", "check" or "solve"
    int n = 0;
    int max_size = 0;
    int threads = 1;
    std::vector<LevelTrace> levels;
    Answer answer;
    double total_seconds = 0.0;
};

/// Known optimal sorting-network sizes for n <= 10. Informational
/// only (reports print "matches known optimum"); never consulted by
/// the producer or the checker.
std::optional<int> known_optimal_size(int n);

std::string render_report(const RunReport& report, ReportFormat format);

/// Combined view of a solve run (producer phase + checker phase); in
/// JSON mode the two phases are nested under one object so the output
/// stays a single document.
std::string render_solve_report(const RunReport& produce_report,
                                const RunReport& check_report, ReportFormat format);

}  // namespace sortnet

#pragma once

// Command dispatch for the evdec tool.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "evdec/cli/problem.hpp"
#include "evdec/error.hpp"
#include "evdec/evidential.hpp"

namespace evdec::cli {

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitValidation = 2, kExitSolver = 3 };

struct CriterionParams {
    std::optional<double> alpha;
    bool auto_alpha = false;  // ghurwicz only
    std::optional<double> beta;
    /// Jaffray index document, resolved per act against its consequence frame.
    std::optional<Json> index;
};

/// Names accepted by `rank --criterion`.
const std::vector<std::string>& rank_criteria();
/// True when lower scores are better.
bool lower_is_better(const std::string& criterion);

/// One score per act, in file order. Throws UsageError for an unknown criterion or a
/// missing parameter, ValidationError when the problem lacks what the criterion needs.
std::vector<double> score_acts(const DecisionProblem& p, const std::string& criterion,
                               const CriterionParams& params);

struct RankedAct {
    std::size_t act;
    double score;
    std::size_t rank;  // competition rank: 1 + number of strictly better acts
};

/// Best first; ties share a rank and keep file order.
std::vector<RankedAct> rank_scores(const std::vector<double>& scores, bool lower_better, double tolerance);

struct SweepGrid {
    double from = 0.0;
    double to = 1.0;
    std::size_t steps = 101;
    /// Grid point k; the last one is exactly `to`.
    double at(std::size_t k) const;
};

struct SweepResult {
    std::string parameter;  // "alpha" or "beta"
    std::vector<double> values;
    std::vector<std::vector<double>> scores;  // [grid point][act]
};

/// Criterion in {hurwicz, ghurwicz, owa, gowa}. Throws UsageError for a bad grid.
SweepResult sweep(const DecisionProblem& p, const std::string& criterion, const SweepGrid& grid);

/// Jaffray index document: {"default": x, "pairs": [{"worst": c, "best": c, "alpha": x}]}.
/// Only pairs whose labels both belong to `consequences` are kept.
LocalPessimismIndex parse_pessimism_index(const Json& doc, const Frame& consequences);

/// Runs one command line (without the program name). Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace evdec::cli

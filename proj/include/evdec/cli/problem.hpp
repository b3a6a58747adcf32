#pragma once

// Decision problems read from JSON documents.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "evdec/belief.hpp"
#include "evdec/classical.hpp"
#include "evdec/credal.hpp"
#include "evdec/error.hpp"

namespace evdec::cli {

/// Bad command-line usage; maps to exit code 1.
class UsageError : public Error {
public:
    using Error::Error;
};

using Json = nlohmann::ordered_json;

/// Acts are given either as utility rows over the states, or as maps from states to
/// consequence labels together with a utility per consequence.
enum class ProblemForm { Rows, Outcomes };

class DecisionProblem {
public:
    ProblemForm form() const { return form_; }
    const Frame& states() const { return *states_; }
    std::size_t act_count() const { return acts_.size(); }
    const std::vector<std::string>& act_names() const { return act_names_; }
    const Act& act(std::size_t i) const { return acts_.at(i); }

    /// Shared consequence frame; Outcomes form only.
    const std::optional<Frame>& consequences() const { return consequences_; }
    const std::optional<MassFunction>& mass() const { return mass_; }
    bool has_utilities() const;
    bool single_valued() const;

    /// Throws ValidationError when the problem has no mass function.
    const MassFunction& require_mass() const;
    /// Utility over the consequences of act i.
    UtilityTable utility(std::size_t i) const;
    /// Evidential lottery of act i: the state mass pushed through the act.
    MassFunction lottery(std::size_t i) const;
    /// Requires utilities and single-valued acts.
    PayoffMatrix payoff_matrix() const;
    std::vector<Gamble> gambles() const;

    Json to_json() const;

    friend DecisionProblem parse_problem(const Json& doc);

private:
    ProblemForm form_ = ProblemForm::Rows;
    std::optional<Frame> states_;
    std::optional<Frame> consequences_;
    std::optional<std::vector<double>> consequence_utilities_;
    std::vector<std::string> act_names_;
    std::vector<Act> acts_;
    std::vector<std::vector<double>> rows_;
    std::optional<MassFunction> mass_;
};

/// Throws ValidationError naming the offending field.
DecisionProblem parse_problem(const Json& doc);

/// Reads a JSON document from a path, or from `in` when the path is "-".
/// Throws UsageError when the file cannot be opened and ValidationError on bad syntax.
Json read_json(const std::string& path, std::istream& in);

/// Mass-file fragment: list of {"focal": [labels], "mass": number}.
MassFunction parse_mass(const Json& list, const Frame& frame, const std::string& field);
Json mass_to_json(const MassFunction& m);

/// Labels list: non-empty array of distinct strings.
Frame parse_frame(const Json& node, const std::string& field);
Subset parse_subset(const Json& node, const Frame& frame, const std::string& field);

}  // namespace evdec::cli

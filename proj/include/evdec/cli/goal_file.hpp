#pragma once

#include <optional>
#include <string>
#include <vector>

#include "evdec/cli/problem.hpp"
#include "evdec/constructive.hpp"

namespace evdec::cli {

struct NamedEffect {
    std::string name;
    ActEffect effect;
};

struct ClassificationInput {
    MassFunction mass;
    std::vector<double> weights;
};

struct GoalFile {
    std::optional<GoalSystem> system;
    std::vector<std::string> goal_names;
    std::vector<NamedEffect> acts;
    std::optional<ClassificationInput> classify;

    Json to_json() const;
};

GoalFile parse_goal_file(const Json& doc);

}  // namespace evdec::cli

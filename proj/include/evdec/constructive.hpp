#pragma once

// Goal-based scoring of acts over a single frame of outcome descriptions.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "evdec/belief.hpp"
#include "evdec/preference.hpp"

namespace evdec {

/// Weighted goals, each a non-empty subset of the frame. Weights must be positive.
class GoalSystem {
public:
    GoalSystem(Frame theta, std::vector<Subset> goals, std::vector<double> weights);
    /// Unit weights.
    GoalSystem(Frame theta, std::vector<Subset> goals);

    const Frame& frame() const { return theta_; }
    const std::vector<Subset>& goals() const { return goals_; }
    const std::vector<double>& weights() const { return weights_; }
    double total_weight() const;

private:
    Frame theta_;
    std::vector<Subset> goals_;
    std::vector<double> weights_;
};

struct GoalAudit {
    bool consistent = false;  // goals share at least one element
    bool monotonic = false;   // goals are totally ordered by inclusion
};

GoalAudit goal_audit(const GoalSystem& gs);

struct DeterministicScore {
    double u_plus = 0.0;   // weight of goals containing A(f)
    double u_minus = 0.0;  // weight of goals disjoint from A(f)
    double score() const { return u_plus - u_minus; }
};

/// Throws InvalidArgument when `outcome` is empty, FrameMismatch when it leaves the frame.
DeterministicScore deterministic_score(const GoalSystem& gs, Subset outcome);

struct ExpectedScore {
    /// sum_i w_i (Bel(A_i) + Pl(A_i)).
    double score = 0.0;
    /// sum_i w_i, the constant left out of `score`; expected achieved minus expected
    /// precluded weight equals score - dropped_constant.
    double dropped_constant = 0.0;
    double expected_achieved = 0.0;
    double expected_precluded = 0.0;
};

ExpectedScore expected_score(const GoalSystem& gs, const MassFunction& effect);

/// The effect of an act: a certain subset, or a mass function over the frame.
struct ActEffect {
    std::optional<Subset> certain;
    std::optional<MassFunction> uncertain;

    /// Certain effects are scored as logical mass functions.
    MassFunction as_mass(const Frame& theta) const;
};

inline constexpr std::size_t kMaxClassificationClasses = 16;

struct ClassificationRow {
    Subset classes;
    double bel_plus_pl = 0.0;
    double tail_weight = 0.0;  // sum of w_k for k >= |C|
    double score = 0.0;
};

struct ClassificationScores {
    /// One row per non-empty subset, in subset-encoding order.
    std::vector<ClassificationRow> rows;
    Relation preference;
};

/// Scores the act of answering each non-empty set of classes. `weights[k-1]` is the
/// weight of the goal "a set of at most k classes containing the true one".
ClassificationScores classification_scores(const MassFunction& m, const std::vector<double>& weights);

}  // namespace evdec

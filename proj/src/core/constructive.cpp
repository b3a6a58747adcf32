#include "evdec/constructive.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "evdec/error.hpp"

namespace evdec {

GoalSystem::GoalSystem(Frame theta, std::vector<Subset> goals, std::vector<double> weights)
    : theta_(std::move(theta)), goals_(std::move(goals)), weights_(std::move(weights)) {
    if (goals_.empty()) throw ValidationError("a goal system needs at least one goal");
    if (weights_.size() != goals_.size()) throw ValidationError("one weight per goal is required");
    for (std::size_t i = 0; i < goals_.size(); ++i) {
        if (goals_[i].empty()) throw ValidationError("goal " + std::to_string(i + 1) + " is empty");
        if (!goals_[i].fits(theta_.size())) throw ValidationError("goal " + std::to_string(i + 1) + " leaves the frame");
        if (!std::isfinite(weights_[i]) || weights_[i] <= 0.0) {
            throw ValidationError("goal weights must be strictly positive");
        }
    }
}

GoalSystem::GoalSystem(Frame theta, std::vector<Subset> goals)
    : GoalSystem(std::move(theta), goals, std::vector<double>(goals.size(), 1.0)) {}

double GoalSystem::total_weight() const { return std::accumulate(weights_.begin(), weights_.end(), 0.0); }

GoalAudit goal_audit(const GoalSystem& gs) {
    GoalAudit out;
    Subset common = gs.frame().full();
    for (Subset g : gs.goals()) common = common & g;
    out.consistent = !common.empty();

    auto sorted = gs.goals();
    std::stable_sort(sorted.begin(), sorted.end(), [](Subset a, Subset b) { return a.size() < b.size(); });
    out.monotonic = true;
    for (std::size_t k = 1; k < sorted.size() && out.monotonic; ++k) {
        out.monotonic = sorted[k - 1].is_subset_of(sorted[k]);
    }
    return out;
}

DeterministicScore deterministic_score(const GoalSystem& gs, Subset outcome) {
    if (outcome.empty()) throw InvalidArgument("an act must lead to a non-empty set of outcomes");
    gs.frame().check(outcome);
    DeterministicScore out;
    for (std::size_t i = 0; i < gs.goals().size(); ++i) {
        if (outcome.is_subset_of(gs.goals()[i])) out.u_plus += gs.weights()[i];
        if (!outcome.intersects(gs.goals()[i])) out.u_minus += gs.weights()[i];
    }
    return out;
}

ExpectedScore expected_score(const GoalSystem& gs, const MassFunction& effect) {
    if (!(effect.frame() == gs.frame())) throw FrameMismatch("act effect and goal system use different frames");
    ExpectedScore out;
    out.dropped_constant = gs.total_weight();
    for (std::size_t i = 0; i < gs.goals().size(); ++i) {
        const double w = gs.weights()[i];
        const double bel = belief(effect, gs.goals()[i]);
        const double pl = plausibility(effect, gs.goals()[i]);
        out.score += w * (bel + pl);
        out.expected_achieved += w * bel;
        out.expected_precluded += w * (1.0 - pl);
    }
    return out;
}

MassFunction ActEffect::as_mass(const Frame& theta) const {
    if (uncertain) return *uncertain;
    if (!certain) throw InvalidArgument("act effect is neither certain nor uncertain");
    return MassFunction::logical(theta, *certain);
}

ClassificationScores classification_scores(const MassFunction& m, const std::vector<double>& weights) {
    const std::size_t k = m.frame().size();
    if (k < 2) throw InvalidArgument("classification needs at least two classes");
    if (k > kMaxClassificationClasses) {
        throw SizeLimit("classification scoring is limited to " + std::to_string(kMaxClassificationClasses) + " classes");
    }
    if (weights.size() != k) throw InvalidArgument("one weight per class count is required");
    for (double w : weights) {
        if (!std::isfinite(w) || w <= 0.0) throw InvalidArgument("goal weights must be strictly positive");
    }
    // tail[c] = sum_{j >= c} w_j, 1-based.
    std::vector<double> tail(k + 2, 0.0);
    for (std::size_t c = k; c >= 1; --c) tail[c] = tail[c + 1] + weights[c - 1];

    ClassificationScores out{{}, Relation(0)};
    std::vector<double> scores;
    const std::uint32_t limit = std::uint32_t{1} << k;
    for (std::uint32_t mask = 1; mask < limit; ++mask) {
        const Subset c(mask);
        ClassificationRow row;
        row.classes = c;
        row.bel_plus_pl = belief(m, c) + plausibility(m, c);
        row.tail_weight = tail[c.size()];
        row.score = row.bel_plus_pl * row.tail_weight;
        scores.push_back(row.score);
        out.rows.push_back(row);
    }
    out.preference = Relation::from_scores(scores);
    return out;
}

}  // namespace evdec

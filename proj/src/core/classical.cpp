#include "evdec/classical.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "evdec/error.hpp"

namespace evdec {

PayoffMatrix::PayoffMatrix(std::vector<std::string> acts, std::vector<std::string> states,
                           std::vector<std::vector<double>> utilities)
    : act_names_(std::move(acts)), state_names_(std::move(states)), u_(std::move(utilities)) {
    if (act_names_.empty()) throw ValidationError("payoff matrix needs at least one act");
    if (state_names_.empty()) throw ValidationError("payoff matrix needs at least one state");
    if (u_.size() != act_names_.size()) throw ValidationError("payoff matrix needs one row per act");
    for (std::size_t i = 0; i < act_names_.size(); ++i) {
        for (std::size_t k = 0; k < i; ++k) {
            if (act_names_[i] == act_names_[k]) throw ValidationError("duplicate act name '" + act_names_[i] + "'");
        }
    }
    for (std::size_t i = 0; i < u_.size(); ++i) {
        if (u_[i].size() != state_names_.size()) {
            throw ValidationError("row of act '" + act_names_[i] + "' has the wrong number of states");
        }
        for (double v : u_[i]) {
            if (!std::isfinite(v)) throw ValidationError("payoffs must be finite");
        }
    }
}

PayoffMatrix PayoffMatrix::select(const std::vector<std::size_t>& acts) const {
    std::vector<std::string> names;
    std::vector<std::vector<double>> rows;
    for (std::size_t i : acts) {
        names.push_back(act_names_.at(i));
        rows.push_back(u_.at(i));
    }
    return PayoffMatrix(std::move(names), state_names_, std::move(rows));
}

PruneResult prune_dominated(const PayoffMatrix& u) {
    PruneResult out;
    const std::size_t n = u.acts();
    std::vector<bool> dominated(n, false);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k) continue;
            bool weak = true;
            bool strict = false;
            for (std::size_t j = 0; j < u.states() && weak; ++j) {
                weak = u(k, j) >= u(i, j);
                strict = strict || u(k, j) > u(i, j);
            }
            if (weak && strict) {
                dominated[i] = true;
                out.dominance.emplace_back(k, i);
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!dominated[i]) out.survivors.push_back(i);
    }
    return out;
}

std::vector<double> score_ignorance(const PayoffMatrix& u, IgnoranceCriterion criterion) {
    using Kind = IgnoranceCriterion::Kind;
    if (criterion.kind == Kind::Hurwicz && !(criterion.alpha >= 0.0 && criterion.alpha <= 1.0)) {
        throw InvalidArgument("pessimism index must lie in [0,1]");
    }
    std::vector<double> scores;
    scores.reserve(u.acts());
    for (const auto& row : u.rows()) {
        const auto [lo, hi] = std::minmax_element(row.begin(), row.end());
        switch (criterion.kind) {
            case Kind::Maximin: scores.push_back(*lo); break;
            case Kind::Maximax: scores.push_back(*hi); break;
            case Kind::Hurwicz: scores.push_back(criterion.alpha * *lo + (1.0 - criterion.alpha) * *hi); break;
            case Kind::Laplace:
                scores.push_back(std::accumulate(row.begin(), row.end(), 0.0) / static_cast<double>(row.size()));
                break;
        }
    }
    return scores;
}

RegretResult minimax_regret(const PayoffMatrix& u) {
    RegretResult out;
    out.regret.assign(u.acts(), std::vector<double>(u.states(), 0.0));
    for (std::size_t j = 0; j < u.states(); ++j) {
        double best = u(0, j);
        for (std::size_t i = 1; i < u.acts(); ++i) best = std::max(best, u(i, j));
        for (std::size_t i = 0; i < u.acts(); ++i) out.regret[i][j] = best - u(i, j);
    }
    for (const auto& r : out.regret) out.max_regret.push_back(*std::max_element(r.begin(), r.end()));
    return out;
}

// ---------------------------------------------------------------------------
// OWA

OwaWeights::OwaWeights(std::vector<double> w) : w_(std::move(w)) {
    if (w_.empty()) throw InvalidArgument("OWA weights must not be empty");
    double total = 0.0;
    for (double v : w_) {
        if (!std::isfinite(v) || v < 0.0) throw InvalidArgument("OWA weights must be non-negative");
        total += v;
    }
    if (std::abs(total - 1.0) > 1e-9) throw InvalidArgument("OWA weights must sum to 1");
}

OwaWeights OwaWeights::maximum(std::size_t arity) {
    std::vector<double> w(arity, 0.0);
    w.front() = 1.0;
    return OwaWeights(std::move(w));
}

OwaWeights OwaWeights::minimum(std::size_t arity) {
    std::vector<double> w(arity, 0.0);
    w.back() = 1.0;
    return OwaWeights(std::move(w));
}

OwaWeights OwaWeights::mean(std::size_t arity) {
    return OwaWeights(std::vector<double>(arity, 1.0 / static_cast<double>(arity)));
}

OwaWeights OwaWeights::hurwicz(std::size_t arity, double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw InvalidArgument("pessimism index must lie in [0,1]");
    if (arity == 1) return OwaWeights({1.0});
    std::vector<double> w(arity, 0.0);
    w.front() = 1.0 - alpha;
    w.back() = alpha;
    return OwaWeights(std::move(w));
}

double owa_aggregate(std::span<const double> values, const OwaWeights& w) {
    if (values.size() != w.size()) throw InvalidArgument("OWA arity differs from the number of values");
    std::vector<double> sorted(values.begin(), values.end());
    std::stable_sort(sorted.begin(), sorted.end(), std::greater<>());
    double acc = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) acc += w[i] * sorted[i];
    return acc;
}

double degree_of_optimism(const OwaWeights& w) {
    const std::size_t s = w.size();
    if (s < 2) throw InvalidArgument("degree of optimism needs at least two weights");
    double acc = 0.0;
    for (std::size_t i = 0; i < s; ++i) {
        acc += w[i] * static_cast<double>(s - 1 - i) / static_cast<double>(s - 1);
    }
    return acc;
}

namespace {

// Weights of the exponential family, computed with a shifted exponent.
std::vector<double> exponential_weights(std::size_t s, double lambda) {
    std::vector<double> w(s);
    const double shift = std::max(lambda, 0.0);
    double total = 0.0;
    for (std::size_t i = 0; i < s; ++i) {
        const double rank = static_cast<double>(s - 1 - i) / static_cast<double>(s - 1);
        w[i] = std::exp(lambda * rank - shift);
        total += w[i];
    }
    for (double& v : w) v /= total;
    return w;
}

double optimism_of(const std::vector<double>& w) {
    const std::size_t s = w.size();
    double acc = 0.0;
    for (std::size_t i = 0; i < s; ++i) acc += w[i] * static_cast<double>(s - 1 - i) / static_cast<double>(s - 1);
    return acc;
}

}  // namespace

OwaWeights max_entropy_owa_weights(std::size_t arity, double beta) {
    if (!(beta >= 0.0 && beta <= 1.0)) throw InvalidArgument("degree of optimism must lie in [0,1]");
    if (arity == 0) throw InvalidArgument("OWA arity must be positive");
    if (arity == 1) return OwaWeights({1.0});
    if (beta == 0.0) return OwaWeights::minimum(arity);
    if (beta == 1.0) return OwaWeights::maximum(arity);
    if (beta == 0.5) return OwaWeights::mean(arity);

    double lo = -200.0;
    double hi = 200.0;
    for (int iter = 0; iter < 200 && hi - lo > 1e-13; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (optimism_of(exponential_weights(arity, mid)) < beta) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return OwaWeights(exponential_weights(arity, 0.5 * (lo + hi)));
}

}  // namespace evdec

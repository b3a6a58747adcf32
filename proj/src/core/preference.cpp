#include "evdec/preference.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "evdec/error.hpp"

namespace evdec {

Relation::Relation(std::size_t n) : n_(n), table_(n * n, 0) {
    for (std::size_t i = 0; i < n; ++i) table_[i * n + i] = 1;
}

Relation Relation::from_scores(std::span<const double> scores, Better better, double tolerance) {
    const std::size_t n = scores.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    auto ahead = [&](std::size_t a, std::size_t b) {
        return better == Better::Higher ? scores[a] > scores[b] : scores[a] < scores[b];
    };
    std::stable_sort(order.begin(), order.end(), ahead);

    std::vector<std::size_t> level(n, 0);
    std::size_t current = 0;
    for (std::size_t k = 0; k < n; ++k) {
        if (k > 0 && std::abs(scores[order[k]] - scores[order[current]]) > tolerance) current = k;
        level[order[k]] = current;
    }

    Relation r(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) r.set(i, j, level[i] <= level[j]);
    }
    return r;
}

void Relation::set(std::size_t i, std::size_t j, bool value) {
    if (i >= n_ || j >= n_) throw InvalidArgument("relation index out of range");
    if (i == j && !value) throw InvalidArgument("relations are reflexive");
    table_[i * n_ + j] = value ? 1 : 0;
}

bool Relation::is_complete() const {
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = i + 1; j < n_; ++j) {
            if (incomparable(i, j)) return false;
        }
    }
    return true;
}

bool Relation::is_transitive() const {
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            if (!at_least(i, j)) continue;
            for (std::size_t k = 0; k < n_; ++k) {
                if (at_least(j, k) && !at_least(i, k)) return false;
            }
        }
    }
    return true;
}

Relation transitive_closure(const Relation& r) {
    Relation out = r;
    const std::size_t n = r.size();
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            if (!out.at_least(i, k)) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (out.at_least(k, j)) out.set(i, j);
            }
        }
    }
    return out;
}

ChoiceSet maximal_elements(const Relation& r) {
    ChoiceSet out;
    for (std::size_t i = 0; i < r.size(); ++i) {
        bool beaten = false;
        for (std::size_t j = 0; j < r.size() && !beaten; ++j) beaten = r.strictly_prefers(j, i);
        if (!beaten) out.push_back(i);
    }
    return out;
}

ChoiceSet greatest_elements(const Relation& r) {
    ChoiceSet out;
    for (std::size_t i = 0; i < r.size(); ++i) {
        bool top = true;
        for (std::size_t j = 0; j < r.size() && top; ++j) top = r.at_least(i, j);
        if (top) out.push_back(i);
    }
    return out;
}

Relation relation_from_choice_set(std::size_t n, const ChoiceSet& chosen) {
    if (chosen.empty()) throw InvalidArgument("choice set must not be empty");
    std::vector<bool> in(n, false);
    for (std::size_t i : chosen) {
        if (i >= n) throw InvalidArgument("choice set refers to an item out of range");
        in[i] = true;
    }
    Relation r(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!in[i]) continue;
        for (std::size_t j = 0; j < n; ++j) r.set(i, j);
    }
    return r;
}

namespace {

void check_intervals(std::span<const double> lowers, std::span<const double> uppers) {
    if (lowers.size() != uppers.size()) throw InvalidArgument("interval bounds differ in length");
    for (std::size_t i = 0; i < lowers.size(); ++i) {
        if (lowers[i] > uppers[i]) throw InvalidArgument("interval " + std::to_string(i) + " has lower > upper");
    }
}

}  // namespace

Relation interval_dominance(std::span<const double> lowers, std::span<const double> uppers) {
    check_intervals(lowers, uppers);
    Relation r(lowers.size());
    for (std::size_t i = 0; i < lowers.size(); ++i) {
        for (std::size_t j = 0; j < lowers.size(); ++j) {
            if (i != j && lowers[i] >= uppers[j]) r.set(i, j);
        }
    }
    return r;
}

Relation interval_bound_dominance(std::span<const double> lowers, std::span<const double> uppers) {
    check_intervals(lowers, uppers);
    Relation r(lowers.size());
    for (std::size_t i = 0; i < lowers.size(); ++i) {
        for (std::size_t j = 0; j < lowers.size(); ++j) {
            if (lowers[i] >= lowers[j] && uppers[i] >= uppers[j]) r.set(i, j);
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// RealMass

RealMass::RealMass(std::vector<Focal> focal) {
    if (focal.empty()) throw ValidationError("real mass function needs at least one focal set");
    double total = 0.0;
    for (auto& f : focal) {
        if (f.values.empty()) throw ValidationError("focal sets of a real mass function must be non-empty");
        if (!std::isfinite(f.mass) || f.mass < 0.0) throw ValidationError("masses must be finite and non-negative");
        std::sort(f.values.begin(), f.values.end());
        f.values.erase(std::unique(f.values.begin(), f.values.end()), f.values.end());
        total += f.mass;
    }
    if (std::abs(total - 1.0) > kMassTolerance) throw ValidationError("real mass function does not sum to 1");
    std::sort(focal.begin(), focal.end(), [](const Focal& a, const Focal& b) { return a.values < b.values; });
    for (auto& f : focal) {
        if (f.mass == 0.0) continue;
        if (!focal_.empty() && focal_.back().values == f.values) {
            focal_.back().mass += f.mass;
        } else {
            focal_.push_back(std::move(f));
        }
    }
}

RealMass RealMass::from_lottery(const MassFunction& mu, const UtilityTable& u) {
    if (!(mu.frame() == u.frame())) throw FrameMismatch("lottery and utility table use different frames");
    std::vector<Focal> focal;
    for (const auto& fe : mu.focal()) {
        Focal f;
        for (std::size_t k : fe.set.elements()) f.values.push_back(u(k));
        f.mass = fe.mass;
        focal.push_back(std::move(f));
    }
    return RealMass(std::move(focal));
}

RealMass RealMass::bayesian(std::span<const double> values, std::span<const double> probs) {
    if (values.size() != probs.size()) throw InvalidArgument("values and probabilities differ in length");
    std::vector<Focal> focal;
    for (std::size_t i = 0; i < values.size(); ++i) focal.push_back({{values[i]}, probs[i]});
    return RealMass(std::move(focal));
}

std::vector<double> RealMass::support() const {
    std::vector<double> out;
    for (const auto& f : focal_) out.insert(out.end(), f.values.begin(), f.values.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

double RealMass::belief_above(double x) const {
    double acc = 0.0;
    for (const auto& f : focal_) {
        if (f.values.front() > x) acc += f.mass;
    }
    return acc;
}

double RealMass::plausibility_above(double x) const {
    double acc = 0.0;
    for (const auto& f : focal_) {
        if (f.values.back() > x) acc += f.mass;
    }
    return acc;
}

bool credal_order(const RealMass& x, const RealMass& y, CredalOrder order, double tolerance) {
    auto points = x.support();
    const auto ys = y.support();
    points.insert(points.end(), ys.begin(), ys.end());
    for (double t : points) {
        const bool x_upper = order == CredalOrder::PlBel || order == CredalOrder::PlPl;
        const bool y_upper = order == CredalOrder::PlPl || order == CredalOrder::BelPl;
        const double lhs = x_upper ? x.plausibility_above(t) : x.belief_above(t);
        const double rhs = y_upper ? y.plausibility_above(t) : y.belief_above(t);
        if (lhs < rhs - tolerance) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Listings

namespace {

std::vector<std::size_t> name_order(const std::vector<std::string>& names, std::vector<std::size_t> items) {
    std::stable_sort(items.begin(), items.end(),
                     [&](std::size_t a, std::size_t b) { return names.at(a) < names.at(b); });
    return items;
}

}  // namespace

std::string format_choice_set(const std::vector<std::string>& names, const ChoiceSet& set) {
    std::string out = "{";
    bool first = true;
    for (std::size_t k : name_order(names, set)) {
        if (!first) out += ", ";
        first = false;
        out += names.at(k);
    }
    return out + "}";
}

std::string format_relation(const std::vector<std::string>& names, const Relation& r) {
    std::vector<std::size_t> all(r.size());
    std::iota(all.begin(), all.end(), std::size_t{0});
    const auto order = name_order(names, all);
    std::ostringstream os;
    for (std::size_t a = 0; a < order.size(); ++a) {
        for (std::size_t b = 0; b < order.size(); ++b) {
            const std::size_t i = order[a], j = order[b];
            if (i == j) continue;
            if (r.strictly_prefers(i, j)) {
                os << names.at(i) << " > " << names.at(j) << '\n';
            } else if (a < b && r.indifferent(i, j)) {
                os << names.at(i) << " ~ " << names.at(j) << '\n';
            }
        }
    }
    return os.str();
}

}  // namespace evdec

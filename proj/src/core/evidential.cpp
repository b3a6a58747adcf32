#include "evdec/evidential.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "evdec/error.hpp"

namespace evdec {

namespace {

void check_frames(const MassFunction& mu, const UtilityTable& u) {
    if (!(mu.frame() == u.frame())) throw FrameMismatch("lottery and utility table use different consequence frames");
}

void check_unit(double x, const char* what) {
    if (!(x >= 0.0 && x <= 1.0)) throw InvalidArgument(std::string(what) + " must lie in [0,1]");
}

std::vector<double> utilities_in(Subset a, const UtilityTable& u) {
    std::vector<double> out;
    for (std::size_t k : a.elements()) out.push_back(u(k));
    return out;
}

}  // namespace

std::pair<std::size_t, std::size_t> worst_and_best(Subset a, const UtilityTable& u) {
    if (a.empty()) throw InvalidArgument("worst/best consequence of an empty set");
    const auto elems = a.elements();
    std::size_t worst = elems.front();
    std::size_t best = elems.front();
    for (std::size_t k : elems) {
        if (u(k) < u(worst)) worst = k;
        if (u(k) > u(best)) best = k;
    }
    return {worst, best};
}

double lower_expectation(const MassFunction& mu, const UtilityTable& u) {
    check_frames(mu, u);
    double acc = 0.0;
    for (const auto& fe : mu.focal()) acc += fe.mass * u(worst_and_best(fe.set, u).first);
    return acc;
}

double upper_expectation(const MassFunction& mu, const UtilityTable& u) {
    check_frames(mu, u);
    double acc = 0.0;
    for (const auto& fe : mu.focal()) acc += fe.mass * u(worst_and_best(fe.set, u).second);
    return acc;
}

double generalized_hurwicz(const MassFunction& mu, const UtilityTable& u, double alpha) {
    check_unit(alpha, "pessimism index");
    return alpha * lower_expectation(mu, u) + (1.0 - alpha) * upper_expectation(mu, u);
}

double auto_hurwicz_alpha(const MassFunction& mu) { return nonspecificity(mu); }

double pignistic_expected_utility(const MassFunction& mu, const UtilityTable& u) {
    check_frames(mu, u);
    double acc = 0.0;
    for (const auto& fe : mu.focal()) {
        double sum = 0.0;
        for (std::size_t k : fe.set.elements()) sum += u(k);
        acc += fe.mass * sum / static_cast<double>(fe.set.size());
    }
    return acc;
}

double generalized_owa_expected_utility(const MassFunction& mu, const UtilityTable& u, double beta) {
    check_frames(mu, u);
    check_unit(beta, "degree of optimism");
    std::unordered_map<std::size_t, OwaWeights> cache;
    double acc = 0.0;
    for (const auto& fe : mu.focal()) {
        const std::size_t card = fe.set.size();
        auto it = cache.find(card);
        if (it == cache.end()) it = cache.emplace(card, max_entropy_owa_weights(card, beta)).first;
        const auto values = utilities_in(fe.set, u);
        acc += fe.mass * owa_aggregate(values, it->second);
    }
    return acc;
}

std::vector<double> generalized_minimax_regret(const PayoffMatrix& u, const MassFunction& m) {
    if (m.frame().labels() != u.state_names()) {
        throw FrameMismatch("mass function is not defined on the payoff matrix's states");
    }
    const auto regret = minimax_regret(u).regret;
    std::vector<double> out(u.acts(), 0.0);
    for (std::size_t i = 0; i < u.acts(); ++i) {
        for (const auto& fe : m.focal()) {
            double worst = 0.0;
            for (std::size_t j : fe.set.elements()) worst = std::max(worst, regret[i][j]);
            out[i] += fe.mass * worst;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// SetUtility

SetUtility::SetUtility(Frame frame, std::vector<double> table) : frame_(std::move(frame)), table_(std::move(table)) {
    if (frame_.size() > kMaxFrame) throw SizeLimit("set utility tables are limited to frames of 20 elements");
    if (table_.size() != (std::size_t{1} << frame_.size())) {
        throw InvalidArgument("set utility table must have 2^|frame| entries");
    }
    for (std::size_t mask = 1; mask < table_.size(); ++mask) {
        if (!std::isfinite(table_[mask])) throw ValidationError("set utilities must be finite");
    }
}

SetUtility SetUtility::from_function(Frame frame, const std::function<double(Subset)>& f) {
    if (frame.size() > kMaxFrame) throw SizeLimit("set utility tables are limited to frames of 20 elements");
    std::vector<double> table(std::size_t{1} << frame.size(), 0.0);
    for (std::size_t mask = 1; mask < table.size(); ++mask) table[mask] = f(Subset(static_cast<std::uint32_t>(mask)));
    return SetUtility(std::move(frame), std::move(table));
}

SetUtility SetUtility::minimum(const UtilityTable& u) {
    return from_function(u.frame(), [&](Subset a) { return u(worst_and_best(a, u).first); });
}

SetUtility SetUtility::maximum(const UtilityTable& u) {
    return from_function(u.frame(), [&](Subset a) { return u(worst_and_best(a, u).second); });
}

SetUtility SetUtility::hurwicz(const UtilityTable& u, double alpha) {
    check_unit(alpha, "pessimism index");
    return from_function(u.frame(), [&](Subset a) {
        const auto [lo, hi] = worst_and_best(a, u);
        return alpha * u(lo) + (1.0 - alpha) * u(hi);
    });
}

SetUtility SetUtility::mean(const UtilityTable& u) {
    return from_function(u.frame(), [&](Subset a) {
        double sum = 0.0;
        for (std::size_t k : a.elements()) sum += u(k);
        return sum / static_cast<double>(a.size());
    });
}

SetUtility SetUtility::owa(const UtilityTable& u, double beta) {
    check_unit(beta, "degree of optimism");
    return from_function(u.frame(), [&](Subset a) {
        return owa_aggregate(utilities_in(a, u), max_entropy_owa_weights(a.size(), beta));
    });
}

double SetUtility::operator()(Subset a) const {
    frame_.check(a);
    if (a.empty()) throw InvalidArgument("set utility is undefined on the empty set");
    return table_[a.bits()];
}

double linear_set_utility(const MassFunction& mu, const SetUtility& set_utility) {
    if (!(mu.frame() == set_utility.frame())) throw FrameMismatch("lottery and set utility use different frames");
    double acc = 0.0;
    for (const auto& fe : mu.focal()) acc += fe.mass * set_utility(fe.set);
    return acc;
}

// ---------------------------------------------------------------------------
// Jaffray

LocalPessimismIndex LocalPessimismIndex::constant(double alpha) {
    LocalPessimismIndex idx;
    idx.set_default(alpha);
    return idx;
}

void LocalPessimismIndex::set(std::size_t worst, std::size_t best, double alpha) {
    check_unit(alpha, "local pessimism index");
    pairs_[{worst, best}] = alpha;
}

void LocalPessimismIndex::set_default(double alpha) {
    check_unit(alpha, "local pessimism index");
    default_ = alpha;
}

double LocalPessimismIndex::at(std::size_t worst, std::size_t best) const {
    auto it = pairs_.find({worst, best});
    if (it != pairs_.end()) return it->second;
    if (default_) return *default_;
    throw InvalidArgument("local pessimism index has no value for consequence pair (" + std::to_string(worst) + ", " +
                          std::to_string(best) + ")");
}

double jaffray_utility(const MassFunction& mu, const UtilityTable& u, const LocalPessimismIndex& index) {
    check_frames(mu, u);
    double acc = 0.0;
    for (const auto& fe : mu.focal()) {
        const auto [lo, hi] = worst_and_best(fe.set, u);
        if (u(lo) == u(hi)) {
            acc += fe.mass * u(lo);
            continue;
        }
        const double a = index.at(lo, hi);
        acc += fe.mass * (a * u(lo) + (1.0 - a) * u(hi));
    }
    return acc;
}

}  // namespace evdec

#pragma once

// Complete-preorder criteria over evidential lotteries (mass functions on consequences).
// Every function returns a raw score; higher is better except for regrets.

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "evdec/belief.hpp"
#include "evdec/classical.hpp"

namespace evdec {

double lower_expectation(const MassFunction& mu, const UtilityTable& u);
double upper_expectation(const MassFunction& mu, const UtilityTable& u);

/// alpha * lower + (1 - alpha) * upper.
double generalized_hurwicz(const MassFunction& mu, const UtilityTable& u, double alpha);

/// Pessimism index chosen as the normalized nonspecificity of mu.
double auto_hurwicz_alpha(const MassFunction& mu);

double pignistic_expected_utility(const MassFunction& mu, const UtilityTable& u);

/// Each focal set is aggregated by the maximum-entropy OWA operator of its own
/// cardinality and degree of optimism beta.
double generalized_owa_expected_utility(const MassFunction& mu, const UtilityTable& u, double beta);

/// Expected maximal regret per act; lower is better. `m` lives on the state frame of `u`.
std::vector<double> generalized_minimax_regret(const PayoffMatrix& u, const MassFunction& m);

/// Utility of every non-empty consequence subset, stored by subset encoding.
class SetUtility {
public:
    /// Frames above this size are rejected; the table has 2^size entries.
    static constexpr std::size_t kMaxFrame = 20;

    SetUtility(Frame frame, std::vector<double> table);
    static SetUtility from_function(Frame frame, const std::function<double(Subset)>& f);

    static SetUtility minimum(const UtilityTable& u);
    static SetUtility maximum(const UtilityTable& u);
    static SetUtility hurwicz(const UtilityTable& u, double alpha);
    static SetUtility mean(const UtilityTable& u);
    static SetUtility owa(const UtilityTable& u, double beta);

    const Frame& frame() const { return frame_; }
    double operator()(Subset a) const;

private:
    Frame frame_;
    std::vector<double> table_;
};

/// sum over focal A of mu(A) U(A).
double linear_set_utility(const MassFunction& mu, const SetUtility& set_utility);

/// Local pessimism index alpha(worst, best) keyed by consequence indices, with an
/// optional fallback value for pairs not listed.
class LocalPessimismIndex {
public:
    LocalPessimismIndex() = default;
    static LocalPessimismIndex constant(double alpha);

    /// Throws InvalidArgument for a value outside [0,1].
    void set(std::size_t worst, std::size_t best, double alpha);
    void set_default(double alpha);

    /// Throws InvalidArgument when the pair is absent and no default is set.
    double at(std::size_t worst, std::size_t best) const;

private:
    std::map<std::pair<std::size_t, std::size_t>, double> pairs_;
    std::optional<double> default_;
};

/// Worst and best consequence of a non-empty subset under u. Ties on utility go to the
/// consequence declared earliest in the frame.
std::pair<std::size_t, std::size_t> worst_and_best(Subset a, const UtilityTable& u);

/// sum over focal A of mu(A) [alpha(c_A, C_A) u(c_A) + (1 - alpha(c_A, C_A)) u(C_A)],
/// with c_A, C_A the worst and best consequences of A. Focal sets whose worst and best
/// utilities coincide do not consult the index.
double jaffray_utility(const MassFunction& mu, const UtilityTable& u, const LocalPessimismIndex& index);

}  // namespace evdec

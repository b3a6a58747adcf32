#pragma once

// Decision under total ignorance: a payoff matrix and nothing else.

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace evdec {

/// n x s utility table, acts by rows, states by columns.
class PayoffMatrix {
public:
    PayoffMatrix(std::vector<std::string> acts, std::vector<std::string> states,
                 std::vector<std::vector<double>> utilities);

    std::size_t acts() const { return act_names_.size(); }
    std::size_t states() const { return state_names_.size(); }
    const std::vector<std::string>& act_names() const { return act_names_; }
    const std::vector<std::string>& state_names() const { return state_names_; }
    double operator()(std::size_t act, std::size_t state) const { return u_[act][state]; }
    const std::vector<double>& row(std::size_t act) const { return u_.at(act); }
    const std::vector<std::vector<double>>& rows() const { return u_; }

    /// Keeps only the listed acts, in the given order.
    PayoffMatrix select(const std::vector<std::size_t>& acts) const;

private:
    std::vector<std::string> act_names_;
    std::vector<std::string> state_names_;
    std::vector<std::vector<double>> u_;
};

struct PruneResult {
    std::vector<std::size_t> survivors;
    /// (dominating act, dominated act) for every dominance pair found.
    std::vector<std::pair<std::size_t, std::size_t>> dominance;
};

/// Removes every act dominated by another one: weakly better everywhere, strictly somewhere.
PruneResult prune_dominated(const PayoffMatrix& u);

struct IgnoranceCriterion {
    enum class Kind { Maximin, Maximax, Hurwicz, Laplace };
    Kind kind = Kind::Maximin;
    double alpha = 0.0;  // pessimism index; Hurwicz only

    static IgnoranceCriterion maximin() { return {Kind::Maximin, 0.0}; }
    static IgnoranceCriterion maximax() { return {Kind::Maximax, 0.0}; }
    static IgnoranceCriterion hurwicz(double alpha) { return {Kind::Hurwicz, alpha}; }
    static IgnoranceCriterion laplace() { return {Kind::Laplace, 0.0}; }
};

/// One score per act; higher is better. Throws InvalidArgument for alpha outside [0,1].
std::vector<double> score_ignorance(const PayoffMatrix& u, IgnoranceCriterion criterion);

struct RegretResult {
    std::vector<std::vector<double>> regret;  // r_ij = max_l u_lj - u_ij
    std::vector<double> max_regret;           // lower is better
};

RegretResult minimax_regret(const PayoffMatrix& u);

/// OWA weight vector: non-negative, sums to one. w[0] applies to the largest value.
class OwaWeights {
public:
    explicit OwaWeights(std::vector<double> w);

    static OwaWeights maximum(std::size_t arity);
    static OwaWeights minimum(std::size_t arity);
    static OwaWeights mean(std::size_t arity);
    static OwaWeights hurwicz(std::size_t arity, double alpha);

    std::size_t size() const { return w_.size(); }
    double operator[](std::size_t i) const { return w_[i]; }
    const std::vector<double>& values() const { return w_; }

private:
    std::vector<double> w_;
};

/// sum_i w_i * (i-th largest value).
double owa_aggregate(std::span<const double> values, const OwaWeights& w);

/// sum_i w_i (s - i) / (s - 1); requires s >= 2.
double degree_of_optimism(const OwaWeights& w);

/// Maximum-entropy OWA weights with the given degree of optimism.
///
/// The maximizer has the exponential form w_i proportional to exp(lambda (s-i)/(s-1)),
/// so lambda is found by bisection on the increasing map lambda -> optimism over
/// [-200, 200]. beta = 0 and beta = 1 return the minimum and maximum corner vectors,
/// beta = 0.5 returns the uniform vector exactly. Arity 1 yields the single weight 1.
OwaWeights max_entropy_owa_weights(std::size_t arity, double beta);

}  // namespace evdec

#pragma once

// Decision rules of the imprecise-probability view: gambles compared through the
// credal set of a mass function on the states.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "evdec/belief.hpp"
#include "evdec/preference.hpp"
#include "evdec/simplex.hpp"

namespace evdec {

/// Real value per state.
class Gamble {
public:
    Gamble() = default;
    explicit Gamble(std::vector<double> values);

    std::size_t size() const { return v_.size(); }
    double operator[](std::size_t k) const { return v_[k]; }
    const std::vector<double>& values() const { return v_; }

    friend Gamble operator-(const Gamble& a, const Gamble& b);
    friend Gamble operator+(const Gamble& a, const Gamble& b);
    friend Gamble operator-(const Gamble& a);

private:
    std::vector<double> v_;
};

/// Expectation of X under a probability vector over the states.
double expectation(std::span<const double> p, const Gamble& x);

/// sum over focal B of m(B) min_{w in B} X(w).
double lower_prevision(const MassFunction& m, const Gamble& x);
/// sum over focal B of m(B) max_{w in B} X(w).
double upper_prevision(const MassFunction& m, const Gamble& x);

struct MaximalityResult {
    /// delta[i][j] = lower_prevision(X_i - X_j); the diagonal is zero.
    std::vector<std::vector<double>> delta;
    /// i >= j iff delta[i][j] >= -tolerance.
    Relation relation;
    /// Items j with no i such that delta[i][j] > tolerance.
    ChoiceSet choice;
};

MaximalityResult maximality_relation(std::span<const Gamble> gambles, const MassFunction& m,
                                     double tolerance = 1e-12);

/// Linear program deciding e-admissibility of one gamble, with the column layout
/// needed to read an allocation and a probability back from its solution.
struct EAdmissibilityProgram {
    LinearProgram lp;
    /// Column of a(w_k, F_j), indexed [focal j][position of w_k inside F_j].
    std::vector<std::vector<std::size_t>> allocation_columns;
    /// Column of p_k per state.
    std::vector<std::size_t> probability_columns;
    /// Column of lambda_l per competing gamble (index of the gamble being tested is absent).
    std::vector<std::size_t> slack_columns;
    std::vector<std::size_t> competitors;
};

/// Allocation constraints per focal set, p_k as the sum of its allocations, and
/// E_P(X_i - X_l) + lambda_l >= 0 for each l != i; minimizes the sum of lambdas.
EAdmissibilityProgram build_e_admissibility_program(std::span<const Gamble> gambles, const MassFunction& m,
                                                    std::size_t i);

struct EAdmissibilityOptions {
    /// Optimum at or below this counts as zero.
    double tolerance = 1e-8;
    SimplexOptions simplex = {};
};

struct EAdmissibility {
    bool admissible = false;
    double optimum = 0.0;
    /// Compatible probability under which the gamble maximizes expected value.
    std::optional<std::vector<double>> witness;
};

/// Throws SolverError if the LP solve does not reach optimality.
EAdmissibility e_admissible(std::span<const Gamble> gambles, const MassFunction& m, std::size_t i,
                            const EAdmissibilityOptions& options = {});

struct EAdmissibleMember {
    std::size_t index;
    std::vector<double> witness;
};

/// Maximality choice set filtered through e_admissible.
std::vector<EAdmissibleMember> e_admissible_set(std::span<const Gamble> gambles, const MassFunction& m,
                                                const EAdmissibilityOptions& options = {});

}  // namespace evdec

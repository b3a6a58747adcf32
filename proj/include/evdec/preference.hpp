#pragma once

// Preference relations over a finite set of items and the choice sets they induce.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "evdec/belief.hpp"

namespace evdec {

/// Item indices in increasing order.
using ChoiceSet = std::vector<std::size_t>;

/// Weak preference table: at_least(i, j) means "i is at least as desirable as j".
/// Always reflexive. Strict preference and indifference are derived, never stored.
class Relation {
public:
    /// Identity relation (reflexive pairs only).
    explicit Relation(std::size_t n);

    enum class Better { Higher, Lower };
    /// Complete preorder induced by scores. Sorted scores are grouped into
    /// indifference classes: a score joins the current class when it is within
    /// `tolerance` of that class's leading score, which keeps the result transitive.
    static Relation from_scores(std::span<const double> scores, Better better = Better::Higher,
                                double tolerance = 1e-9);

    std::size_t size() const { return n_; }
    void set(std::size_t i, std::size_t j, bool value = true);
    bool at_least(std::size_t i, std::size_t j) const { return table_[i * n_ + j] != 0; }
    bool strictly_prefers(std::size_t i, std::size_t j) const { return at_least(i, j) && !at_least(j, i); }
    bool indifferent(std::size_t i, std::size_t j) const { return at_least(i, j) && at_least(j, i); }
    bool incomparable(std::size_t i, std::size_t j) const { return !at_least(i, j) && !at_least(j, i); }

    bool is_complete() const;
    bool is_transitive() const;

    friend bool operator==(const Relation&, const Relation&) = default;

private:
    std::size_t n_;
    std::vector<char> table_;
};

/// Smallest transitive relation containing `r`.
Relation transitive_closure(const Relation& r);

/// Items no other item is strictly preferred to.
ChoiceSet maximal_elements(const Relation& r);
/// Items at least as desirable as every item.
ChoiceSet greatest_elements(const Relation& r);

/// Chosen items indifferent among themselves and strictly above every other item;
/// unchosen items mutually incomparable. Throws InvalidArgument for an empty or
/// out-of-range choice.
Relation relation_from_choice_set(std::size_t n, const ChoiceSet& chosen);

/// i >= j iff lowers[i] >= uppers[j] (for i != j).
Relation interval_dominance(std::span<const double> lowers, std::span<const double> uppers);
/// i >= j iff lowers[i] >= lowers[j] and uppers[i] >= uppers[j].
Relation interval_bound_dominance(std::span<const double> lowers, std::span<const double> uppers);

/// Mass function whose focal sets are finite sets of reals.
class RealMass {
public:
    struct Focal {
        std::vector<double> values;  // sorted, distinct
        double mass = 0.0;
    };

    /// Each focal set is sorted and deduplicated; equal focal sets are merged.
    /// Throws ValidationError for empty input, an empty focal set, or a non-normalized total.
    explicit RealMass(std::vector<Focal> focal);

    /// Image of a lottery under its utility function.
    static RealMass from_lottery(const MassFunction& mu, const UtilityTable& u);
    /// Point masses at `values` with probabilities `probs`.
    static RealMass bayesian(std::span<const double> values, std::span<const double> probs);

    const std::vector<Focal>& focal() const { return focal_; }
    /// All support points, sorted and distinct.
    std::vector<double> support() const;

    /// Bel((x, +inf)): mass of focal sets whose minimum exceeds x.
    double belief_above(double x) const;
    /// Pl((x, +inf)): mass of focal sets whose maximum exceeds x.
    double plausibility_above(double x) const;

private:
    std::vector<Focal> focal_;
};

enum class CredalOrder {
    PlBel,   // Pl_X >= Bel_Y
    BelBel,  // Bel_X >= Bel_Y
    PlPl,    // Pl_X >= Pl_Y
    BelPl,   // Bel_X >= Pl_Y
};

/// Evaluates the chosen inequality on (x, +inf) for every x in the joint support.
/// Both sides are step functions that only change at support points, so this is exact.
bool credal_order(const RealMass& x, const RealMass& y, CredalOrder order, double tolerance = 1e-12);

/// "{a, b}" listing ordered by name.
std::string format_choice_set(const std::vector<std::string>& names, const ChoiceSet& set);

/// One line per ordered pair with a strict preference ("a > b") or indifference
/// ("a ~ b", listed once), ordered by name.
std::string format_relation(const std::vector<std::string>& names, const Relation& r);

}  // namespace evdec

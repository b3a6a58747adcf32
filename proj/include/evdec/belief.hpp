#pragma once

// Finite-frame belief-function calculus.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "evdec/subset.hpp"

namespace evdec {

/// Ordered set of distinct element names. The order fixes the subset encoding.
class Frame {
public:
    Frame() = default;
    explicit Frame(std::vector<std::string> labels);

    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t k) const { return labels_.at(k); }

    /// Throws ValidationError for an unknown label.
    std::size_t index_of(const std::string& label) const;
    Subset subset_of(const std::vector<std::string>& labels) const;
    std::vector<std::string> labels_of(Subset s) const;
    Subset full() const { return Subset::full(size()); }

    /// Throws FrameMismatch if `s` has elements outside this frame.
    void check(Subset s) const;

    friend bool operator==(const Frame&, const Frame&) = default;

private:
    std::vector<std::string> labels_;
};

struct FocalElement {
    Subset set;
    double mass = 0.0;
    friend bool operator==(const FocalElement&, const FocalElement&) = default;
};

/// Tolerance on the total mass accepted at construction.
inline constexpr double kMassTolerance = 1e-9;

/// Normalized mass function: focal sets are non-empty and carry positive mass.
/// Focal elements are kept sorted by subset encoding; entries with mass zero are dropped.
class MassFunction {
public:
    /// Throws ValidationError when a focal set is empty or outside the frame, a mass is
    /// negative or non-finite, a focal set repeats, or the total differs from 1 by more
    /// than kMassTolerance.
    MassFunction(Frame frame, std::vector<FocalElement> focal);

    /// Same checks, except the total only has to be positive; masses are rescaled to sum to 1.
    static MassFunction normalized(Frame frame, std::vector<FocalElement> focal);
    static MassFunction vacuous(Frame frame);
    static MassFunction logical(Frame frame, Subset focal_set);
    /// Probability vector over the frame; zero entries are not focal.
    static MassFunction bayesian(Frame frame, std::span<const double> probabilities);

    const Frame& frame() const { return frame_; }
    const std::vector<FocalElement>& focal() const { return focal_; }
    /// m(A); zero for non-focal sets.
    double mass(Subset a) const;
    bool is_bayesian() const;

private:
    MassFunction(Frame frame, std::vector<FocalElement> focal, bool rescale);

    Frame frame_;
    std::vector<FocalElement> focal_;
};

/// Mapping from states to non-empty consequence subsets. Single-valued acts map
/// every state to a singleton.
class Act {
public:
    Act(std::string name, Frame states, Frame consequences, std::vector<Subset> images);
    static Act single_valued(std::string name, Frame states, Frame consequences,
                             const std::vector<std::size_t>& outcome);

    const std::string& name() const { return name_; }
    const Frame& states() const { return states_; }
    const Frame& consequences() const { return consequences_; }
    Subset image(std::size_t state) const { return images_.at(state); }
    const std::vector<Subset>& images() const { return images_; }
    bool is_single_valued() const;
    /// Union of the images of the states in `a`.
    Subset image_of(Subset a) const;

private:
    std::string name_;
    Frame states_;
    Frame consequences_;
    std::vector<Subset> images_;
};

/// Real utility per consequence.
class UtilityTable {
public:
    UtilityTable(Frame consequences, std::vector<double> values);

    const Frame& frame() const { return frame_; }
    double operator()(std::size_t consequence) const { return values_.at(consequence); }
    const std::vector<double>& values() const { return values_; }

private:
    Frame frame_;
    std::vector<double> values_;
};

double belief(const MassFunction& m, Subset a);
double plausibility(const MassFunction& m, Subset a);

/// Bel(A) for every A, indexed by the subset encoding (size 2^|frame|).
std::vector<double> belief_table(const MassFunction& m);

/// Negative values in [-kMobiusClampTolerance, 0) are clamped to zero.
inline constexpr double kMobiusClampTolerance = 1e-9;
/// |m(A)| at or below this is treated as round-off and not stored as a focal set.
inline constexpr double kMobiusNoise = 1e-12;

/// Möbius inversion of a belief table indexed by subset encoding.
/// Throws NotABeliefFunction when some m(A) < -kMobiusClampTolerance or the boundary
/// values Bel(empty)=0, Bel(frame)=1 do not hold.
MassFunction mass_from_belief(const Frame& frame, std::span<const double> bel);

/// Transfers each focal mass m(A) to the union of f's images over A.
MassFunction pushforward(const MassFunction& m, const Act& f);

/// p(c) = sum over focal A containing c of m(A)/|A|.
std::vector<double> pignistic(const MassFunction& m);

/// Singleton plausibilities, normalized.
std::vector<double> plausibility_transform(const MassFunction& m);

/// Normalized nonspecificity (1/log2|frame|) * sum m(A) log2|A|. Requires |frame| >= 2.
double nonspecificity(const MassFunction& m);

inline constexpr std::size_t kDefaultVertexCap = 1'000'000;

/// Probability vectors obtained by sending each focal mass entirely to one of its
/// elements, duplicates removed. Throws SizeLimit when the number of allocations
/// (product of focal cardinalities) exceeds `cap`.
std::vector<std::vector<double>> credal_vertices(const MassFunction& m,
                                                 std::size_t cap = kDefaultVertexCap);

/// Sum of p over the elements of `a`.
double probability_of(std::span<const double> p, Subset a);

}  // namespace evdec

#include "evdec/belief.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <set>
#include <unordered_set>

#include "evdec/error.hpp"

namespace evdec {

// ---------------------------------------------------------------------------
// Frame

Frame::Frame(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) throw ValidationError("frame must have at least one element");
    if (labels_.size() > kMaxFrameSize) {
        throw SizeLimit("frame has " + std::to_string(labels_.size()) + " elements; the cap is " +
                        std::to_string(kMaxFrameSize));
    }
    std::unordered_set<std::string> seen;
    for (const auto& l : labels_) {
        if (!seen.insert(l).second) throw ValidationError("duplicate frame label '" + l + "'");
    }
}

std::size_t Frame::index_of(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw ValidationError("unknown label '" + label + "'");
    return static_cast<std::size_t>(it - labels_.begin());
}

Subset Frame::subset_of(const std::vector<std::string>& labels) const {
    std::uint32_t bits = 0;
    for (const auto& l : labels) bits |= Subset::singleton(index_of(l)).bits();
    return Subset(bits);
}

std::vector<std::string> Frame::labels_of(Subset s) const {
    check(s);
    std::vector<std::string> out;
    for (std::size_t k : s.elements()) out.push_back(labels_[k]);
    return out;
}

void Frame::check(Subset s) const {
    if (!s.fits(size())) throw FrameMismatch("subset has elements outside a frame of size " + std::to_string(size()));
}

// ---------------------------------------------------------------------------
// MassFunction

MassFunction::MassFunction(Frame frame, std::vector<FocalElement> focal)
    : MassFunction(std::move(frame), std::move(focal), false) {}

MassFunction MassFunction::normalized(Frame frame, std::vector<FocalElement> focal) {
    return MassFunction(std::move(frame), std::move(focal), true);
}

MassFunction::MassFunction(Frame frame, std::vector<FocalElement> focal, bool rescale)
    : frame_(std::move(frame)) {
    if (frame_.size() == 0) throw ValidationError("mass function needs a non-empty frame");
    std::sort(focal.begin(), focal.end(), [](const FocalElement& a, const FocalElement& b) { return a.set < b.set; });
    double total = 0.0;
    for (std::size_t i = 0; i < focal.size(); ++i) {
        const auto& fe = focal[i];
        if (fe.set.empty()) throw ValidationError("the empty set cannot carry mass");
        if (!fe.set.fits(frame_.size())) throw ValidationError("focal set outside the frame");
        if (!std::isfinite(fe.mass) || fe.mass < 0.0) {
            throw ValidationError("mass must be finite and non-negative");
        }
        if (i > 0 && focal[i - 1].set == fe.set) throw ValidationError("duplicate focal set");
        total += fe.mass;
    }
    if (rescale) {
        if (!(total > 0.0)) throw ValidationError("total mass must be positive to renormalize");
        for (auto& fe : focal) fe.mass /= total;
    } else if (std::abs(total - 1.0) > kMassTolerance) {
        std::ostringstream os;
        os.precision(12);
        os << "masses sum to " << total << ", expected 1";
        throw ValidationError(os.str());
    }
    focal.erase(std::remove_if(focal.begin(), focal.end(), [](const FocalElement& fe) { return fe.mass == 0.0; }),
                focal.end());
    focal_ = std::move(focal);
}

MassFunction MassFunction::vacuous(Frame frame) {
    Subset all = frame.full();
    return MassFunction(std::move(frame), {{all, 1.0}});
}

MassFunction MassFunction::logical(Frame frame, Subset focal_set) {
    return MassFunction(std::move(frame), {{focal_set, 1.0}});
}

MassFunction MassFunction::bayesian(Frame frame, std::span<const double> probabilities) {
    if (probabilities.size() != frame.size()) throw InvalidArgument("probability vector length differs from frame size");
    std::vector<FocalElement> focal;
    for (std::size_t k = 0; k < probabilities.size(); ++k) {
        if (probabilities[k] != 0.0) focal.push_back({Subset::singleton(k), probabilities[k]});
    }
    return MassFunction(std::move(frame), std::move(focal));
}

double MassFunction::mass(Subset a) const {
    auto it = std::lower_bound(focal_.begin(), focal_.end(), a,
                               [](const FocalElement& fe, Subset s) { return fe.set < s; });
    return (it != focal_.end() && it->set == a) ? it->mass : 0.0;
}

bool MassFunction::is_bayesian() const {
    return std::all_of(focal_.begin(), focal_.end(), [](const FocalElement& fe) { return fe.set.size() == 1; });
}

// ---------------------------------------------------------------------------
// Act, UtilityTable

Act::Act(std::string name, Frame states, Frame consequences, std::vector<Subset> images)
    : name_(std::move(name)),
      states_(std::move(states)),
      consequences_(std::move(consequences)),
      images_(std::move(images)) {
    if (images_.size() != states_.size()) {
        throw ValidationError("act '" + name_ + "' must map every state");
    }
    for (std::size_t j = 0; j < images_.size(); ++j) {
        if (images_[j].empty()) {
            throw ValidationError("act '" + name_ + "' has an empty image at state '" + states_.label(j) + "'");
        }
        if (!images_[j].fits(consequences_.size())) {
            throw ValidationError("act '" + name_ + "' maps outside the consequence frame");
        }
    }
}

Act Act::single_valued(std::string name, Frame states, Frame consequences, const std::vector<std::size_t>& outcome) {
    std::vector<Subset> images;
    images.reserve(outcome.size());
    for (std::size_t c : outcome) images.push_back(Subset::singleton(c));
    return Act(std::move(name), std::move(states), std::move(consequences), std::move(images));
}

bool Act::is_single_valued() const {
    return std::all_of(images_.begin(), images_.end(), [](Subset s) { return s.size() == 1; });
}

Subset Act::image_of(Subset a) const {
    Subset out;
    for (std::size_t j : a.elements()) out = out | images_.at(j);
    return out;
}

UtilityTable::UtilityTable(Frame consequences, std::vector<double> values)
    : frame_(std::move(consequences)), values_(std::move(values)) {
    if (values_.size() != frame_.size()) throw ValidationError("utility table must cover every consequence");
    for (double v : values_) {
        if (!std::isfinite(v)) throw ValidationError("utilities must be finite");
    }
}

// ---------------------------------------------------------------------------
// Set functions

double belief(const MassFunction& m, Subset a) {
    m.frame().check(a);
    double bel = 0.0;
    for (const auto& fe : m.focal()) {
        if (fe.set.is_subset_of(a)) bel += fe.mass;
    }
    return bel;
}

double plausibility(const MassFunction& m, Subset a) {
    m.frame().check(a);
    double pl = 0.0;
    for (const auto& fe : m.focal()) {
        if (fe.set.intersects(a)) pl += fe.mass;
    }
    return pl;
}

std::vector<double> belief_table(const MassFunction& m) {
    const std::size_t s = m.frame().size();
    std::vector<double> table(std::size_t{1} << s, 0.0);
    for (const auto& fe : m.focal()) table[fe.set.bits()] += fe.mass;
    // Zeta transform over the subset lattice.
    for (std::size_t bit = 0; bit < s; ++bit) {
        const std::size_t b = std::size_t{1} << bit;
        for (std::size_t mask = 0; mask < table.size(); ++mask) {
            if (mask & b) table[mask] += table[mask ^ b];
        }
    }
    return table;
}

MassFunction mass_from_belief(const Frame& frame, std::span<const double> bel) {
    const std::size_t s = frame.size();
    const std::size_t n = std::size_t{1} << s;
    if (bel.size() != n) throw InvalidArgument("belief table must have 2^|frame| entries");
    if (std::abs(bel[0]) > kMobiusClampTolerance) throw NotABeliefFunction("Bel(empty set) must be 0");
    if (std::abs(bel[n - 1] - 1.0) > kMobiusClampTolerance) throw NotABeliefFunction("Bel(frame) must be 1");

    std::vector<double> m(bel.begin(), bel.end());
    for (std::size_t bit = 0; bit < s; ++bit) {
        const std::size_t b = std::size_t{1} << bit;
        for (std::size_t mask = 0; mask < n; ++mask) {
            if (mask & b) m[mask] -= m[mask ^ b];
        }
    }

    std::vector<FocalElement> focal;
    for (std::size_t mask = 1; mask < n; ++mask) {
        double v = m[mask];
        if (v < -kMobiusClampTolerance) {
            std::ostringstream os;
            os << "Möbius inverse is negative (" << v << ") on subset {"
               << [&] {
                      std::string out;
                      for (const auto& l : frame.labels_of(Subset(static_cast<std::uint32_t>(mask)))) {
                          out += (out.empty() ? "" : ",") + l;
                      }
                      return out;
                  }()
               << "}";
            throw NotABeliefFunction(os.str());
        }
        if (v > kMobiusNoise) focal.push_back({Subset(static_cast<std::uint32_t>(mask)), v});
    }
    return MassFunction(frame, std::move(focal));
}

MassFunction pushforward(const MassFunction& m, const Act& f) {
    if (!(m.frame() == f.states())) throw FrameMismatch("mass function and act '" + f.name() + "' use different state frames");
    std::vector<FocalElement> image;
    for (const auto& fe : m.focal()) {
        Subset b = f.image_of(fe.set);
        auto it = std::find_if(image.begin(), image.end(), [&](const FocalElement& x) { return x.set == b; });
        if (it == image.end()) {
            image.push_back({b, fe.mass});
        } else {
            it->mass += fe.mass;
        }
    }
    return MassFunction(f.consequences(), std::move(image));
}

std::vector<double> pignistic(const MassFunction& m) {
    std::vector<double> p(m.frame().size(), 0.0);
    for (const auto& fe : m.focal()) {
        const double share = fe.mass / static_cast<double>(fe.set.size());
        for (std::size_t k : fe.set.elements()) p[k] += share;
    }
    return p;
}

std::vector<double> plausibility_transform(const MassFunction& m) {
    std::vector<double> p(m.frame().size(), 0.0);
    for (const auto& fe : m.focal()) {
        for (std::size_t k : fe.set.elements()) p[k] += fe.mass;
    }
    const double total = std::accumulate(p.begin(), p.end(), 0.0);
    for (double& v : p) v /= total;
    return p;
}

double nonspecificity(const MassFunction& m) {
    const std::size_t s = m.frame().size();
    if (s < 2) throw InvalidArgument("nonspecificity is undefined on a single-element frame");
    double acc = 0.0;
    for (const auto& fe : m.focal()) acc += fe.mass * std::log2(static_cast<double>(fe.set.size()));
    return acc / std::log2(static_cast<double>(s));
}

std::vector<std::vector<double>> credal_vertices(const MassFunction& m, std::size_t cap) {
    const auto& focal = m.focal();
    std::vector<std::vector<std::size_t>> choices;
    std::size_t count = 1;
    for (const auto& fe : focal) {
        choices.push_back(fe.set.elements());
        if (count > cap / choices.back().size()) {
            throw SizeLimit("credal vertex enumeration exceeds the cap of " + std::to_string(cap) + " allocations");
        }
        count *= choices.back().size();
    }
    if (count > cap) throw SizeLimit("credal vertex enumeration exceeds the cap of " + std::to_string(cap) + " allocations");

    // Vertices reached by different allocations may differ by round-off only.
    constexpr double kKeyScale = 1e12;
    std::set<std::vector<long long>> seen;
    std::vector<std::vector<double>> vertices;
    std::vector<std::size_t> pick(focal.size(), 0);
    const std::size_t s = m.frame().size();
    for (std::size_t iter = 0; iter < count; ++iter) {
        std::vector<double> p(s, 0.0);
        for (std::size_t j = 0; j < focal.size(); ++j) p[choices[j][pick[j]]] += focal[j].mass;
        std::vector<long long> key(s);
        for (std::size_t k = 0; k < s; ++k) key[k] = std::llround(p[k] * kKeyScale);
        if (seen.insert(std::move(key)).second) vertices.push_back(std::move(p));
        // Odometer increment.
        for (std::size_t j = 0; j < pick.size(); ++j) {
            if (++pick[j] < choices[j].size()) break;
            pick[j] = 0;
        }
    }
    return vertices;
}

double probability_of(std::span<const double> p, Subset a) {
    double acc = 0.0;
    for (std::size_t k : a.elements()) acc += p[k];
    return acc;
}

}  // namespace evdec

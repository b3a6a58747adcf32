#pragma once

// Random instances for property tests. Every suite seeds its own engine.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "evdec/belief.hpp"

namespace evdec::testing {

inline constexpr std::uint64_t kSeed = 20240611;

class Gen {
public:
    explicit Gen(std::uint64_t seed = kSeed) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    std::size_t index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
    std::size_t between(std::size_t lo, std::size_t hi) {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
    }
    bool coin() { return index(2) == 1; }

    Frame frame(std::size_t size, const std::string& prefix = "w") {
        std::vector<std::string> labels;
        for (std::size_t k = 0; k < size; ++k) labels.push_back(prefix + std::to_string(k + 1));
        return Frame(labels);
    }
    Frame frame_up_to(std::size_t max_size, std::size_t min_size = 1) { return frame(between(min_size, max_size)); }

    Subset subset(std::size_t frame_size) {
        const std::uint32_t limit = std::uint32_t{1} << frame_size;
        return Subset(static_cast<std::uint32_t>(between(1, limit - 1)));
    }

    /// Up to `max_focal` distinct focal sets with random positive masses.
    MassFunction mass(const Frame& f, std::size_t max_focal = 6) {
        const std::size_t possible = (std::size_t{1} << f.size()) - 1;
        const std::size_t count = between(1, std::min(max_focal, possible));
        std::set<Subset> sets;
        while (sets.size() < count) sets.insert(subset(f.size()));
        std::vector<FocalElement> focal;
        for (Subset s : sets) focal.push_back({s, uniform(0.05, 1.0)});
        return MassFunction::normalized(f, focal);
    }

    MassFunction bayesian(const Frame& f) {
        std::vector<double> p(f.size());
        double total = 0.0;
        for (double& x : p) total += (x = uniform(0.05, 1.0));
        for (double& x : p) x /= total;
        return MassFunction::bayesian(f, p);
    }

    /// Small integers produce ties often; set `integers` false for continuous values.
    std::vector<double> values(std::size_t n, bool integers = true, double lo = -10, double hi = 10) {
        std::vector<double> v(n);
        for (double& x : v) {
            x = integers ? static_cast<double>(static_cast<long>(between(0, static_cast<std::size_t>(hi - lo)))) + lo
                         : uniform(lo, hi);
        }
        return v;
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

/// Equality of mass functions up to `tol` per focal set.
inline bool same_mass(const MassFunction& a, const MassFunction& b, double tol = 1e-9) {
    if (!(a.frame() == b.frame()) || a.focal().size() != b.focal().size()) return false;
    for (std::size_t j = 0; j < a.focal().size(); ++j) {
        if (a.focal()[j].set != b.focal()[j].set) return false;
        if (std::abs(a.focal()[j].mass - b.focal()[j].mass) > tol) return false;
    }
    return true;
}

}  // namespace evdec::testing

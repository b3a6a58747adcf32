#include <doctest.h>

#include <algorithm>

#include "evdec/error.hpp"
#include "evdec/evidential.hpp"
#include "evdec/preference.hpp"
#include "generators.hpp"

using namespace evdec;
using evdec::testing::Gen;

namespace {

RealMass random_real_mass(Gen& g, bool bayesian = false) {
    const std::size_t count = g.between(1, 4);
    std::vector<RealMass::Focal> focal;
    double total = 0.0;
    for (std::size_t j = 0; j < count; ++j) {
        RealMass::Focal f;
        const std::size_t size = bayesian ? 1 : g.between(1, 3);
        for (std::size_t k = 0; k < size; ++k) f.values.push_back(static_cast<double>(g.between(0, 6)));
        f.mass = g.uniform(0.1, 1.0);
        total += f.mass;
        focal.push_back(std::move(f));
    }
    for (auto& f : focal) f.mass /= total;
    return RealMass(focal);
}

// Lower expectation of h(X) uses each focal minimum, the upper one each focal maximum.
template <class H>
double lower_of(const RealMass& m, H h) {
    double total = 0.0;
    for (const auto& f : m.focal()) total += f.mass * h(f.values.front());
    return total;
}

template <class H>
double upper_of(const RealMass& m, H h) {
    double total = 0.0;
    for (const auto& f : m.focal()) total += f.mass * h(f.values.back());
    return total;
}

// P(X <= x) for a Bayesian real mass.
double cdf(const RealMass& m, double x) {
    double total = 0.0;
    for (const auto& f : m.focal()) total += f.values.front() <= x ? f.mass : 0.0;
    return total;
}

bool stochastically_dominates(const RealMass& x, const RealMass& y) {
    std::vector<double> pts = x.support();
    for (double v : y.support()) pts.push_back(v);
    for (double t : pts) {
        if (cdf(x, t) > cdf(y, t) + 1e-12) return false;
    }
    return true;
}

Relation random_relation(Gen& g, std::size_t n) {
    Relation r(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && g.index(3) == 0) r.set(i, j);
        }
    }
    return r;
}

}  // namespace

TEST_CASE("relations from scores") {
    const std::vector<double> maximin{23, 2, 1, 22};
    const auto r = Relation::from_scores(maximin);
    CHECK(r.is_complete());
    CHECK(r.is_transitive());
    CHECK(maximal_elements(r) == ChoiceSet{0});
    CHECK(greatest_elements(r) == ChoiceSet{0});

    const std::vector<double> regrets{71, 26, 45, 27};
    CHECK(greatest_elements(Relation::from_scores(regrets, Relation::Better::Lower)) == ChoiceSet{1});

    const std::vector<double> ties{1.0, 1.0 + 1e-12, 0.5};
    const auto t = Relation::from_scores(ties);
    CHECK(t.indifferent(0, 1));
    CHECK(t.strictly_prefers(1, 2));
    CHECK(greatest_elements(t) == ChoiceSet{0, 1});
}

TEST_CASE("maximal and greatest elements") {
    Relation none(3);
    CHECK(maximal_elements(none) == ChoiceSet{0, 1, 2});
    CHECK(greatest_elements(none).empty());

    Relation chain(3);
    chain.set(0, 1);
    chain.set(1, 2);
    chain.set(0, 2);
    CHECK(maximal_elements(chain) == ChoiceSet{0});
    CHECK(greatest_elements(chain) == ChoiceSet{0});

    Relation r(2);
    r.set(0, 1);
    CHECK_THROWS_AS(r.set(0, 0, false), InvalidArgument);
    CHECK(r.at_least(0, 0));
}

TEST_CASE("relation from a choice set") {
    const auto r = relation_from_choice_set(3, {0, 1});
    CHECK(r.indifferent(0, 1));
    CHECK(r.strictly_prefers(0, 2));
    CHECK(r.strictly_prefers(1, 2));
    CHECK(r.at_least(2, 2));
    CHECK(greatest_elements(r) == ChoiceSet{0, 1});

    const auto all = relation_from_choice_set(3, {0, 1, 2});
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) CHECK(all.indifferent(i, j));
    }
    CHECK_THROWS_AS(relation_from_choice_set(3, {}), InvalidArgument);
    CHECK_THROWS_AS(relation_from_choice_set(3, {3}), InvalidArgument);
}

TEST_CASE("transitive closure") {
    Relation r(3);
    r.set(0, 1);
    r.set(1, 2);
    CHECK_FALSE(r.is_transitive());
    const auto c = transitive_closure(r);
    CHECK(c.is_transitive());
    CHECK(c.at_least(0, 2));
    CHECK_FALSE(c.at_least(2, 0));
}

TEST_CASE("interval dominance and interval bound dominance") {
    const std::vector<double> lo{29.0, 30.2, 2.8, 22.3}, up{35.6, 54.8, 49.7, 49.3};
    CHECK(maximal_elements(interval_dominance(lo, up)) == ChoiceSet{0, 1, 2, 3});
    CHECK(maximal_elements(interval_bound_dominance(lo, up)) == ChoiceSet{1});

    const std::vector<double> lo2{5, 1}, up2{6, 2};
    const auto r = interval_dominance(lo2, up2);
    CHECK(r.strictly_prefers(0, 1));
    const std::vector<double> same_lo{1, 1}, same_up{1, 1};
    const auto s = interval_dominance(same_lo, same_up);
    CHECK(s.indifferent(0, 1));
    CHECK(maximal_elements(s) == ChoiceSet{0, 1});

    const std::vector<double> bad_lo{2}, bad_up{1};
    CHECK_THROWS_AS(interval_dominance(bad_lo, bad_up), InvalidArgument);
    CHECK_THROWS_AS(interval_bound_dominance(bad_lo, bad_up), InvalidArgument);
}

TEST_CASE("credal orders on real masses") {
    const RealMass x({{{1.0, 3.0}, 0.5}, {{2.0}, 0.5}});
    CHECK(x.support() == std::vector<double>{1, 2, 3});
    CHECK(x.belief_above(1.5) == doctest::Approx(0.5));
    CHECK(x.plausibility_above(1.5) == doctest::Approx(1.0));
    CHECK(x.belief_above(0.0) == doctest::Approx(1.0));

    const RealMass merged({{{3.0, 1.0, 1.0}, 0.25}, {{1.0, 3.0}, 0.75}});
    CHECK(merged.focal().size() == 1);
    CHECK_THROWS_AS(RealMass({}), ValidationError);
    CHECK_THROWS_AS(RealMass({{{}, 1.0}}), ValidationError);
    CHECK_THROWS_AS(RealMass({{{1.0}, 0.5}}), ValidationError);

    const std::vector<double> v{1, 2}, p1{0.2, 0.8}, p2{0.6, 0.4};
    const auto hi = RealMass::bayesian(v, p1), lo = RealMass::bayesian(v, p2);
    for (auto o : {CredalOrder::PlBel, CredalOrder::BelBel, CredalOrder::PlPl, CredalOrder::BelPl}) {
        CHECK(credal_order(hi, lo, o));
        CHECK_FALSE(credal_order(lo, hi, o));
    }

    const Frame c({"c1", "c2", "c3"});
    const MassFunction mu(c, {{Subset::of({0, 2}), 0.5}, {Subset::of({1}), 0.5}});
    const auto r = RealMass::from_lottery(mu, UtilityTable(c, {1, 2, 3}));
    CHECK(r.belief_above(1.5) == doctest::Approx(x.belief_above(1.5)));
}

TEST_CASE("Pl-Bel is not transitive and Bel-Pl is not reflexive") {
    const RealMass point_low({{{0.0}, 1.0}}), wide({{{0.0, 5.0}, 1.0}}), point_high({{{5.0}, 1.0}});
    CHECK(credal_order(point_low, wide, CredalOrder::PlBel));
    CHECK(credal_order(wide, point_high, CredalOrder::PlBel));
    CHECK_FALSE(credal_order(point_low, point_high, CredalOrder::PlBel));
    CHECK_FALSE(credal_order(wide, wide, CredalOrder::BelPl));
    CHECK(credal_order(point_low, point_low, CredalOrder::BelPl));
}

TEST_CASE("listings are ordered by name") {
    const std::vector<std::string> names{"f2", "f1", "f3"};
    CHECK(format_choice_set(names, {0, 1}) == "{f1, f2}");
    CHECK(format_choice_set(names, {}) == "{}");
    const auto r = Relation::from_scores(std::vector<double>{1, 2, 2});
    CHECK(format_relation(names, r) == "f1 > f2\nf1 ~ f3\nf3 > f2\n");
}

TEST_CASE("property: credal order implications and transitivity") {
    Gen g;
    for (int t = 0; t < 500; ++t) {
        const auto x = random_real_mass(g), y = random_real_mass(g), z = random_real_mass(g);
        if (credal_order(x, y, CredalOrder::BelPl)) CHECK(credal_order(x, y, CredalOrder::BelBel));
        if (credal_order(x, y, CredalOrder::BelPl)) CHECK(credal_order(x, y, CredalOrder::PlPl));
        if (credal_order(x, y, CredalOrder::PlPl)) CHECK(credal_order(x, y, CredalOrder::PlBel));
        if (credal_order(x, y, CredalOrder::BelBel)) CHECK(credal_order(x, y, CredalOrder::PlBel));

        CHECK(credal_order(x, x, CredalOrder::PlBel));
        CHECK(credal_order(x, x, CredalOrder::BelBel));
        CHECK(credal_order(x, x, CredalOrder::PlPl));
        for (auto o : {CredalOrder::BelBel, CredalOrder::PlPl, CredalOrder::BelPl}) {
            if (credal_order(x, y, o) && credal_order(y, z, o)) CHECK(credal_order(x, z, o));
        }
    }
}

TEST_CASE("property: Bel-Pl order matches monotone transforms of the expectations") {
    Gen g(evdec::testing::kSeed + 1);
    for (int t = 0; t < 300; ++t) {
        const auto x = random_real_mass(g), y = random_real_mass(g);
        const bool holds = credal_order(x, y, CredalOrder::BelPl);
        // Threshold indicators at every support point decide the order exactly.
        std::vector<double> pts = x.support();
        for (double v : y.support()) pts.push_back(v);
        bool all_thresholds = true;
        for (double s : pts) {
            const auto h = [s](double v) { return v > s ? 1.0 : 0.0; };
            all_thresholds = all_thresholds && lower_of(x, h) >= upper_of(y, h) - 1e-12;
        }
        CHECK(holds == all_thresholds);
        // Random non-decreasing step functions never contradict a holding order.
        for (int k = 0; k < 50 && holds; ++k) {
            std::vector<std::pair<double, double>> steps;
            for (std::size_t j = g.between(1, 4); j > 0; --j) steps.push_back({g.uniform(-1, 7), g.uniform(0, 3)});
            const auto h = [&](double v) {
                double out = 0.0;
                for (const auto& [at, height] : steps) out += v > at ? height : 0.0;
                return out;
            };
            CHECK(lower_of(x, h) >= upper_of(y, h) - 1e-9);
        }
    }
}

TEST_CASE("property: Bayesian real masses reduce every credal order to stochastic dominance") {
    Gen g(evdec::testing::kSeed + 2);
    for (int t = 0; t < 300; ++t) {
        const auto x = random_real_mass(g, true), y = random_real_mass(g, true);
        const bool sd = stochastically_dominates(x, y);
        for (auto o : {CredalOrder::PlBel, CredalOrder::BelBel, CredalOrder::PlPl, CredalOrder::BelPl}) {
            CHECK(credal_order(x, y, o) == sd);
        }
    }
}

TEST_CASE("property: interval relations and choice-set nesting") {
    Gen g(evdec::testing::kSeed + 3);
    for (int t = 0; t < 500; ++t) {
        const std::size_t n = g.between(1, 6);
        std::vector<double> lo(n), up(n);
        for (std::size_t i = 0; i < n; ++i) {
            lo[i] = g.uniform(0, 10);
            up[i] = lo[i] + (g.coin() ? 0.0 : g.uniform(0, 5));
        }
        const auto sd = interval_dominance(lo, up), ibd = interval_bound_dominance(lo, up);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (sd.at_least(i, j)) CHECK(ibd.at_least(i, j));
                // Endpoints suffice for the generalized Hurwicz family.
                CHECK(ibd.at_least(i, j) == (lo[i] >= lo[j] && up[i] >= up[j]));
            }
        }
        const auto a = maximal_elements(sd), b = maximal_elements(ibd);
        CHECK_FALSE(b.empty());
        CHECK(std::includes(a.begin(), a.end(), b.begin(), b.end()));
    }
}

TEST_CASE("property: relation utilities") {
    Gen g(evdec::testing::kSeed + 4);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = g.between(1, 6);
        const auto scores = g.values(n, true, 0, 4);
        const auto pre = Relation::from_scores(scores);
        CHECK(pre.is_complete());
        CHECK(pre.is_transitive());
        CHECK(maximal_elements(pre) == greatest_elements(pre));

        const auto r = random_relation(g, n);
        const auto c = transitive_closure(r);
        CHECK(c.is_transitive());
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (r.at_least(i, j)) CHECK(c.at_least(i, j));
            }
        }
        const auto gr = greatest_elements(r), mx = maximal_elements(r);
        CHECK(std::includes(mx.begin(), mx.end(), gr.begin(), gr.end()));

        ChoiceSet chosen;
        for (std::size_t i = 0; i < n; ++i) {
            if (g.coin()) chosen.push_back(i);
        }
        if (chosen.empty()) chosen.push_back(g.index(n));
        CHECK(greatest_elements(relation_from_choice_set(n, chosen)) == chosen);
    }
}

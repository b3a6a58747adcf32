#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "evdec/classical.hpp"
#include "evdec/error.hpp"
#include "generators.hpp"

using namespace evdec;
using evdec::testing::Gen;

namespace {

PayoffMatrix investment_payoffs(bool with_f5 = false) {
    std::vector<std::string> acts{"f1", "f2", "f3", "f4"};
    std::vector<std::vector<double>> u{{37, 25, 23}, {49, 70, 2}, {4, 96, 1}, {22, 76, 25}};
    if (with_f5) {
        acts.push_back("f5");
        u.push_back({35, 20, 23});
    }
    return PayoffMatrix(acts, {"w1", "w2", "w3"}, u);
}

void check_close(const std::vector<double>& got, const std::vector<double>& want, double tol) {
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
        INFO("index " << i);
        CHECK(std::abs(got[i] - want[i]) <= tol);
    }
}

PayoffMatrix random_matrix(Gen& g, std::size_t max_acts = 5, std::size_t max_states = 5) {
    const std::size_t n = g.between(1, max_acts), s = g.between(1, max_states);
    std::vector<std::string> acts, states;
    for (std::size_t i = 0; i < n; ++i) acts.push_back("a" + std::to_string(i));
    for (std::size_t j = 0; j < s; ++j) states.push_back("s" + std::to_string(j));
    std::vector<std::vector<double>> u;
    for (std::size_t i = 0; i < n; ++i) u.push_back(g.values(s, g.coin()));
    return PayoffMatrix(acts, states, u);
}

}  // namespace

TEST_CASE("payoff matrix validation") {
    CHECK_THROWS_AS(PayoffMatrix({"a"}, {"s1", "s2"}, {{1.0}}), ValidationError);
    CHECK_THROWS_AS(PayoffMatrix({}, {"s"}, {}), ValidationError);
    CHECK_THROWS_AS(PayoffMatrix({"a", "a"}, {"s"}, {{1.0}, {2.0}}), ValidationError);
    CHECK_THROWS_AS(PayoffMatrix({"a"}, {"s"}, {{std::nan("")}}), ValidationError);
    const auto u = investment_payoffs().select({3, 0});
    CHECK(u.act_names() == std::vector<std::string>{"f4", "f1"});
    CHECK(u(1, 0) == 37);
}

TEST_CASE("dominance pruning") {
    const auto r = prune_dominated(investment_payoffs(true));
    CHECK(r.survivors == std::vector<std::size_t>{0, 1, 2, 3});
    REQUIRE(r.dominance.size() == 1);
    CHECK(r.dominance[0] == std::pair<std::size_t, std::size_t>{0, 4});

    const PayoffMatrix twins({"a", "b"}, {"s1", "s2"}, {{1, 2}, {1, 2}});
    CHECK(prune_dominated(twins).survivors.size() == 2);
    const PayoffMatrix single({"a"}, {"s"}, {{3}});
    CHECK(prune_dominated(single).survivors == std::vector<std::size_t>{0});
}

TEST_CASE("criteria under ignorance") {
    const auto u = investment_payoffs();
    check_close(score_ignorance(u, IgnoranceCriterion::maximin()), {23, 2, 1, 22}, 0.0);
    check_close(score_ignorance(u, IgnoranceCriterion::maximax()), {37, 70, 96, 76}, 0.0);
    check_close(score_ignorance(u, IgnoranceCriterion::hurwicz(0.5)), {30, 36, 48.5, 49}, 1e-12);
    check_close(score_ignorance(u, IgnoranceCriterion::laplace()), {85.0 / 3, 121.0 / 3, 101.0 / 3, 41}, 1e-12);
    CHECK_THROWS_AS(score_ignorance(u, IgnoranceCriterion::hurwicz(1.5)), InvalidArgument);
    CHECK_THROWS_AS(score_ignorance(u, IgnoranceCriterion::hurwicz(-0.1)), InvalidArgument);
}

TEST_CASE("minimax regret") {
    const auto r = minimax_regret(investment_payoffs());
    const std::vector<std::vector<double>> want{{12, 71, 2}, {0, 26, 23}, {45, 0, 24}, {27, 20, 0}};
    CHECK(r.regret == want);
    CHECK(r.max_regret == std::vector<double>{71, 26, 45, 27});

    const PayoffMatrix with_f6({"f1", "f2", "f3", "f4", "f6"}, {"w1", "w2", "w3"},
                               {{37, 25, 23}, {49, 70, 2}, {4, 96, 1}, {22, 76, 25}, {0, 100, 0}});
    CHECK(minimax_regret(with_f6).max_regret == std::vector<double>{75, 30, 45, 27, 49});

    const PayoffMatrix single({"a"}, {"s1", "s2"}, {{3, 4}});
    CHECK(minimax_regret(single).regret == std::vector<std::vector<double>>{{0, 0}});
}

TEST_CASE("OWA operators") {
    const std::vector<double> v{37, 25, 23};
    // The printed weights sum to 0.9999.
    const double printed = 0.0819 + 0.236 + 0.682;
    const OwaWeights w({0.0819 / printed, 0.236 / printed, 0.682 / printed});
    CHECK(std::abs(owa_aggregate(v, w) - 24.62) <= 0.05);
    CHECK(owa_aggregate(v, OwaWeights::maximum(3)) == 37);
    CHECK(owa_aggregate(v, OwaWeights::minimum(3)) == 23);
    CHECK(owa_aggregate(v, OwaWeights::mean(3)) == doctest::Approx(85.0 / 3));
    CHECK_THROWS_AS(owa_aggregate(v, OwaWeights::mean(2)), InvalidArgument);
    CHECK_THROWS_AS(OwaWeights({0.5, 0.6}), InvalidArgument);
    CHECK_THROWS_AS(OwaWeights({1.5, -0.5}), InvalidArgument);

    CHECK(degree_of_optimism(OwaWeights::maximum(4)) == 1.0);
    CHECK(degree_of_optimism(OwaWeights::minimum(4)) == 0.0);
    CHECK(degree_of_optimism(OwaWeights::hurwicz(5, 0.3)) == doctest::Approx(0.7));
    CHECK_THROWS_AS(degree_of_optimism(OwaWeights({1.0})), InvalidArgument);
}

TEST_CASE("maximum-entropy OWA weights") {
    const auto w2 = max_entropy_owa_weights(3, 0.2);
    check_close(w2.values(), {0.0819, 0.236, 0.682}, 5e-3);
    const auto w7 = max_entropy_owa_weights(3, 0.7);
    check_close(w7.values(), {0.554, 0.292, 0.154}, 5e-3);
    for (std::size_t s = 2; s <= 6; ++s) {
        const auto w = max_entropy_owa_weights(s, 0.5);
        for (double x : w.values()) CHECK(x == 1.0 / static_cast<double>(s));
    }
    CHECK(max_entropy_owa_weights(4, 1.0).values() == OwaWeights::maximum(4).values());
    CHECK(max_entropy_owa_weights(4, 0.0).values() == OwaWeights::minimum(4).values());
    CHECK_THROWS_AS(max_entropy_owa_weights(3, 1.2), InvalidArgument);

    // Aggregated utilities.
    const auto u = investment_payoffs();
    const std::vector<double> f02{24.62, 18.67, 9.49, 27.13}, f07{31.34, 53.40, 54.50, 52.79};
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(std::abs(owa_aggregate(u.row(i), w2) - f02[i]) <= 0.05);
        CHECK(std::abs(owa_aggregate(u.row(i), w7) - f07[i]) <= 0.05);
    }

    // Entropy is maximal among vectors with the same optimism: perturbations along
    // the optimism-preserving direction (1, -2, 1) lower it.
    const auto entropy = [](const std::vector<double>& w) {
        double h = 0.0;
        for (double x : w) h -= x > 0 ? x * std::log(x) : 0.0;
        return h;
    };
    for (double eps : {1e-3, -1e-3, 1e-2, -1e-2}) {
        auto p = w7.values();
        p[0] += eps;
        p[1] -= 2 * eps;
        p[2] += eps;
        CHECK(entropy(p) < entropy(w7.values()));
    }
}

TEST_CASE("property: Hurwicz lies between maximin and maximax") {
    Gen g;
    for (int t = 0; t < 200; ++t) {
        const auto u = random_matrix(g);
        const double alpha = g.uniform(0, 1);
        const auto lo = score_ignorance(u, IgnoranceCriterion::maximin());
        const auto hi = score_ignorance(u, IgnoranceCriterion::maximax());
        const auto h = score_ignorance(u, IgnoranceCriterion::hurwicz(alpha));
        for (std::size_t i = 0; i < u.acts(); ++i) {
            CHECK(lo[i] <= h[i] + 1e-12);
            CHECK(h[i] <= hi[i] + 1e-12);
        }
        CHECK(score_ignorance(u, IgnoranceCriterion::hurwicz(1.0)) == lo);
        CHECK(score_ignorance(u, IgnoranceCriterion::hurwicz(0.0)) == hi);
    }
}

TEST_CASE("property: named OWA vectors reproduce min, max, mean and Hurwicz") {
    Gen g(evdec::testing::kSeed + 1);
    for (int t = 0; t < 100; ++t) {
        const std::size_t s = g.between(2, 8);
        const auto v = g.values(s, false, -50, 50);
        const double alpha = g.uniform(0, 1);
        const double mn = *std::min_element(v.begin(), v.end()), mx = *std::max_element(v.begin(), v.end());
        const double mean = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(s);
        CHECK(std::abs(owa_aggregate(v, OwaWeights::minimum(s)) - mn) <= 1e-12);
        CHECK(std::abs(owa_aggregate(v, OwaWeights::maximum(s)) - mx) <= 1e-12);
        CHECK(std::abs(owa_aggregate(v, OwaWeights::mean(s)) - mean) <= 1e-12);
        CHECK(std::abs(owa_aggregate(v, OwaWeights::hurwicz(s, alpha)) - (alpha * mn + (1 - alpha) * mx)) <= 1e-12);
    }
}

TEST_CASE("property: maximum-entropy weights hit the requested optimism and are log-linear") {
    for (std::size_t s = 2; s <= 8; ++s) {
        for (int k = 0; k <= 100; ++k) {
            const double beta = k / 100.0;
            const auto w = max_entropy_owa_weights(s, beta);
            CHECK(std::abs(degree_of_optimism(w) - beta) <= 1e-8);
            CHECK(std::abs(std::accumulate(w.values().begin(), w.values().end(), 0.0) - 1.0) <= 1e-12);
            if (k == 0 || k == 100 || s < 3) continue;
            const double ratio = w[1] / w[0];
            for (std::size_t i = 1; i + 1 < s; ++i) CHECK(std::abs(w[i + 1] / w[i] - ratio) <= 1e-8 * std::max(1.0, ratio));
        }
    }
}

TEST_CASE("property: pruning is idempotent and regret ignores column shifts") {
    Gen g(evdec::testing::kSeed + 2);
    for (int t = 0; t < 200; ++t) {
        const auto u = random_matrix(g);
        const auto once = prune_dominated(u);
        const auto kept = u.select(once.survivors);
        CHECK(prune_dominated(kept).survivors.size() == kept.acts());

        auto rows = u.rows();
        const std::size_t col = g.index(u.states());
        const double shift = g.uniform(-20, 20);
        for (auto& r : rows) r[col] += shift;
        const PayoffMatrix v(u.act_names(), u.state_names(), rows);
        const auto a = minimax_regret(u).regret, b = minimax_regret(v).regret;
        for (std::size_t i = 0; i < u.acts(); ++i) {
            for (std::size_t j = 0; j < u.states(); ++j) CHECK(std::abs(a[i][j] - b[i][j]) <= 1e-12);
        }
        for (std::size_t j = 0; j < u.states(); ++j) {
            double zero = 1.0;
            for (std::size_t i = 0; i < u.acts(); ++i) {
                CHECK(a[i][j] >= 0.0);
                zero = std::min(zero, a[i][j]);
            }
            CHECK(zero == 0.0);
        }
    }
}

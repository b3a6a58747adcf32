#include <doctest.h>

#include <cmath>
#include <functional>
#include <optional>

#include "evdec/error.hpp"
#include "evdec/simplex.hpp"
#include "generators.hpp"

using namespace evdec;
using evdec::testing::Gen;

namespace {

// Solves a square system by Gaussian elimination with partial pivoting.
std::optional<std::vector<double>> solve_square(std::vector<std::vector<double>> a, std::vector<double> b) {
    const std::size_t n = b.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        for (std::size_t r = c + 1; r < n; ++r) {
            if (std::abs(a[r][c]) > std::abs(a[p][c])) p = r;
        }
        if (std::abs(a[p][c]) < 1e-12) return std::nullopt;
        std::swap(a[p], a[c]);
        std::swap(b[p], b[c]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c) continue;
            const double f = a[r][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
            b[r] -= f * b[c];
        }
    }
    for (std::size_t c = 0; c < n; ++c) b[c] /= a[c][c];
    return b;
}

// Best objective over all vertices of {A x <= b, x >= 0}; the region is assumed bounded.
std::optional<double> vertex_oracle(const std::vector<std::vector<double>>& a, const std::vector<double>& b,
                                    const std::vector<double>& c) {
    const std::size_t n = c.size(), m = a.size();
    std::vector<std::vector<double>> rows = a;
    std::vector<double> rhs = b;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<double> e(n, 0.0);
        e[j] = -1.0;
        rows.push_back(e);
        rhs.push_back(0.0);
    }
    std::optional<double> best;
    const std::size_t total = m + n;
    std::vector<std::size_t> pick(n);
    // Enumerate n-subsets of the constraints.
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
        if (depth == n) {
            std::vector<std::vector<double>> sa;
            std::vector<double> sb;
            for (std::size_t k : pick) {
                sa.push_back(rows[k]);
                sb.push_back(rhs[k]);
            }
            const auto x = solve_square(sa, sb);
            if (!x) return;
            for (std::size_t r = 0; r < total; ++r) {
                double lhs = 0.0;
                for (std::size_t j = 0; j < n; ++j) lhs += rows[r][j] * (*x)[j];
                if (lhs > rhs[r] + 1e-9) return;
            }
            double v = 0.0;
            for (std::size_t j = 0; j < n; ++j) v += c[j] * (*x)[j];
            if (!best || v > *best) best = v;
            return;
        }
        for (std::size_t k = start; k < total; ++k) {
            pick[depth] = k;
            rec(k + 1, depth + 1);
        }
    };
    rec(0, 0);
    return best;
}

}  // namespace

TEST_CASE("small programs") {
    LinearProgram lp;
    lp.goal = LinearProgram::Goal::Maximize;
    lp.objective = {1.0};
    lp.constraints = {{{1.0}, Sense::LessEqual, 3.0}};
    const auto s = simplex_solve(lp);
    REQUIRE(s.status == LpStatus::Optimal);
    CHECK(s.objective == doctest::Approx(3.0));
    CHECK(s.x[0] == doctest::Approx(3.0));

    LinearProgram bad;
    bad.objective = {1.0};
    bad.constraints = {{{1.0}, Sense::GreaterEqual, 2.0}, {{1.0}, Sense::LessEqual, 1.0}};
    CHECK(simplex_solve(bad).status == LpStatus::Infeasible);

    LinearProgram open;
    open.goal = LinearProgram::Goal::Maximize;
    open.objective = {1.0, 1.0};
    open.constraints = {{{1.0, -1.0}, Sense::LessEqual, 1.0}};
    CHECK(simplex_solve(open).status == LpStatus::Unbounded);

    // Equalities, a redundant row and a negative right-hand side.
    LinearProgram eq;
    eq.objective = {1.0, 2.0, 0.0};
    eq.constraints = {{{1.0, 1.0, 1.0}, Sense::Equal, 1.0},
                      {{2.0, 2.0, 2.0}, Sense::Equal, 2.0},
                      {{-1.0, 0.0, 0.0}, Sense::LessEqual, -0.25}};
    const auto e = simplex_solve(eq);
    REQUIRE(e.status == LpStatus::Optimal);
    CHECK(e.objective == doctest::Approx(0.25));
    CHECK(e.x[0] == doctest::Approx(0.25));
    CHECK(e.x[2] == doctest::Approx(0.75));

    // Shifted lower bounds.
    LinearProgram lb;
    lb.objective = {1.0, 1.0};
    lb.lower_bounds = {-2.0, 1.0};
    lb.constraints = {{{1.0, 1.0}, Sense::GreaterEqual, 0.0}};
    const auto l = simplex_solve(lb);
    REQUIRE(l.status == LpStatus::Optimal);
    CHECK(l.objective == doctest::Approx(0.0));
    CHECK(l.x[1] >= 1.0 - 1e-12);
    CHECK(l.x[0] >= -2.0 - 1e-12);
}

TEST_CASE("degenerate program that cycles under the textbook rule") {
    // Beale's example: the largest-coefficient rule cycles, Bland's rule terminates.
    LinearProgram lp;
    lp.objective = {-0.75, 150.0, -0.02, 6.0};
    lp.constraints = {{{0.25, -60.0, -0.04, 9.0}, Sense::LessEqual, 0.0},
                      {{0.5, -90.0, -0.02, 3.0}, Sense::LessEqual, 0.0},
                      {{0.0, 0.0, 1.0, 0.0}, Sense::LessEqual, 1.0}};
    const auto s = simplex_solve(lp);
    REQUIRE(s.status == LpStatus::Optimal);
    CHECK(s.objective == doctest::Approx(-0.05));
}

TEST_CASE("iteration cap and malformed input") {
    LinearProgram lp;
    lp.goal = LinearProgram::Goal::Maximize;
    lp.objective = {1.0, 1.0, 1.0};
    lp.constraints = {{{1.0, 0.0, 0.0}, Sense::LessEqual, 1.0},
                      {{0.0, 1.0, 0.0}, Sense::LessEqual, 1.0},
                      {{0.0, 0.0, 1.0}, Sense::LessEqual, 1.0}};
    SimplexOptions capped;
    capped.iteration_cap = 1;
    CHECK_THROWS_AS(simplex_solve(lp, capped), SolverError);

    LinearProgram bad = lp;
    bad.constraints[0].coefficients = {1.0};
    CHECK_THROWS_AS(simplex_solve(bad), InvalidArgument);

    lp.names = {"x", "y", "z"};
    const std::string text = lp.to_string();
    CHECK(text.find("maximize") != std::string::npos);
    CHECK(text.find("x") != std::string::npos);
}

TEST_CASE("property: optimum matches vertex enumeration") {
    Gen g;
    for (int t = 0; t < 300; ++t) {
        const std::size_t n = g.between(1, 3), m = g.between(1, 4);
        std::vector<std::vector<double>> a;
        std::vector<double> b;
        for (std::size_t r = 0; r < m; ++r) {
            a.push_back(g.values(n, g.coin(), -5, 5));
            b.push_back(g.coin() ? g.uniform(-3, 10) : static_cast<double>(g.between(0, 6)));
        }
        // A box keeps every instance bounded.
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<double> e(n, 0.0);
            e[j] = 1.0;
            a.push_back(e);
            b.push_back(10.0);
        }
        const auto c = g.values(n, g.coin(), -5, 5);

        LinearProgram lp;
        lp.goal = LinearProgram::Goal::Maximize;
        lp.objective = c;
        for (std::size_t r = 0; r < a.size(); ++r) lp.constraints.push_back({a[r], Sense::LessEqual, b[r]});
        const auto s = simplex_solve(lp);
        const auto oracle = vertex_oracle(a, b, c);
        if (!oracle) {
            CHECK(s.status == LpStatus::Infeasible);
            continue;
        }
        REQUIRE(s.status == LpStatus::Optimal);
        CHECK(s.objective == doctest::Approx(*oracle).epsilon(1e-7));
        for (std::size_t r = 0; r < a.size(); ++r) {
            double lhs = 0.0;
            for (std::size_t j = 0; j < n; ++j) lhs += a[r][j] * s.x[j];
            CHECK(lhs <= b[r] + 1e-7);
        }
        for (double x : s.x) CHECK(x >= -1e-9);

        // The same program as a minimization of the negated objective.
        LinearProgram neg = lp;
        neg.goal = LinearProgram::Goal::Minimize;
        for (double& v : neg.objective) v = -v;
        const auto sn = simplex_solve(neg);
        REQUIRE(sn.status == LpStatus::Optimal);
        CHECK(-sn.objective == doctest::Approx(*oracle).epsilon(1e-7));
    }
}

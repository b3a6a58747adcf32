#include "evdec/credal.hpp"

#include <algorithm>
#include <cmath>

#include "evdec/error.hpp"

namespace evdec {

Gamble::Gamble(std::vector<double> values) : v_(std::move(values)) {
    for (double x : v_) {
        if (!std::isfinite(x)) throw ValidationError("gamble values must be finite");
    }
}

Gamble operator-(const Gamble& a, const Gamble& b) {
    if (a.size() != b.size()) throw FrameMismatch("gambles are defined on different state frames");
    std::vector<double> out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] - b[k];
    return Gamble(std::move(out));
}

Gamble operator+(const Gamble& a, const Gamble& b) {
    if (a.size() != b.size()) throw FrameMismatch("gambles are defined on different state frames");
    std::vector<double> out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] + b[k];
    return Gamble(std::move(out));
}

Gamble operator-(const Gamble& a) {
    std::vector<double> out(a.values());
    for (double& x : out) x = -x;
    return Gamble(std::move(out));
}

double expectation(std::span<const double> p, const Gamble& x) {
    if (p.size() != x.size()) throw FrameMismatch("probability and gamble differ in length");
    double acc = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) acc += p[k] * x[k];
    return acc;
}

namespace {

void check_frame(const MassFunction& m, const Gamble& x) {
    if (x.size() != m.frame().size()) throw FrameMismatch("gamble and mass function use different state frames");
}

}  // namespace

double lower_prevision(const MassFunction& m, const Gamble& x) {
    check_frame(m, x);
    double acc = 0.0;
    for (const auto& fe : m.focal()) {
        double lo = INFINITY;
        for (std::size_t k : fe.set.elements()) lo = std::min(lo, x[k]);
        acc += fe.mass * lo;
    }
    return acc;
}

double upper_prevision(const MassFunction& m, const Gamble& x) {
    check_frame(m, x);
    double acc = 0.0;
    for (const auto& fe : m.focal()) {
        double hi = -INFINITY;
        for (std::size_t k : fe.set.elements()) hi = std::max(hi, x[k]);
        acc += fe.mass * hi;
    }
    return acc;
}

MaximalityResult maximality_relation(std::span<const Gamble> gambles, const MassFunction& m, double tolerance) {
    if (gambles.empty()) throw InvalidArgument("maximality needs at least one gamble");
    for (const auto& g : gambles) check_frame(m, g);
    const std::size_t n = gambles.size();
    MaximalityResult out{std::vector<std::vector<double>>(n, std::vector<double>(n, 0.0)), Relation(n), {}};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            out.delta[i][j] = lower_prevision(m, gambles[i] - gambles[j]);
            if (out.delta[i][j] >= -tolerance) out.relation.set(i, j);
        }
    }
    for (std::size_t j = 0; j < n; ++j) {
        bool beaten = false;
        for (std::size_t i = 0; i < n && !beaten; ++i) beaten = i != j && out.delta[i][j] > tolerance;
        if (!beaten) out.choice.push_back(j);
    }
    return out;
}

EAdmissibilityProgram build_e_admissibility_program(std::span<const Gamble> gambles, const MassFunction& m,
                                                    std::size_t i) {
    if (i >= gambles.size()) throw InvalidArgument("gamble index out of range");
    const std::size_t s = m.frame().size();
    for (const auto& g : gambles) check_frame(m, g);

    EAdmissibilityProgram prog;
    auto& lp = prog.lp;
    std::size_t col = 0;
    for (std::size_t j = 0; j < m.focal().size(); ++j) {
        prog.allocation_columns.emplace_back();
        for (std::size_t k : m.focal()[j].set.elements()) {
            prog.allocation_columns.back().push_back(col++);
            lp.names.push_back("a_" + m.frame().label(k) + "_F" + std::to_string(j + 1));
        }
    }
    for (std::size_t k = 0; k < s; ++k) {
        prog.probability_columns.push_back(col++);
        lp.names.push_back("p_" + m.frame().label(k));
    }
    for (std::size_t l = 0; l < gambles.size(); ++l) {
        if (l == i) continue;
        prog.competitors.push_back(l);
        prog.slack_columns.push_back(col++);
        lp.names.push_back("lambda_" + std::to_string(l + 1));
    }
    const std::size_t width = col;

    lp.goal = LinearProgram::Goal::Minimize;
    lp.objective.assign(width, 0.0);
    for (std::size_t c : prog.slack_columns) lp.objective[c] = 1.0;

    // Each focal mass is split among its elements.
    for (std::size_t j = 0; j < m.focal().size(); ++j) {
        Constraint c{std::vector<double>(width, 0.0), Sense::Equal, m.focal()[j].mass};
        for (std::size_t a : prog.allocation_columns[j]) c.coefficients[a] = 1.0;
        lp.constraints.push_back(std::move(c));
    }
    // p_k collects every allocation made to state k.
    for (std::size_t k = 0; k < s; ++k) {
        Constraint c{std::vector<double>(width, 0.0), Sense::Equal, 0.0};
        c.coefficients[prog.probability_columns[k]] = 1.0;
        for (std::size_t j = 0; j < m.focal().size(); ++j) {
            const auto elems = m.focal()[j].set.elements();
            for (std::size_t pos = 0; pos < elems.size(); ++pos) {
                if (elems[pos] == k) c.coefficients[prog.allocation_columns[j][pos]] = -1.0;
            }
        }
        lp.constraints.push_back(std::move(c));
    }
    // E_P(X_i - X_l) + lambda_l >= 0.
    for (std::size_t idx = 0; idx < prog.competitors.size(); ++idx) {
        const std::size_t l = prog.competitors[idx];
        Constraint c{std::vector<double>(width, 0.0), Sense::GreaterEqual, 0.0};
        for (std::size_t k = 0; k < s; ++k) c.coefficients[prog.probability_columns[k]] = gambles[i][k] - gambles[l][k];
        c.coefficients[prog.slack_columns[idx]] = 1.0;
        lp.constraints.push_back(std::move(c));
    }
    return prog;
}

EAdmissibility e_admissible(std::span<const Gamble> gambles, const MassFunction& m, std::size_t i,
                            const EAdmissibilityOptions& options) {
    const auto prog = build_e_admissibility_program(gambles, m, i);
    const auto sol = simplex_solve(prog.lp, options.simplex);
    if (sol.status != LpStatus::Optimal) {
        throw SolverError("e-admissibility program for gamble " + std::to_string(i + 1) + " did not reach an optimum");
    }
    EAdmissibility out;
    out.optimum = sol.objective;
    out.admissible = sol.objective <= options.tolerance;
    if (out.admissible) {
        std::vector<double> p;
        for (std::size_t c : prog.probability_columns) p.push_back(sol.x[c]);
        out.witness = std::move(p);
    }
    return out;
}

std::vector<EAdmissibleMember> e_admissible_set(std::span<const Gamble> gambles, const MassFunction& m,
                                                const EAdmissibilityOptions& options) {
    std::vector<EAdmissibleMember> out;
    for (std::size_t i : maximality_relation(gambles, m).choice) {
        auto r = e_admissible(gambles, m, i, options);
        if (r.admissible) out.push_back({i, std::move(*r.witness)});
    }
    return out;
}

}  // namespace evdec

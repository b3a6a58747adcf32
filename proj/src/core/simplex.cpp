#include "evdec/simplex.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "evdec/error.hpp"

namespace evdec {

namespace {

std::string number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

class Tableau {
public:
    Tableau(std::size_t rows, std::size_t cols) : cols_(cols), t_(rows, std::vector<double>(cols + 1, 0.0)) {}

    std::vector<std::vector<double>>& rows() { return t_; }
    std::vector<std::size_t>& basis() { return basis_; }
    std::size_t cols() const { return cols_; }
    double& rhs(std::size_t r) { return t_[r][cols_]; }

    void pivot(std::size_t r, std::size_t c, std::vector<double>& obj) {
        auto& prow = t_[r];
        const double p = prow[c];
        for (double& v : prow) v /= p;
        for (std::size_t i = 0; i < t_.size(); ++i) {
            if (i == r) continue;
            eliminate(t_[i], prow, c);
        }
        eliminate(obj, prow, c);
        basis_[r] = c;
    }

    void erase_row(std::size_t r) {
        t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(r));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
    }

    // Reduced-cost row (last entry holds minus the objective value) for the given costs.
    std::vector<double> objective_row(const std::vector<double>& cost) const {
        std::vector<double> obj(cost);
        obj.push_back(0.0);
        for (std::size_t r = 0; r < t_.size(); ++r) {
            const double cb = cost[basis_[r]];
            if (cb == 0.0) continue;
            for (std::size_t j = 0; j <= cols_; ++j) obj[j] -= cb * t_[r][j];
        }
        return obj;
    }

private:
    static void eliminate(std::vector<double>& row, const std::vector<double>& prow, std::size_t c) {
        const double f = row[c];
        if (f == 0.0) return;
        for (std::size_t j = 0; j < row.size(); ++j) row[j] -= f * prow[j];
        row[c] = 0.0;
    }

    std::size_t cols_;
    std::vector<std::vector<double>> t_;
    std::vector<std::size_t> basis_;
};

enum class PhaseResult { Optimal, Unbounded };

}  // namespace

std::string LinearProgram::to_string() const {
    auto name = [&](std::size_t j) { return j < names.size() ? names[j] : "x" + std::to_string(j + 1); };
    auto expr = [&](const std::vector<double>& coef) {
        std::string out;
        for (std::size_t j = 0; j < coef.size(); ++j) {
            if (coef[j] == 0.0) continue;
            if (out.empty()) {
                out += (coef[j] < 0 ? "-" : "");
            } else {
                out += (coef[j] < 0 ? " - " : " + ");
            }
            const double a = std::abs(coef[j]);
            if (a != 1.0) out += number(a) + " ";
            out += name(j);
        }
        return out.empty() ? std::string("0") : out;
    };
    std::ostringstream os;
    os << (goal == Goal::Minimize ? "minimize " : "maximize ") << expr(objective) << "\nsubject to\n";
    for (const auto& c : constraints) {
        const char* op = c.sense == Sense::LessEqual ? "<=" : c.sense == Sense::Equal ? "=" : ">=";
        os << "  " << expr(c.coefficients) << ' ' << op << ' ' << number(c.rhs) << '\n';
    }
    os << "bounds\n";
    for (std::size_t j = 0; j < variables(); ++j) {
        os << "  " << name(j) << " >= " << number(j < lower_bounds.size() ? lower_bounds[j] : 0.0) << '\n';
    }
    return os.str();
}

LpSolution simplex_solve(const LinearProgram& lp, const SimplexOptions& options) {
    const std::size_t n = lp.variables();
    const std::size_t m = lp.constraints.size();
    if (n == 0) throw InvalidArgument("linear program has no variables");
    if (!lp.lower_bounds.empty() && lp.lower_bounds.size() != n) {
        throw InvalidArgument("lower bounds must be empty or cover every variable");
    }
    for (const auto& c : lp.constraints) {
        if (c.coefficients.size() != n) throw InvalidArgument("constraint width differs from the number of variables");
    }
    const double eps = options.pivot_tolerance;
    const std::size_t cap = options.iteration_cap ? options.iteration_cap : 10 * (m + n) * (m + n);
    auto lb = [&](std::size_t j) { return lp.lower_bounds.empty() ? 0.0 : lp.lower_bounds[j]; };

    // Shift to y = x - lb >= 0 and make every right-hand side non-negative.
    struct Row {
        std::vector<double> a;
        Sense sense;
        double b;
    };
    std::vector<Row> rows;
    std::size_t slacks = 0;
    std::size_t artificials = 0;
    for (const auto& c : lp.constraints) {
        Row r{c.coefficients, c.sense, c.rhs};
        for (std::size_t j = 0; j < n; ++j) r.b -= r.a[j] * lb(j);
        if (r.b < 0.0) {
            for (double& v : r.a) v = -v;
            r.b = -r.b;
            if (r.sense == Sense::LessEqual) {
                r.sense = Sense::GreaterEqual;
            } else if (r.sense == Sense::GreaterEqual) {
                r.sense = Sense::LessEqual;
            }
        }
        if (r.sense != Sense::Equal) ++slacks;
        if (r.sense != Sense::LessEqual) ++artificials;
        rows.push_back(std::move(r));
    }

    const std::size_t first_artificial = n + slacks;
    const std::size_t cols = first_artificial + artificials;
    Tableau tab(m, cols);
    tab.basis().assign(m, 0);
    std::size_t next_slack = n;
    std::size_t next_art = first_artificial;
    for (std::size_t i = 0; i < m; ++i) {
        auto& t = tab.rows()[i];
        for (std::size_t j = 0; j < n; ++j) t[j] = rows[i].a[j];
        t[cols] = rows[i].b;
        switch (rows[i].sense) {
            case Sense::LessEqual:
                t[next_slack] = 1.0;
                tab.basis()[i] = next_slack++;
                break;
            case Sense::GreaterEqual:
                t[next_slack++] = -1.0;
                t[next_art] = 1.0;
                tab.basis()[i] = next_art++;
                break;
            case Sense::Equal:
                t[next_art] = 1.0;
                tab.basis()[i] = next_art++;
                break;
        }
    }

    LpSolution sol;
    auto run_phase = [&](std::vector<double>& obj, std::size_t allowed_cols) {
        for (;;) {
            std::size_t enter = allowed_cols;
            for (std::size_t j = 0; j < allowed_cols; ++j) {
                if (obj[j] < -eps) {
                    enter = j;
                    break;
                }
            }
            if (enter == allowed_cols) return PhaseResult::Optimal;
            std::size_t leave = tab.rows().size();
            double best = 0.0;
            for (std::size_t r = 0; r < tab.rows().size(); ++r) {
                const double a = tab.rows()[r][enter];
                if (a <= eps) continue;
                const double ratio = tab.rhs(r) / a;
                if (leave == tab.rows().size() || ratio < best - eps ||
                    (ratio <= best + eps && tab.basis()[r] < tab.basis()[leave])) {
                    leave = r;
                    best = ratio;
                }
            }
            if (leave == tab.rows().size()) return PhaseResult::Unbounded;
            if (++sol.iterations > cap) {
                throw SolverError("simplex exceeded its iteration cap of " + std::to_string(cap));
            }
            tab.pivot(leave, enter, obj);
        }
    };

    // Phase one: drive the artificial variables to zero.
    if (artificials > 0) {
        std::vector<double> cost(cols, 0.0);
        for (std::size_t j = first_artificial; j < cols; ++j) cost[j] = 1.0;
        auto obj = tab.objective_row(cost);
        run_phase(obj, cols);
        if (-obj[cols] > options.feasibility_tolerance) {
            sol.status = LpStatus::Infeasible;
            return sol;
        }
        // Pivot remaining zero-level artificials out of the basis; drop redundant rows.
        for (std::size_t r = 0; r < tab.rows().size();) {
            if (tab.basis()[r] < first_artificial) {
                ++r;
                continue;
            }
            std::size_t col = first_artificial;
            for (std::size_t j = 0; j < first_artificial; ++j) {
                if (std::abs(tab.rows()[r][j]) > eps) {
                    col = j;
                    break;
                }
            }
            if (col == first_artificial) {
                tab.erase_row(r);
            } else {
                tab.pivot(r, col, obj);
                ++r;
            }
        }
    }

    // Phase two on the original objective, artificials barred from entering.
    std::vector<double> cost(cols, 0.0);
    const double sign = lp.goal == LinearProgram::Goal::Maximize ? -1.0 : 1.0;
    for (std::size_t j = 0; j < n; ++j) cost[j] = sign * lp.objective[j];
    auto obj = tab.objective_row(cost);
    if (run_phase(obj, first_artificial) == PhaseResult::Unbounded) {
        sol.status = LpStatus::Unbounded;
        return sol;
    }

    sol.status = LpStatus::Optimal;
    sol.x.assign(n, 0.0);
    for (std::size_t r = 0; r < tab.rows().size(); ++r) {
        if (tab.basis()[r] < n) sol.x[tab.basis()[r]] = tab.rhs(r);
    }
    sol.objective = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        sol.x[j] += lb(j);
        sol.objective += lp.objective[j] * sol.x[j];
    }
    return sol;
}

}  // namespace evdec

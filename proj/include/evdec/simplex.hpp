#pragma once

// Dense-tableau two-phase simplex for small linear programs.

#include <cstddef>
#include <string>
#include <vector>

namespace evdec {

enum class Sense { LessEqual, Equal, GreaterEqual };

struct Constraint {
    std::vector<double> coefficients;
    Sense sense = Sense::LessEqual;
    double rhs = 0.0;
};

struct LinearProgram {
    enum class Goal { Minimize, Maximize };

    Goal goal = Goal::Minimize;
    std::vector<double> objective;
    std::vector<Constraint> constraints;
    /// Per-variable lower bounds; empty means all zero.
    std::vector<double> lower_bounds;
    /// Optional variable names, used by to_string().
    std::vector<std::string> names;

    std::size_t variables() const { return objective.size(); }
    /// Plain-text equation listing.
    std::string to_string() const;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    double objective = 0.0;
    std::vector<double> x;
    std::size_t iterations = 0;
};

struct SimplexOptions {
    double pivot_tolerance = 1e-9;
    /// Phase-one residual above which the program is declared infeasible.
    double feasibility_tolerance = 1e-9;
    /// 0 selects 10 * (rows + columns)^2.
    std::size_t iteration_cap = 0;
};

/// Solves `lp` with Bland's rule. Throws InvalidArgument on inconsistent dimensions
/// and SolverError when the iteration cap is exceeded.
LpSolution simplex_solve(const LinearProgram& lp, const SimplexOptions& options = {});

}  // namespace evdec

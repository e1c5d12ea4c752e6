#pragma once

#include <vector>

#include "approach/numeric.hpp"

namespace approach::lp {

enum class Rel { LE, GE, EQ };

struct Constraint {
    Vec a;
    Rel rel;
    double rhs;
};

enum class Status { Optimal, Infeasible, Unbounded };

struct Result {
    Status status = Status::Infeasible;
    double objective = 0.0;
    Vec x;  // primal solution, one entry per variable
    Vec y;  // dual values, one entry per constraint; c'x* = y'b at optimality
};

// Minimizes c'x subject to the constraints. Variables are nonnegative unless
// flagged free. Dense two-phase simplex with a Bland fallback; duals are read
// from the artificial columns of the final tableau.
Result solve(const Vec& c, const std::vector<Constraint>& constraints,
             const std::vector<bool>* free_mask = nullptr);

// Feasibility of {x >= 0 (or free), constraints} via a zero objective.
bool feasible(size_t num_vars, const std::vector<Constraint>& constraints,
              const std::vector<bool>* free_mask = nullptr);

}  // namespace approach::lp

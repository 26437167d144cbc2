#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace bellgate {

enum class LpStatus { Optimal, Infeasible, Unbounded, IterationLimit };

struct LpResult {
    LpStatus status = LpStatus::IterationLimit;
    double objective = 0.0;        // phase-2 objective (minimization)
    double infeasibility = 0.0;    // phase-1 optimum (sum of artificials)
    std::vector<double> x;         // primal solution over user variables
    long iterations = 0;
};

// Dense two-phase tableau simplex for
//     min c.x   s.t.  A x {=,>=} b,  x >= 0.
// Degeneracy is endemic in vertex-decomposition LPs, so pricing is
// Dantzig with a permanent switch to Bland's rule after a stall; with
// Bland active the method cannot cycle.
class DenseSimplex {
  public:
    explicit DenseSimplex(int num_vars);

    // rows are entered sparse; rhs of any sign (rows are normalized internally)
    void add_eq(std::span<const std::pair<int, double>> coeffs, double rhs);
    void add_ge(std::span<const std::pair<int, double>> coeffs, double rhs);
    void set_objective(std::span<const std::pair<int, double>> coeffs);  // minimize

    // feasibility_only: stop as soon as phase 1 proves feasibility.
    LpResult solve(bool feasibility_only = false);

    void set_feasibility_tol(double tol) { feas_tol_ = tol; }
    void set_iteration_limit(long lim) { iter_limit_ = lim; }

  private:
    struct Row {
        std::vector<std::pair<int, double>> coeffs;
        double rhs;
        bool ge;
    };
    int n_user_;
    std::vector<Row> rows_;
    std::vector<std::pair<int, double>> obj_;
    double feas_tol_ = 1e-9;
    long iter_limit_ = 2'000'000;
};

}  // namespace bellgate

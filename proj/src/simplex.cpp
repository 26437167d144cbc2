#include "bellgate/simplex.hpp"

#include <algorithm>
#include <cmath>

namespace bellgate {

namespace {
constexpr double kReducedCostTol = 1e-9;
constexpr double kStablePivot = 1e-7;   // preferred minimum pivot magnitude
constexpr double kMinPivot = 1e-10;     // absolute floor for a pivot
constexpr double kZeroTol = 1e-11;
constexpr long kRefreshEvery = 256;     // reduced-cost rows rebuilt this often
}

DenseSimplex::DenseSimplex(int num_vars) : n_user_(num_vars) {}

void DenseSimplex::add_eq(std::span<const std::pair<int, double>> coeffs, double rhs) {
    rows_.push_back(Row{{coeffs.begin(), coeffs.end()}, rhs, false});
}

void DenseSimplex::add_ge(std::span<const std::pair<int, double>> coeffs, double rhs) {
    rows_.push_back(Row{{coeffs.begin(), coeffs.end()}, rhs, true});
}

void DenseSimplex::set_objective(std::span<const std::pair<int, double>> coeffs) {
    obj_.assign(coeffs.begin(), coeffs.end());
}

LpResult DenseSimplex::solve(bool feasibility_only) {
    const int m = static_cast<int>(rows_.size());
    int n_ge = 0;
    for (const auto& r : rows_) n_ge += r.ge ? 1 : 0;

    // column layout: user | surplus (ge rows) | artificial (one per row)
    const int surplus0 = n_user_;
    const int art0 = n_user_ + n_ge;
    const int n_total = art0 + m;
    const std::size_t width = static_cast<std::size_t>(n_total) + 1;  // + rhs

    std::vector<double> tab(static_cast<std::size_t>(m) * width, 0.0);
    auto row = [&](int r) { return tab.data() + static_cast<std::size_t>(r) * width; };

    std::vector<int> basis(m, -1);
    std::vector<double> cost(n_total, 0.0);  // phase-2 costs per column
    for (const auto& [j, v] : obj_) cost[j] = v;

    int ge_seen = 0;
    for (int r = 0; r < m; ++r) {
        double* tr = row(r);
        const double sign = rows_[r].rhs < 0.0 ? -1.0 : 1.0;
        for (const auto& [j, v] : rows_[r].coeffs) tr[j] += sign * v;
        tr[n_total] = sign * rows_[r].rhs;
        if (rows_[r].ge) {
            tr[surplus0 + ge_seen] = -sign;
            ++ge_seen;
        }
        tr[art0 + r] = 1.0;
        basis[r] = art0 + r;
    }

    std::vector<double> z(width, 0.0);

    // phase 1: reduced costs are sums over rows whose basic variable is
    // artificial; phase 2: z_j = c_B B^-1 A_j - c_j.  Both are rebuilt from
    // the tableau, which keeps drift from accumulating in long runs.
    auto refresh = [&](bool phase1) {
        std::fill(z.begin(), z.end(), 0.0);
        if (phase1) {
            for (int r = 0; r < m; ++r) {
                if (basis[r] < art0) continue;
                const double* tr = row(r);
                for (std::size_t j = 0; j < width; ++j) z[j] += tr[j];
            }
        } else {
            for (int r = 0; r < m; ++r) {
                const double cb = basis[r] < art0 ? cost[basis[r]] : 0.0;
                if (cb == 0.0) continue;
                const double* tr = row(r);
                for (std::size_t j = 0; j < width; ++j) z[j] += cb * tr[j];
            }
            for (int j = 0; j < n_total; ++j) z[j] -= cost[j];
        }
        for (int r = 0; r < m; ++r) z[art0 + r] = 0.0;
        for (int r = 0; r < m; ++r)
            if (basis[r] < art0) z[basis[r]] = 0.0;
    };

    LpResult res;
    res.x.assign(n_user_, 0.0);

    const long stall_limit = 2L * m + 64;
    bool bland = false;
    long stall = 0;
    double last_obj = 0.0;
    long iters = 0;

    auto pivot = [&](int pr, int pc) {
        double* prow = row(pr);
        const double inv = 1.0 / prow[pc];
        for (std::size_t j = 0; j < width; ++j) prow[j] *= inv;
        prow[pc] = 1.0;
        for (int r = 0; r < m; ++r) {
            if (r == pr) continue;
            double* tr = row(r);
            const double f = tr[pc];
            if (std::abs(f) <= kZeroTol) {
                tr[pc] = 0.0;
                continue;
            }
            for (std::size_t j = 0; j < width; ++j) tr[j] -= f * prow[j];
            tr[pc] = 0.0;
            if (tr[n_total] < 0.0 && tr[n_total] > -1e-11) tr[n_total] = 0.0;
        }
        const double f = z[pc];
        if (std::abs(f) > kZeroTol)
            for (std::size_t j = 0; j < width; ++j) z[j] -= f * prow[j];
        z[pc] = 0.0;
        basis[pr] = pc;
    };

    auto choose_row = [&](int pc) {
        int pr = -1;
        double best_ratio = 0.0;
        double best_abs = 0.0;
        for (int pass = 0; pass < 2 && pr < 0; ++pass) {
            const double min_piv = pass == 0 ? kStablePivot : kMinPivot;
            for (int r = 0; r < m; ++r) {
                const double a = row(r)[pc];
                if (a <= min_piv) continue;
                const double ratio = row(r)[n_total] / a;
                bool take = false;
                if (pr < 0 || ratio < best_ratio - 1e-10) {
                    take = true;
                } else if (ratio < best_ratio + 1e-10) {
                    take = bland ? basis[r] < basis[pr] : a > best_abs;
                }
                if (take) {
                    pr = r;
                    best_ratio = ratio;
                    best_abs = a;
                }
            }
        }
        return pr;
    };

    auto run_phase = [&](bool phase1, int col_end) -> LpStatus {
        // phase 1 drives z[rhs] (infeasibility) down; phase 2 minimizes c.x,
        // so the tracked -objective value rises
        const double dir = phase1 ? -1.0 : 1.0;
        refresh(phase1);
        last_obj = z[n_total];
        stall = 0;
        long since_refresh = 0;
        for (;;) {
            if (iters >= iter_limit_) return LpStatus::IterationLimit;
            if (++since_refresh >= kRefreshEvery) {
                refresh(phase1);
                since_refresh = 0;
            }
            if (phase1 && feasibility_only && z[n_total] < 1e-12) {
                refresh(true);
                if (z[n_total] < feas_tol_) return LpStatus::Optimal;
            }
            int pc = -1;
            if (!bland) {
                double best = kReducedCostTol;
                for (int j = 0; j < col_end; ++j)
                    if (z[j] > best) {
                        best = z[j];
                        pc = j;
                    }
            } else {
                for (int j = 0; j < col_end; ++j)
                    if (z[j] > kReducedCostTol) {
                        pc = j;
                        break;
                    }
            }
            if (pc < 0) {
                refresh(phase1);
                // confirm optimality against the rebuilt reduced costs
                bool done = true;
                for (int j = 0; j < col_end; ++j)
                    if (z[j] > 10 * kReducedCostTol) {
                        done = false;
                        break;
                    }
                if (done) return LpStatus::Optimal;
                continue;
            }
            const int pr = choose_row(pc);
            if (pr < 0) return LpStatus::Unbounded;
            pivot(pr, pc);
            ++iters;
            const double obj = z[n_total];
            if (dir * (obj - last_obj) > 1e-13 * (1.0 + std::abs(last_obj))) {
                stall = 0;
                last_obj = obj;
            } else if (++stall > stall_limit) {
                bland = true;  // permanent; guarantees termination
            }
        }
    };

    LpStatus st = run_phase(true, art0);
    res.iterations = iters;
    // infeasibility read directly off the artificial basic values
    double infeas = 0.0;
    for (int r = 0; r < m; ++r)
        if (basis[r] >= art0) infeas += std::max(row(r)[n_total], 0.0);
    res.infeasibility = infeas;
    if (st == LpStatus::IterationLimit) {
        res.status = st;
        return res;
    }
    if (st == LpStatus::Unbounded) {
        res.status = LpStatus::Infeasible;  // cannot happen in phase 1; be safe
        return res;
    }
    if (res.infeasibility > feas_tol_) {
        res.status = LpStatus::Infeasible;
        return res;
    }

    auto extract = [&]() {
        std::fill(res.x.begin(), res.x.end(), 0.0);
        for (int r = 0; r < m; ++r)
            if (basis[r] < n_user_) {
                double v = row(r)[n_total];
                if (v < 0.0 && v > -1e-8) v = 0.0;  // ratio-test drift
                res.x[basis[r]] = v;
            }
        res.objective = 0.0;
        for (const auto& [j, v] : obj_)
            if (j < n_user_) res.objective += v * res.x[j];
    };

    if (feasibility_only || obj_.empty()) {
        res.status = LpStatus::Optimal;
        extract();
        return res;
    }

    // drive basic artificials out where a real pivot exists; rows that have
    // become all-zero stay parked on their artificial at value zero
    for (int r = 0; r < m; ++r) {
        if (basis[r] < art0) continue;
        const double* tr = row(r);
        int pc = -1;
        for (int j = 0; j < art0; ++j)
            if (std::abs(tr[j]) > kStablePivot) {
                pc = j;
                break;
            }
        if (pc >= 0) {
            pivot(r, pc);
            ++iters;
        }
    }

    bland = false;
    st = run_phase(false, art0);
    res.iterations = iters;
    res.status = st;
    extract();
    return res;
}

}  // namespace bellgate

#include "bellgate/lhv.hpp"

#include <algorithm>
#include <cmath>

#include "bellgate/simplex.hpp"

namespace bellgate {

double LhvModel::weight_sum() const {
    double s = 0.0;
    for (const auto& [k, w] : weights) s += w;
    return s;
}

CorrelationTable LhvModel::reconstruct(const Scenario& s) const {
    CorrelationTable acc(s);
    for (const auto& [idx, w] : weights) {
        const auto strat = strategy_from_index(s, idx);
        for (int i = 0; i < s.na; ++i)
            for (int j = 0; j < s.nb; ++j) acc.at(i, j, strat.alice[i], strat.bob[j]) += w;
    }
    return acc;
}

namespace {

// decoded outcome digits per strategy, decoded once per LP build
struct StrategyDigits {
    std::vector<int> digits;  // n * (na+nb), alice first
    int stride;
    std::uint64_t n;
};

StrategyDigits decode_all(const Scenario& s, std::uint64_t cap) {
    const std::uint64_t n = strategy_count(s, cap);
    StrategyDigits out;
    out.stride = s.na + s.nb;
    out.n = n;
    out.digits.resize(n * out.stride);
    const int base = s.outcomes();
    for (std::uint64_t k = 0; k < n; ++k) {
        std::uint64_t v = k;
        for (int pos = out.stride - 1; pos >= 0; --pos) {
            out.digits[k * out.stride + pos] = static_cast<int>(v % base);
            v /= base;
        }
    }
    return out;
}

std::vector<std::pair<int, double>> membership_row(const StrategyDigits& sd, const Scenario& s,
                                                   int i, int j, int K, int L) {
    std::vector<std::pair<int, double>> row;
    for (std::uint64_t t = 0; t < sd.n; ++t) {
        const int* dig = sd.digits.data() + t * sd.stride;
        if (dig[i] == K && dig[s.na + j] == L) row.emplace_back(static_cast<int>(t), 1.0);
    }
    return row;
}

}  // namespace

std::optional<LhvModel> lhv_feasible(const CorrelationTable& t, const LhvOptions& opt) {
    const Scenario& s = t.scn;
    s.validate();
    const auto sd = decode_all(s, opt.cap);
    DenseSimplex lp(static_cast<int>(sd.n));
    lp.set_feasibility_tol(opt.feasibility_tol);
    const int o = s.outcomes();
    for (int i = 0; i < s.na; ++i)
        for (int j = 0; j < s.nb; ++j)
            for (int K = 0; K < o; ++K)
                for (int L = 0; L < o; ++L) {
                    if (opt.drop_no_result_pair_rows && K == s.d && L == s.d) continue;
                    lp.add_eq(membership_row(sd, s, i, j, K, L), t.at(i, j, K, L));
                }
    const LpResult res = lp.solve(/*feasibility_only=*/true);
    if (res.status == LpStatus::IterationLimit)
        throw SolverFailure("simplex iteration limit in feasibility solve");
    if (res.status == LpStatus::Infeasible) return std::nullopt;
    LhvModel model;
    for (std::uint64_t k = 0; k < sd.n; ++k) {
        const double w = res.x[k];
        if (w < -1e-9) throw SolverFailure("negative weight beyond solver slack");
        if (w > 1e-12) model.weights[k] = w;
    }
    return model;
}

ThresholdReport eta_threshold_fixed_lambda(const Scenario& s, const PhaseSettings& ph,
                                           double lambda, double tol, const LhvOptions& opt) {
    if (!(lambda > 0.0 && lambda <= 1.0)) throw ModelInvalid("lambda outside (0,1]");
    if (tol < 1e-10) throw ModelInvalid("bisection tolerance too small");
    const CorrelationTable ideal = ideal_correlations(s, ph);

    ThresholdReport rep;
    rep.kind = ThresholdKind::FixedLambda;
    rep.lambda = lambda;
    rep.tolerance = tol;

    auto feasible_at = [&](double eta) {
        return lhv_feasible(apply_detection(ideal, DetectionModel{eta, lambda}), opt);
    };

    if (auto top = feasible_at(1.0)) {
        rep.eta_star = 1.0;
        rep.no_violation = true;
        rep.witness = std::move(top);
        return rep;
    }
    double lo = 0.0, hi = 1.0;  // eta = 0 is feasible by construction
    long steps = 0;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        ++steps;
        if (auto w = feasible_at(mid)) {
            lo = mid;
            rep.witness = std::move(w);
        } else {
            hi = mid;
        }
    }
    rep.eta_star = 0.5 * (lo + hi);
    rep.iterations = steps;
    if (!rep.witness) rep.witness = feasible_at(lo);
    return rep;
}

RescaledLhvModel solve_rescaled_lp(const Scenario& s, const PhaseSettings& ph,
                                   const LhvOptions& opt) {
    const CorrelationTable ideal = ideal_correlations(s, ph);
    const auto sd = decode_all(s, opt.cap);
    const int n = static_cast<int>(sd.n);
    const int alpha_col = n;
    DenseSimplex lp(n + 1);
    lp.set_feasibility_tol(opt.feasibility_tol);
    const int d = s.d;
    // rr rows:       sum p~ - alpha P_kl           = 0
    // (0,l) rows:    sum p~ + (alpha/2) P_l        = P_l / 2
    // (k,0) rows:    sum p~ + (alpha/2) P_k        = P_k / 2
    // (0,0) rows dropped; normalization replaced by  sum p~ >= 1
    for (int i = 0; i < s.na; ++i) {
        for (int j = 0; j < s.nb; ++j) {
            for (int K = 0; K <= d; ++K) {
                for (int L = 0; L <= d; ++L) {
                    if (K == d && L == d) continue;
                    auto row = membership_row(sd, s, i, j, K, L);
                    double rhs = 0.0;
                    if (K < d && L < d) {
                        row.emplace_back(alpha_col, -ideal.at(i, j, K, L));
                    } else if (K == d) {
                        const double pl = ideal.marginal_b(i, j, L);
                        row.emplace_back(alpha_col, 0.5 * pl);
                        rhs = 0.5 * pl;
                    } else {
                        const double pk = ideal.marginal_a(i, j, K);
                        row.emplace_back(alpha_col, 0.5 * pk);
                        rhs = 0.5 * pk;
                    }
                    lp.add_eq(row, rhs);
                }
            }
        }
    }
    std::vector<std::pair<int, double>> ones;
    ones.reserve(sd.n);
    for (int t = 0; t < n; ++t) ones.emplace_back(t, 1.0);
    lp.add_ge(ones, 1.0);
    const std::pair<int, double> obj[] = {{alpha_col, -1.0}};  // maximize alpha
    lp.set_objective(obj);
    const LpResult res = lp.solve();
    if (res.status == LpStatus::Infeasible)
        throw SolverFailure("rescaled LP infeasible; inputs violate its feasibility guarantee");
    if (res.status != LpStatus::Optimal)
        throw SolverFailure("rescaled LP did not reach an optimum");
    RescaledLhvModel model;
    model.alpha = res.x[alpha_col];
    for (int t = 0; t < n; ++t)
        if (res.x[t] > 1e-12) model.weights[static_cast<std::uint64_t>(t)] = res.x[t];
    return model;
}

ThresholdReport eta_threshold_forall_lambda(const Scenario& s, const PhaseSettings& ph,
                                            const LhvOptions& opt) {
    const RescaledLhvModel m = solve_rescaled_lp(s, ph, opt);
    ThresholdReport rep;
    rep.kind = ThresholdKind::ForallLambda;
    rep.alpha = m.alpha;
    rep.eta_star = 2.0 * m.alpha / (1.0 + m.alpha);
    rep.tolerance = opt.feasibility_tol;
    rep.no_violation = m.alpha >= 1.0 - 1e-9;
    if (rep.no_violation) rep.eta_star = 1.0;
    return rep;
}

double noise_threshold_lp(const Scenario& s, const PhaseSettings& ph, double tol,
                          const LhvOptions& opt) {
    const CorrelationTable ideal = ideal_correlations(s, ph);
    const DetectionModel perfect{1.0, 1.0};
    auto feasible_at = [&](double p) {
        return lhv_feasible(apply_detection(white_noise_mix(ideal, p), perfect), opt).has_value();
    };
    if (feasible_at(0.0)) throw NoViolation("correlations admit an LHV model with no noise");
    double lo = 0.0, hi = 1.0;  // fully mixed is classical
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        (feasible_at(mid) ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
}

RationalTable rationalize_table(const CorrelationTable& t, long max_denominator) {
    RationalTable out;
    out.scn = t.scn;
    out.p.reserve(t.p.size());
    Rational sum_fix;
    for (double v : t.p) {
        auto r = rationalize(v, max_denominator, 1.0 / static_cast<double>(max_denominator));
        out.p.push_back(r ? *r : Rational(0));
    }
    // repair normalization exactly by adjusting the (0,0) cell of each block
    const Scenario& s = t.scn;
    for (int i = 0; i < s.na; ++i)
        for (int j = 0; j < s.nb; ++j) {
            Rational sum = 0;
            const int o = s.outcomes();
            for (int K = 0; K < o; ++K)
                for (int L = 0; L < o; ++L)
                    sum += out.p[((static_cast<std::size_t>(i) * s.nb + j) * o + K) * o + L];
            out.p[((static_cast<std::size_t>(i) * s.nb + j) * o + s.d) * o + s.d] += 1 - sum;
        }
    return out;
}

bool lhv_feasible_exact(const RationalTable& t) {
    const Scenario& s = t.scn;
    s.validate();
    if (s.d > 3 || s.na > 2 || s.nb > 2)
        throw CapExceeded("exact feasibility path is limited to d <= 3, 2x2 scenarios");
    const auto sd = decode_all(s, kDefaultStrategyCap);
    const int n = static_cast<int>(sd.n);
    const int o = s.outcomes();
    const int m = s.na * s.nb * o * o;

    // dense rational tableau, artificial basis, Bland's rule throughout
    const int width = n + m + 1;
    std::vector<Rational> tab(static_cast<std::size_t>(m) * width);
    std::vector<int> basis(m);
    int r = 0;
    for (int i = 0; i < s.na; ++i)
        for (int j = 0; j < s.nb; ++j)
            for (int K = 0; K < o; ++K)
                for (int L = 0; L < o; ++L) {
                    Rational* row = tab.data() + static_cast<std::size_t>(r) * width;
                    for (int c = 0; c < n; ++c) {
                        const int* dig = sd.digits.data() + static_cast<std::size_t>(c) * sd.stride;
                        if (dig[i] == K && dig[s.na + j] == L) row[c] = 1;
                    }
                    const Rational rhs =
                        t.p[((static_cast<std::size_t>(i) * s.nb + j) * o + K) * o + L];
                    if (rhs < 0) return false;
                    row[n + r] = 1;
                    row[width - 1] = rhs;
                    basis[r] = n + r;
                    ++r;
                }
    std::vector<Rational> z(width);
    for (int rr = 0; rr < m; ++rr) {
        const Rational* row = tab.data() + static_cast<std::size_t>(rr) * width;
        for (int c = 0; c < n; ++c) z[c] += row[c];
        z[width - 1] += row[width - 1];
    }
    for (long guard = 0;; ++guard) {
        if (guard > 200000) throw SolverFailure("exact simplex iteration guard tripped");
        int pc = -1;
        for (int c = 0; c < n; ++c)
            if (z[c] > 0) {
                pc = c;
                break;
            }
        if (pc < 0) break;
        int pr = -1;
        Rational best;
        for (int rr = 0; rr < m; ++rr) {
            const Rational a = tab[static_cast<std::size_t>(rr) * width + pc];
            if (a > 0) {
                const Rational ratio = tab[static_cast<std::size_t>(rr) * width + width - 1] / a;
                if (pr < 0 || ratio < best || (ratio == best && basis[rr] < basis[pr])) {
                    pr = rr;
                    best = ratio;
                }
            }
        }
        if (pr < 0) throw SolverFailure("exact phase-1 unbounded");
        Rational* prow = tab.data() + static_cast<std::size_t>(pr) * width;
        const Rational piv = prow[pc];
        for (int c = 0; c < width; ++c) prow[c] /= piv;
        for (int rr = 0; rr < m; ++rr) {
            if (rr == pr) continue;
            Rational* row = tab.data() + static_cast<std::size_t>(rr) * width;
            const Rational f = row[pc];
            if (f != 0)
                for (int c = 0; c < width; ++c) row[c] -= f * prow[c];
        }
        const Rational fz = z[pc];
        if (fz != 0)
            for (int c = 0; c < width; ++c) z[c] -= fz * prow[c];
        basis[pr] = pc;
    }
    return z[width - 1] == 0;
}

}  // namespace bellgate

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "bellgate/quantum.hpp"
#include "bellgate/rational.hpp"
#include "bellgate/scenario.hpp"

namespace bellgate {

// Convex weight over deterministic strategies, keyed by enumeration index.
struct LhvModel {
    std::map<std::uint64_t, double> weights;

    double weight_sum() const;
    // mix of strategy points; matches the target within the LP tolerance
    CorrelationTable reconstruct(const Scenario& s) const;
};

// Solution of the rescaled (forall-lambda) linear program.
struct RescaledLhvModel {
    std::map<std::uint64_t, double> weights;  // p~_KL, sum >= 1
    double alpha = 0.0;                       // eta^2 / (1 - (1-eta)^2)
};

enum class ThresholdKind { FixedLambda, ForallLambda };

struct ThresholdReport {
    double eta_star = 1.0;
    ThresholdKind kind = ThresholdKind::FixedLambda;
    std::optional<double> lambda;          // set for FixedLambda
    std::optional<LhvModel> witness;       // LHV model at eta just below threshold
    long iterations = 0;                   // bisection steps or LP pivots
    double tolerance = 0.0;
    bool no_violation = false;             // LHV exists even at eta = 1
    std::optional<double> alpha;           // set for ForallLambda
};

struct LhvOptions {
    double feasibility_tol = 1e-9;
    // the (0,0) rows are implied by normalization + no-signalling; the LP can
    // drop them the way the rescaled formulation does
    bool drop_no_result_pair_rows = false;
    std::uint64_t cap = kDefaultStrategyCap;
};

// Phase-1 LP over strategy weights; nullopt when infeasible at tolerance.
std::optional<LhvModel> lhv_feasible(const CorrelationTable& t, const LhvOptions& opt = {});

// Dichotomic search over eta at fixed lambda.
ThresholdReport eta_threshold_fixed_lambda(const Scenario& s, const PhaseSettings& ph,
                                           double lambda, double tol = 1e-6,
                                           const LhvOptions& opt = {});

// One-shot rescaled LP: maximize alpha, then eta* = 2 alpha / (1 + alpha).
ThresholdReport eta_threshold_forall_lambda(const Scenario& s, const PhaseSettings& ph,
                                            const LhvOptions& opt = {});
RescaledLhvModel solve_rescaled_lp(const Scenario& s, const PhaseSettings& ph,
                                   const LhvOptions& opt = {});

// White-noise resistance of the correlations at eta = 1, lambda = 1:
// bisection over the noise fraction p for LHV feasibility.  This is the
// quantity the optimal-measurement tables report when the detection-optimal
// inequality is not also the noise-optimal one.
double noise_threshold_lp(const Scenario& s, const PhaseSettings& ph, double tol = 1e-5,
                          const LhvOptions& opt = {});

// Exact-rational feasibility for final threshold candidates; intended for
// d <= 3, 2x2 scenarios where solver noise could flip a near-threshold call.
struct RationalTable {
    Scenario scn;
    std::vector<Rational> p;  // same layout as CorrelationTable
};
RationalTable rationalize_table(const CorrelationTable& t, long max_denominator = 1'000'000);
bool lhv_feasible_exact(const RationalTable& t);

}  // namespace bellgate

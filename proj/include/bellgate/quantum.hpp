#pragma once

#include <vector>

#include "bellgate/scenario.hpp"

namespace bellgate {

// Multiport-beam-splitter settings: d phases per setting and party, in
// radians.  Gauge: the phase of level 0 is always 0 (canonicalize() takes
// care of it; a global phase per setting is unobservable).
struct PhaseSettings {
    std::vector<std::vector<double>> alice;  // na lists of d phases
    std::vector<std::vector<double>> bob;    // nb lists of d phases

    void validate(const Scenario& s) const;
    // phi(m) -> phi(m) - phi(0), reduced into [0, 2*pi)
    PhaseSettings canonicalized(const Scenario& s) const;
};

struct DetectionModel {
    double eta = 1.0;     // detector efficiency, [0, 1]
    double lambda = 1.0;  // pair-production probability, (0, 1]

    void validate() const {
        if (!(eta >= 0.0 && eta <= 1.0)) throw ModelInvalid("eta outside [0,1]");
        if (!(lambda > 0.0 && lambda <= 1.0)) throw ModelInvalid("lambda outside (0,1]");
    }
};

// P_kl = (1/d^3) |sum_m exp(i(phiA_i(m) - phiB_j(m) + 2 pi m (k-l)/d))|^2
// on result outcomes; no-result entries zero; marginals exactly 1/d.
CorrelationTable ideal_correlations(const Scenario& s, const PhaseSettings& ph);

// Fold in detector efficiency and pair production:
//   P(k,l) = lambda eta^2 P_kl, P(0,l) = lambda eta (1-eta) P_l,
//   P(k,0) = lambda eta (1-eta) P_k, P(0,0) = 1 - lambda + lambda (1-eta)^2.
CorrelationTable apply_detection(const CorrelationTable& ideal, const DetectionModel& m);

// (1-p) * t + p * uniform, with the uniform table 1/d^2 on result pairs.
CorrelationTable white_noise_mix(const CorrelationTable& ideal, double p);

}  // namespace bellgate

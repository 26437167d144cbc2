#include "bellgate/quantum.hpp"

#include <cmath>
#include <complex>
#include <numbers>

namespace bellgate {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

void PhaseSettings::validate(const Scenario& s) const {
    if (static_cast<int>(alice.size()) != s.na || static_cast<int>(bob.size()) != s.nb)
        throw ValidationError("phase settings do not match scenario setting counts");
    for (const auto& v : alice)
        if (static_cast<int>(v.size()) != s.d)
            throw ValidationError("each Alice setting needs exactly d phases");
    for (const auto& v : bob)
        if (static_cast<int>(v.size()) != s.d)
            throw ValidationError("each Bob setting needs exactly d phases");
    for (const auto& party : {alice, bob})
        for (const auto& v : party)
            for (double x : v)
                if (!std::isfinite(x)) throw ValidationError("non-finite phase");
}

PhaseSettings PhaseSettings::canonicalized(const Scenario& s) const {
    validate(s);
    PhaseSettings out = *this;
    auto fix = [](std::vector<double>& v) {
        const double base = v[0];
        for (double& x : v) {
            x = std::fmod(x - base, kTwoPi);
            if (x < 0) x += kTwoPi;
        }
    };
    for (auto& v : out.alice) fix(v);
    for (auto& v : out.bob) fix(v);
    return out;
}

CorrelationTable ideal_correlations(const Scenario& s, const PhaseSettings& ph) {
    ph.validate(s);
    const int d = s.d;
    CorrelationTable t(s);
    const double norm = 1.0 / (static_cast<double>(d) * d * d);
    for (int i = 0; i < s.na; ++i) {
        for (int j = 0; j < s.nb; ++j) {
            // amplitude depends on (k - l) mod d only
            std::vector<double> pg(d);
            for (int g = 0; g < d; ++g) {
                std::complex<double> amp{0.0, 0.0};
                for (int m = 0; m < d; ++m) {
                    const double arg = ph.alice[i][m] - ph.bob[j][m] + kTwoPi * m * g / d;
                    amp += std::polar(1.0, arg);
                }
                pg[g] = std::norm(amp) * norm;
            }
            for (int k = 0; k < d; ++k)
                for (int l = 0; l < d; ++l) t.at(i, j, k, l) = pg[((k - l) % d + d) % d];
        }
    }
    return t;
}

CorrelationTable apply_detection(const CorrelationTable& ideal, const DetectionModel& m) {
    m.validate();
    const Scenario& s = ideal.scn;
    const int d = s.d;
    for (int i = 0; i < s.na; ++i)
        for (int j = 0; j < s.nb; ++j) {
            if (ideal.at(i, j, d, d) != 0.0) throw ValidationError("input table is not ideal");
        }
    CorrelationTable out(s);
    const double rr = m.lambda * m.eta * m.eta;
    const double se = m.lambda * m.eta * (1.0 - m.eta);
    const double ee = 1.0 - m.lambda + m.lambda * (1.0 - m.eta) * (1.0 - m.eta);
    for (int i = 0; i < s.na; ++i) {
        for (int j = 0; j < s.nb; ++j) {
            for (int k = 0; k < d; ++k) {
                double pk = 0.0;
                for (int l = 0; l < d; ++l) {
                    out.at(i, j, k, l) = rr * ideal.at(i, j, k, l);
                    pk += ideal.at(i, j, k, l);
                }
                out.at(i, j, k, d) = se * pk;
            }
            for (int l = 0; l < d; ++l) {
                double pl = 0.0;
                for (int k = 0; k < d; ++k) pl += ideal.at(i, j, k, l);
                out.at(i, j, d, l) = se * pl;
            }
            out.at(i, j, d, d) = ee;
        }
    }
    return out;
}

CorrelationTable white_noise_mix(const CorrelationTable& ideal, double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw ModelInvalid("noise fraction outside [0,1]");
    const Scenario& s = ideal.scn;
    const int d = s.d;
    const double unif = 1.0 / (static_cast<double>(d) * d);
    CorrelationTable out(s);
    for (int i = 0; i < s.na; ++i)
        for (int j = 0; j < s.nb; ++j)
            for (int k = 0; k < d; ++k)
                for (int l = 0; l < d; ++l)
                    out.at(i, j, k, l) = (1.0 - p) * ideal.at(i, j, k, l) + p * unif;
    return out;
}

}  // namespace bellgate

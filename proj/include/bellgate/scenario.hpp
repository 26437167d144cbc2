#pragma once

#include <cstdint>
#include <vector>

#include "bellgate/errors.hpp"

namespace bellgate {

// Bipartite measurement scenario: d outcomes plus the no-result symbol,
// na settings for Alice, nb for Bob. The no-result outcome is encoded as
// the integer d so that outcome arrays index 0..d contiguously.
struct Scenario {
    int d = 2;
    int na = 1;
    int nb = 1;

    int outcomes() const { return d + 1; }
    int no_result() const { return d; }
    bool operator==(const Scenario&) const = default;

    void validate() const {
        if (d < 2 || na < 1 || nb < 1)
            throw ValidationError("scenario requires d >= 2, na >= 1, nb >= 1");
    }

    // (d+1)^(na+nb); throws CapExceeded past the configured cap.
    std::uint64_t strategy_count(std::uint64_t cap) const;
};

// Default enumeration cap; BELLGATE_CAP overrides it in the CLI.
inline constexpr std::uint64_t kDefaultStrategyCap = 10'000'000;

inline bool is_result(int outcome, const Scenario& s) { return outcome < s.d; }

// One local deterministic assignment: an outcome per setting for each party.
struct DeterministicStrategy {
    std::vector<int> alice;  // K_1..K_na
    std::vector<int> bob;    // L_1..L_nb
    bool operator==(const DeterministicStrategy&) const = default;
};

// Joint probability table p[i][j][K][L] over settings and outcomes
// (no-result included).  Layout is dense row-major.
struct CorrelationTable {
    Scenario scn;
    std::vector<double> p;

    CorrelationTable() = default;
    explicit CorrelationTable(const Scenario& s)
        : scn(s), p(static_cast<std::size_t>(s.na) * s.nb * s.outcomes() * s.outcomes(), 0.0) {}

    std::size_t idx(int i, int j, int K, int L) const {
        const int o = scn.outcomes();
        return ((static_cast<std::size_t>(i) * scn.nb + j) * o + K) * o + L;
    }
    double& at(int i, int j, int K, int L) { return p[idx(i, j, K, L)]; }
    double at(int i, int j, int K, int L) const { return p[idx(i, j, K, L)]; }

    // Alice marginal P(A_i = K) computed from block (i, j).
    double marginal_a(int i, int j, int K) const;
    double marginal_b(int i, int j, int L) const;

    // normalization, no-signalling and range invariants; throws ValidationError
    void validate(double tol = 1e-9) const;
};

// Strategies in lexicographic order of (K_1..K_na, L_1..L_nb); the order is
// part of the external contract (LP variable indices must be reproducible).
std::uint64_t strategy_count(const Scenario& s, std::uint64_t cap = kDefaultStrategyCap);
DeterministicStrategy strategy_from_index(const Scenario& s, std::uint64_t index);
std::uint64_t strategy_index(const Scenario& s, const DeterministicStrategy& strat);
std::vector<DeterministicStrategy> enumerate_strategies(const Scenario& s,
                                                        std::uint64_t cap = kDefaultStrategyCap);

// The 0/1 probability point induced by a deterministic strategy.
CorrelationTable strategy_point(const Scenario& s, const DeterministicStrategy& strat);

}  // namespace bellgate

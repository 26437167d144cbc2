#include "bellgate/scenario.hpp"

#include <cmath>
#include <string>

namespace bellgate {

std::uint64_t Scenario::strategy_count(std::uint64_t cap) const {
    std::uint64_t n = 1;
    const auto base = static_cast<std::uint64_t>(outcomes());
    for (int k = 0; k < na + nb; ++k) {
        if (n > cap / base + 1) throw CapExceeded("strategy count exceeds cap");
        n *= base;
    }
    if (n > cap)
        throw CapExceeded("strategy count " + std::to_string(n) + " exceeds cap " +
                          std::to_string(cap));
    return n;
}

std::uint64_t strategy_count(const Scenario& s, std::uint64_t cap) { return s.strategy_count(cap); }

DeterministicStrategy strategy_from_index(const Scenario& s, std::uint64_t index) {
    const int base = s.outcomes();
    DeterministicStrategy out;
    out.alice.resize(s.na);
    out.bob.resize(s.nb);
    // least significant digit is L_nb; most significant is K_1
    for (int j = s.nb - 1; j >= 0; --j) {
        out.bob[j] = static_cast<int>(index % base);
        index /= base;
    }
    for (int i = s.na - 1; i >= 0; --i) {
        out.alice[i] = static_cast<int>(index % base);
        index /= base;
    }
    return out;
}

std::uint64_t strategy_index(const Scenario& s, const DeterministicStrategy& strat) {
    const auto base = static_cast<std::uint64_t>(s.outcomes());
    std::uint64_t idx = 0;
    for (int i = 0; i < s.na; ++i) idx = idx * base + static_cast<std::uint64_t>(strat.alice[i]);
    for (int j = 0; j < s.nb; ++j) idx = idx * base + static_cast<std::uint64_t>(strat.bob[j]);
    return idx;
}

std::vector<DeterministicStrategy> enumerate_strategies(const Scenario& s, std::uint64_t cap) {
    s.validate();
    const std::uint64_t n = strategy_count(s, cap);
    std::vector<DeterministicStrategy> out;
    out.reserve(n);
    for (std::uint64_t k = 0; k < n; ++k) out.push_back(strategy_from_index(s, k));
    return out;
}

CorrelationTable strategy_point(const Scenario& s, const DeterministicStrategy& strat) {
    s.validate();
    if (static_cast<int>(strat.alice.size()) != s.na ||
        static_cast<int>(strat.bob.size()) != s.nb)
        throw ValidationError("strategy setting count does not match scenario");
    for (int k : strat.alice)
        if (k < 0 || k > s.d) throw ValidationError("strategy outcome out of range");
    for (int l : strat.bob)
        if (l < 0 || l > s.d) throw ValidationError("strategy outcome out of range");

    CorrelationTable t(s);
    for (int i = 0; i < s.na; ++i)
        for (int j = 0; j < s.nb; ++j) t.at(i, j, strat.alice[i], strat.bob[j]) = 1.0;
    return t;
}

double CorrelationTable::marginal_a(int i, int j, int K) const {
    double m = 0.0;
    for (int L = 0; L < scn.outcomes(); ++L) m += at(i, j, K, L);
    return m;
}

double CorrelationTable::marginal_b(int i, int j, int L) const {
    double m = 0.0;
    for (int K = 0; K < scn.outcomes(); ++K) m += at(i, j, K, L);
    return m;
}

void CorrelationTable::validate(double tol) const {
    scn.validate();
    const int o = scn.outcomes();
    if (p.size() != static_cast<std::size_t>(scn.na) * scn.nb * o * o)
        throw ValidationError("table size does not match scenario");
    for (double v : p) {
        if (!std::isfinite(v) || v < -tol || v > 1.0 + tol)
            throw ValidationError("table entry outside [0,1]");
    }
    for (int i = 0; i < scn.na; ++i) {
        for (int j = 0; j < scn.nb; ++j) {
            double sum = 0.0;
            for (int K = 0; K < o; ++K)
                for (int L = 0; L < o; ++L) sum += at(i, j, K, L);
            if (std::abs(sum - 1.0) > tol)
                throw ValidationError("normalization violated at setting pair (" +
                                      std::to_string(i) + "," + std::to_string(j) + ")");
        }
    }
    // no-signalling: Alice marginals independent of j, Bob marginals of i
    for (int i = 0; i < scn.na; ++i)
        for (int K = 0; K < o; ++K) {
            const double ref = marginal_a(i, 0, K);
            for (int j = 1; j < scn.nb; ++j)
                if (std::abs(marginal_a(i, j, K) - ref) > tol)
                    throw ValidationError("no-signalling violated for Alice setting " +
                                          std::to_string(i));
        }
    for (int j = 0; j < scn.nb; ++j)
        for (int L = 0; L < o; ++L) {
            const double ref = marginal_b(0, j, L);
            for (int i = 1; i < scn.na; ++i)
                if (std::abs(marginal_b(i, j, L) - ref) > tol)
                    throw ValidationError("no-signalling violated for Bob setting " +
                                          std::to_string(j));
        }
}

}  // namespace bellgate

#include "bellgate/rational.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace bellgate {

std::string rational_to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

Rational rational_from_string(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos)
        return Rational(boost::multiprecision::cpp_int(s));
    boost::multiprecision::cpp_int num(s.substr(0, slash));
    boost::multiprecision::cpp_int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in rational: " + s);
    return Rational(num, den);
}

std::optional<Rational> rationalize(double x, long max_denominator, double tol) {
    if (!std::isfinite(x)) return std::nullopt;
    // continued-fraction convergents p_k/q_k
    double v = x;
    std::int64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;  // h_{k-2}/k_{k-2}, h_{k-1}/k_{k-1}
    for (int it = 0; it < 64; ++it) {
        const double fl = std::floor(v);
        if (std::abs(fl) > 9e17) break;
        const auto a = static_cast<std::int64_t>(fl);
        const std::int64_t p2 = a * p1 + p0;
        const std::int64_t q2 = a * q1 + q0;
        if (q2 > max_denominator || q2 < 0) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        const double approx = static_cast<double>(p1) / static_cast<double>(q1);
        if (std::abs(approx - x) <= tol) return Rational(p1, q1);
        const double frac = v - fl;
        if (frac < 1e-15) break;
        v = 1.0 / frac;
    }
    return std::nullopt;
}

}  // namespace bellgate

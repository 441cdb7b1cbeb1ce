#include "leelat/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace leelat {

namespace {
void check_lengths(size_t a, size_t b) {
    if (a != b)
        throw ShapeError("vector length mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}
}  // namespace

ZqVector make_zq_vector(std::span<const long long> coords, long long q) {
    if (q < 2) throw ModulusError("modulus must be >= 2, got " + std::to_string(q));
    ZqVector v{q, {}};
    v.coords.reserve(coords.size());
    for (long long c : coords) v.coords.push_back(mod_pos(c, q));
    return v;
}

double real_mod(double a, double q) {
    double m = a - q * std::floor(a / q);
    if (m >= q) m -= q;   // floor rounding can land exactly on q
    if (m < 0.0) m = 0.0;
    return m;
}

double round_half_up(double v) {
    const double f = std::floor(v);
    return (v - f >= 0.5) ? f + 1.0 : f;
}

double l1_distance(std::span<const double> x, std::span<const double> y) {
    check_lengths(x.size(), y.size());
    double d = 0.0;
    for (size_t i = 0; i < x.size(); ++i) d += std::abs(x[i] - y[i]);
    return d;
}

long long lee_distance(const ZqVector& x, const ZqVector& y) {
    check_lengths(x.coords.size(), y.coords.size());
    if (x.q != y.q) throw ShapeError("modulus mismatch");
    const long long q = x.q;
    long long d = 0;
    for (size_t i = 0; i < x.coords.size(); ++i) {
        const long long fwd = mod_pos(x.coords[i] - y.coords[i], q);
        d += std::min(fwd, q - fwd);
    }
    return d;
}

double lee_distance_torus(std::span<const double> x, std::span<const double> y, long long q) {
    check_lengths(x.size(), y.size());
    if (q < 2) throw ModulusError("modulus must be >= 2, got " + std::to_string(q));
    const double qd = static_cast<double>(q);
    double d = 0.0;
    for (size_t i = 0; i < x.size(); ++i) {
        const double fwd = real_mod(x[i] - y[i], qd);
        d += std::min(fwd, qd - fwd);
    }
    return d;
}

long long lee_weight(const ZqVector& x) {
    long long d = 0;
    for (long long c : x.coords) d += std::min(c, x.q - c);
    return d;
}

}  // namespace leelat

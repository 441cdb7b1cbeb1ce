#ifndef LEELAT_METRICS_HPP
#define LEELAT_METRICS_HPP

#include <span>
#include <vector>

#include "leelat/errors.hpp"
#include "leelat/zq.hpp"

namespace leelat {

/// Vector over Z_q: coordinates stored as canonical representatives in [0, q).
struct ZqVector {
    long long q = 0;
    std::vector<long long> coords;

    bool operator==(const ZqVector&) const = default;
};

ZqVector make_zq_vector(std::span<const long long> coords, long long q);

/// Real mod: a - q*floor(a/q), clamped into [0, q).
double real_mod(double a, double q);

/// Round to nearest integer, halves toward +infinity.
double round_half_up(double v);

/// Sum distance (Manhattan metric) on real vectors.
double l1_distance(std::span<const double> x, std::span<const double> y);

/// Per coordinate min of the two directed differences mod q, summed. Exact.
long long lee_distance(const ZqVector& x, const ZqVector& y);

/// Same metric on the torus: real-valued coordinates, wraparound mod q.
double lee_distance_torus(std::span<const double> x, std::span<const double> y, long long q);

/// Lee weight of a Z_q vector: distance to the zero vector.
long long lee_weight(const ZqVector& x);

}  // namespace leelat

#endif

// Test-side reference implementations, kept independent of the library
// paths they are used to check: plain box/product enumerations and the
// structural residue membership rule.
#ifndef LEELAT_TESTS_ORACLES_HPP
#define LEELAT_TESTS_ORACLES_HPP

#include <cmath>
#include <cstdlib>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "leelat/lattice.hpp"
#include "leelat/rng.hpp"

namespace oracles {

using leelat::QaryLattice;
using leelat::SplitRng;

// z is a lattice point iff the tail residues equal B times the head
// residues, coordinate-wise mod q.
inline bool member(const QaryLattice& lat, std::span<const long long> z) {
    for (int j = 0; j < lat.n - lat.k; ++j) {
        long long dot = 0;
        for (int i = 0; i < lat.k; ++i)
            dot += lat.b_block.at(j, i) * leelat::mod_pos(z[i], lat.q);
        if (leelat::mod_pos(z[lat.k + j], lat.q) != leelat::mod_pos(dot, lat.q)) return false;
    }
    return true;
}

// Odometer over a product of integer ranges [lo[i], hi[i]].
inline bool advance(std::vector<long long>& v, std::span<const long long> lo,
                    std::span<const long long> hi) {
    int pos = static_cast<int>(v.size()) - 1;
    while (pos >= 0 && ++v[pos] > hi[pos]) v[pos--] = lo[pos];
    return pos >= 0;
}

struct BoxCvpResult {
    std::vector<long long> point;
    double distance = 0.0;
};

// Closest lattice point by scanning an integer box certain to contain the
// optimum (the rounding estimate is at most k/2 + q(n-k)/2 away).
inline BoxCvpResult box_cvp(const QaryLattice& lat, std::span<const double> r) {
    const long long reach =
        static_cast<long long>(std::ceil(0.5 * lat.k + 0.5 * lat.q * (lat.n - lat.k))) + 1;
    std::vector<long long> lo(lat.n), hi(lat.n);
    for (int i = 0; i < lat.n; ++i) {
        lo[i] = static_cast<long long>(std::floor(r[i])) - reach;
        hi[i] = static_cast<long long>(std::ceil(r[i])) + reach;
    }
    std::vector<long long> z = lo;
    BoxCvpResult best;
    bool have = false;
    do {
        if (!member(lat, z)) continue;
        double d = 0.0;
        for (int i = 0; i < lat.n; ++i) d += std::abs(r[i] - static_cast<double>(z[i]));
        if (!have || d < best.distance) {
            best.point = z;
            best.distance = d;
            have = true;
        }
    } while (advance(z, lo, hi));
    return best;
}

// Minimum l1 norm over nonzero lattice points of the box [-q, q]^n.
inline long long box_min_norm(const QaryLattice& lat) {
    std::vector<long long> lo(lat.n, -lat.q), hi(lat.n, lat.q);
    std::vector<long long> z = lo;
    long long best = -1;
    do {
        if (!member(lat, z)) continue;
        long long norm = 0;
        for (long long c : z) norm += std::llabs(c);
        if (norm == 0) continue;
        if (best < 0 || norm < best) best = norm;
    } while (advance(z, lo, hi));
    return best;
}

// Number of integer points with coordinate-magnitude sum <= radius.
inline long long ball_points(int dim, long long radius) {
    if (dim == 0) return 1;
    std::vector<long long> lo(dim, -radius), hi(dim, radius);
    std::vector<long long> z = lo;
    long long count = 0;
    do {
        long long norm = 0;
        for (long long c : z) norm += std::llabs(c);
        if (norm <= radius) ++count;
    } while (advance(z, lo, hi));
    return count;
}

// All codewords of the column span of g, as a set (exhaustive).
inline std::set<std::vector<long long>> span_set(const leelat::ZqMatrix& g) {
    std::set<std::vector<long long>> out;
    std::vector<long long> u(g.cols, 0);
    std::vector<long long> lo(g.cols, 0), hi(g.cols, g.q - 1);
    do {
        std::vector<long long> cw(g.rows, 0);
        for (int r = 0; r < g.rows; ++r) {
            long long acc = 0;
            for (int c = 0; c < g.cols; ++c) acc += g.at(r, c) * u[c];
            cw[r] = leelat::mod_pos(acc, g.q);
        }
        out.insert(std::move(cw));
    } while (advance(u, lo, hi));
    return out;
}

inline std::vector<double> random_received(const QaryLattice& lat, double scale, SplitRng& rng) {
    std::vector<double> r(lat.n);
    std::vector<long long> coeffs(lat.n);
    for (int i = 0; i < lat.n; ++i) coeffs[i] = rng.below(lat.q);
    const std::vector<long long> sent = lat.map_coeffs(coeffs);
    for (int i = 0; i < lat.n; ++i)
        r[i] = static_cast<double>(sent[i]) + (scale > 0 ? rng.laplace(scale) : 0.0);
    return r;
}

inline QaryLattice random_lattice(long long q, int n, int k, SplitRng& rng) {
    leelat::ZqMatrix b{q, n - k, k, {}};
    for (int i = 0; i < (n - k) * k; ++i) b.a.push_back(rng.below(q));
    return leelat::build_lattice_from_blocks(q, n, k, b);
}

}  // namespace oracles

#endif

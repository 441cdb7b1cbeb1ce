#include "leelat/sphere.hpp"

#include <algorithm>
#include <cmath>

#include "leelat/geometry.hpp"

namespace leelat {

namespace {

// Closed-ball comparisons carry this absolute slack so that points whose
// recomputed distance differs from the radius by a rounding ulp (the
// estimate point itself, typically) are never dropped. Integer instances
// are unaffected: their distances are exact and at least 1 apart.
constexpr double kBallSlack = 1e-9;

// Mutable state of one enumeration run.
struct Search {
    const QaryLattice& lat;
    std::span<const double> r;
    bool shrink;
    bool count;

    double radius;                          // current (possibly shrunk) ball radius
    std::vector<long long> prefix;          // x_1..x_k being built
    std::vector<long long> tail;            // scratch for the forced coordinates
    std::vector<long long> best_point;
    double best_distance = 0.0;
    bool have_best = false;
    std::vector<long long> nodes;           // per-depth visit counts
    long long leaves = 0;

    Search(const QaryLattice& l, std::span<const double> rec, double r0,
           const DecodeConfig& cfg)
        : lat(l), r(rec), shrink(cfg.shrink_on_improve), count(cfg.count_nodes),
          radius(r0), prefix(l.k, 0), tail(l.n - l.k, 0),
          nodes(cfg.count_nodes ? l.k + 1 : 0, 0) {}

    // Tail completion for the current prefix, then candidate test.
    void complete() {
        ++leaves;
        const int k = lat.k, n = lat.n;
        double dist = 0.0;
        for (int i = 0; i < k; ++i) dist += std::abs(prefix[i] - r[i]);
        for (int j = 0; j < n - k; ++j) {
            long long dot = 0;
            for (int i = 0; i < k; ++i) dot += lat.b_block.at(j, i) * prefix[i];
            const double rem = r[k + j] - static_cast<double>(dot);
            const long long t =
                static_cast<long long>(round_half_up(rem / static_cast<double>(lat.q)));
            tail[j] = t;
            dist += std::abs(rem - static_cast<double>(lat.q) * t);
        }
        if (dist > radius + kBallSlack) return;
        if (!have_best || dist < best_distance) {
            have_best = true;
            best_distance = dist;
            best_point.resize(n);
            for (int i = 0; i < k; ++i) best_point[i] = prefix[i];
            for (int j = 0; j < n - k; ++j) {
                long long dot = 0;
                for (int i = 0; i < k; ++i) dot += lat.b_block.at(j, i) * prefix[i];
                best_point[k + j] = dot + lat.q * tail[j];
            }
            if (shrink) radius = dist;
        }
    }

    void descend(int depth, double used) {
        const double budget = radius - used;
        const double center = r[depth - 1];
        const long long lo = static_cast<long long>(std::ceil(center - budget - kBallSlack));
        const long long hi = static_cast<long long>(std::floor(center + budget + kBallSlack));
        for (long long x = lo; x <= hi; ++x) {
            const double step = std::abs(static_cast<double>(x) - center);
            // radius may have shrunk since [lo, hi] was computed
            if (used + step > radius + kBallSlack) {
                if (static_cast<double>(x) > center) break;
                continue;
            }
            if (count) ++nodes[depth];
            prefix[depth - 1] = x;
            if (depth == lat.k)
                complete();
            else
                descend(depth + 1, used + step);
        }
    }
};

}  // namespace

BabaiEstimate babai_radius(const QaryLattice& lat, std::span<const double> r) {
    if (r.size() != static_cast<size_t>(lat.n)) throw ShapeError("received vector length != n");
    const int k = lat.k, n = lat.n;
    std::vector<long long> coeffs(n);
    for (int i = 0; i < k; ++i)
        coeffs[i] = static_cast<long long>(round_half_up(r[i]));
    for (int j = 0; j < n - k; ++j) {
        long long dot = 0;
        for (int i = 0; i < k; ++i) dot += lat.b_block.at(j, i) * coeffs[i];
        coeffs[k + j] = static_cast<long long>(
            round_half_up((r[k + j] - static_cast<double>(dot)) / static_cast<double>(lat.q)));
    }
    BabaiEstimate est;
    est.point = lat.map_coeffs(coeffs);
    for (int i = 0; i < n; ++i)
        est.radius += std::abs(static_cast<double>(est.point[i]) - r[i]);
    return est;
}

DecodeResult lee_sphere_decode(const QaryLattice& lat, std::span<const double> r,
                               const DecodeConfig& cfg) {
    if (r.size() != static_cast<size_t>(lat.n)) throw ShapeError("received vector length != n");
    if (cfg.radius && *cfg.radius < 0) throw std::invalid_argument("radius must be >= 0");
    const double r0 = cfg.radius ? *cfg.radius : babai_radius(lat, r).radius;
    Search search(lat, r, r0, cfg);
    if (cfg.count_nodes) search.nodes[0] = 1;  // root
    search.descend(1, 0.0);
    DecodeResult out;
    if (search.have_best) {
        out.point = std::move(search.best_point);
        out.distance = search.best_distance;
    }
    out.nodes_per_depth = std::move(search.nodes);
    out.leaves_tested = search.leaves;
    return out;
}

unsigned long long exact_node_count(int k, long long radius) {
    if (k < 0 || radius < 0) throw std::invalid_argument("need k >= 0 and radius >= 0");
    unsigned long long total = 0;
    for (int j = 0; j <= k; ++j) {
        const unsigned long long c = lee_ball_cardinality(j, radius);
        if (total + c < total) throw std::overflow_error("node count overflows 64 bits");
        total += c;
    }
    return total;
}

double expected_node_bound(int n, long long q, int k) {
    if (k < 0 || k > n || q < 2) throw std::invalid_argument("need 0 <= k <= n and q >= 2");
    double total = 0.0;
    for (int j = 0; j <= k; ++j) {
        const double base = static_cast<double>(j) + static_cast<double>(q) * (n - j);
        total += std::exp(j * std::log(base) - std::lgamma(j + 1.0));
    }
    return total;
}

}  // namespace leelat

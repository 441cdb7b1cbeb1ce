#include "leelat/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "leelat/rng.hpp"

namespace leelat {

namespace {

using u128 = unsigned __int128;

constexpr unsigned long long kU64Max = ~0ULL;

// Exact binomial coefficient; throws on 64-bit overflow.
unsigned long long binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    u128 acc = 1;
    for (long long i = 1; i <= k; ++i) {
        acc = acc * static_cast<u128>(n - k + i);
        acc /= static_cast<u128>(i);  // exact: every prefix product is a binomial
        if (acc > kU64Max) throw std::overflow_error("binomial overflows 64 bits");
    }
    return static_cast<unsigned long long>(acc);
}

// Gauss-Legendre nodes/weights on [0, pi/2], Newton iteration on P_n.
struct QuadRule {
    std::vector<double> x;
    std::vector<double> w;
};

QuadRule gauss_legendre(int pts) {
    QuadRule rule;
    rule.x.resize(pts);
    rule.w.resize(pts);
    const double half = std::numbers::pi / 4;  // midpoint scale of [0, pi/2]
    for (int i = 0; i < pts; ++i) {
        double t = std::cos(std::numbers::pi * (i + 0.75) / (pts + 0.5));
        double p1 = 0.0, dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0;
            p1 = t;
            for (int m = 2; m <= pts; ++m) {
                const double p2 = ((2 * m - 1) * t * p1 - (m - 1) * p0) / m;
                p0 = p1;
                p1 = p2;
            }
            dp = pts * (t * p1 - p0) / (t * t - 1.0);
            const double step = p1 / dp;
            t -= step;
            if (std::abs(step) < 1e-15) break;
        }
        rule.x[i] = half * (t + 1.0);
        rule.w[i] = half * 2.0 / ((1.0 - t * t) * dp * dp);
    }
    return rule;
}

// Coordinate sum of the nested cos/sin point for the given angles.
double coordinate_sum(const double* phi, int n) {
    double sum = 0.0, sines = 1.0;
    for (int i = 0; i < n - 1; ++i) {
        sum += sines * std::cos(phi[i]);
        sines *= std::sin(phi[i]);
    }
    return sum + sines;
}

double powi(double base, int e) {
    double r = 1.0;
    while (e-- > 0) r *= base;
    return r;
}

// All moments 0..jmax of the coordinate sum in one sweep.
std::vector<double> tensor_moments(int n, int jmax, int pts) {
    const QuadRule rule = gauss_legendre(pts);
    const int dims = n - 1;
    std::vector<int> idx(dims, 0);
    std::vector<double> phi(dims);
    std::vector<double> total(jmax + 1, 0.0);
    for (;;) {
        double wt = 1.0;
        for (int d = 0; d < dims; ++d) {
            phi[d] = rule.x[idx[d]];
            wt *= rule.w[idx[d]];
        }
        const double s = coordinate_sum(phi.data(), n);
        double p = 1.0;
        for (int j = 0; j <= jmax; ++j) {
            total[j] += wt * p;
            p *= s;
        }
        int d = dims - 1;
        while (d >= 0 && ++idx[d] == pts) idx[d--] = 0;
        if (d < 0) break;
    }
    return total;
}

constexpr long long kShardSamples = 1 << 16;

// Sharded Monte Carlo over [0, pi/2]^(n-1): the estimate depends only on
// (seed, samples), regardless of how shards are scheduled.
std::vector<Estimate> monte_carlo_moments(int n, int jmax, long long samples,
                                          std::uint64_t seed) {
    if (samples < 2) samples = 2;
    const double domain = powi(std::numbers::pi / 2, n - 1);
    std::vector<double> sum(jmax + 1, 0.0), sumsq(jmax + 1, 0.0);
    std::vector<double> phi(n - 1);
    long long done = 0;
    for (long long shard = 0; done < samples; ++shard) {
        SplitRng rng(SplitRng::mix(seed, static_cast<std::uint64_t>(shard)));
        const long long count = std::min(kShardSamples, samples - done);
        for (long long s = 0; s < count; ++s) {
            for (int d = 0; d < n - 1; ++d) phi[d] = rng.unit() * (std::numbers::pi / 2);
            const double cs = coordinate_sum(phi.data(), n);
            double p = 1.0;
            for (int j = 0; j <= jmax; ++j) {
                sum[j] += p;
                sumsq[j] += p * p;
                p *= cs;
            }
        }
        done += count;
    }
    std::vector<Estimate> out(jmax + 1);
    for (int j = 0; j <= jmax; ++j) {
        const double mean = sum[j] / static_cast<double>(samples);
        const double var = std::max(0.0, sumsq[j] / static_cast<double>(samples) - mean * mean);
        out[j] = Estimate{mean * domain,
                          std::sqrt(var / static_cast<double>(samples)) * domain};
    }
    return out;
}

std::vector<Estimate> numeric_moments(int n, int jmax, long long samples, std::uint64_t seed) {
    if (n <= 4) {
        const int pts = 48;
        const std::vector<double> coarse = tensor_moments(n, jmax, pts / 2);
        const std::vector<double> fine = tensor_moments(n, jmax, pts);
        std::vector<Estimate> out(jmax + 1);
        for (int j = 0; j <= jmax; ++j) out[j] = Estimate{fine[j], std::abs(fine[j] - coarse[j])};
        return out;
    }
    return monte_carlo_moments(n, jmax, samples, seed);
}

// C(j,i) * Gamma((i+1)/2) Gamma((j-i+1)/2) / (2 Gamma(j/2+1)), log-domain.
double recurrence_coeff(int j, int i) {
    return std::exp(std::lgamma(j + 1.0) - std::lgamma(i + 1.0) - std::lgamma(j - i + 1.0) +
                    std::lgamma((i + 1) / 2.0) + std::lgamma((j - i + 1) / 2.0) -
                    std::numbers::ln2 - std::lgamma(j / 2.0 + 1.0));
}

void check_dim(int n, int min_n) {
    if (n < min_n) throw std::invalid_argument("dimension must be >= " + std::to_string(min_n));
}

}  // namespace

unsigned long long lee_ball_cardinality(int dim, long long radius) {
    if (dim < 0 || radius < 0) throw std::invalid_argument("dimension and radius must be >= 0");
    u128 total = 0;
    const long long top = std::min<long long>(dim, radius);
    for (long long i = 0; i <= top; ++i) {
        u128 term = static_cast<u128>(binomial(dim, i)) * binomial(radius, i);
        if (i >= 64 || term > (static_cast<u128>(kU64Max) >> i))
            throw std::overflow_error("lee_ball_cardinality overflows 64 bits");
        total += term << i;
        if (total > kU64Max) throw std::overflow_error("lee_ball_cardinality overflows 64 bits");
    }
    return static_cast<unsigned long long>(total);
}

double lee_ball_volume(int dim, double radius) {
    if (dim < 1 || radius < 0) throw std::invalid_argument("need dim >= 1 and radius >= 0");
    if (radius == 0.0) return 0.0;
    return std::exp(dim * std::log(2.0 * radius) - std::lgamma(dim + 1.0));
}

double euclid_ball_volume(int dim, double radius) {
    if (dim < 1 || radius < 0) throw std::invalid_argument("need dim >= 1 and radius >= 0");
    if (radius == 0.0) return 0.0;
    return std::exp(0.5 * dim * std::log(std::numbers::pi) + dim * std::log(radius) -
                    std::lgamma(0.5 * dim + 1.0));
}

Estimate angular_integral(int n, int j, long long samples, std::uint64_t seed) {
    check_dim(n, 2);
    if (j < 0) throw std::invalid_argument("moment order must be >= 0");
    return numeric_moments(n, j, samples, seed)[j];
}

double angular_integral_recursive(int n, long long samples, std::uint64_t seed) {
    check_dim(n, 2);
    if (n == 2) return angular_integral(2, 2, samples, seed).value;
    const std::vector<Estimate> lower = numeric_moments(n - 1, n, samples, seed);
    double total = 0.0;
    for (int i = 0; i <= n; ++i) total += recurrence_coeff(n, i) * lower[i].value;
    return total;
}

std::vector<double> angular_integral_moments(int n) {
    check_dim(n, 1);
    std::vector<double> prev(n + 1, 1.0);  // one dimension: the single point (1)
    for (int dim = 2; dim <= n; ++dim) {
        std::vector<double> cur(n + 1, 0.0);
        for (int j = 0; j <= n; ++j) {
            double acc = 0.0;
            for (int i = 0; i <= j; ++i) acc += recurrence_coeff(j, i) * prev[i];
            cur[j] = acc;
        }
        prev = std::move(cur);
    }
    return prev;
}

double avg_lee_volume(int n, double euclid_radius, long long samples, std::uint64_t seed) {
    check_dim(n, 2);
    if (euclid_radius <= 0) throw std::invalid_argument("radius must be positive");
    const double top_moment = (n == 2) ? angular_integral(2, 2, samples, seed).value
                                       : angular_integral_recursive(n, samples, seed);
    const double log_pref = n * std::log(2.0 * euclid_radius) - std::lgamma(n + 1.0) -
                            (n - 1) * std::log(std::numbers::pi / 2);
    return std::exp(log_pref) * top_moment;
}

CrossoverResult crossover_dimension(int max_n, long long samples, std::uint64_t seed) {
    check_dim(max_n, 2);
    CrossoverResult out;
    for (int n = 2; n <= max_n; ++n) {
        VolumeRow row;
        row.n = n;
        row.euclid = euclid_ball_volume(n, 1.0);
        row.avg_lee = avg_lee_volume(n, 1.0, samples, SplitRng::mix(seed, n));
        row.ratio = row.avg_lee / row.euclid;
        if (out.crossover_n < 0 && row.avg_lee < row.euclid) out.crossover_n = n;
        out.table.push_back(row);
    }
    return out;
}

}  // namespace leelat

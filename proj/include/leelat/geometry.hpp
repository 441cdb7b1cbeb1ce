#ifndef LEELAT_GEOMETRY_HPP
#define LEELAT_GEOMETRY_HPP

#include <cstdint>
#include <vector>

namespace leelat {

/// Number of integer points z in dim dimensions with sum |z_i| <= radius.
/// Exact; throws std::overflow_error past unsigned 64-bit range.
unsigned long long lee_ball_cardinality(int dim, long long radius);

/// Volume of the cross-polytope of the given radius: radius^dim 2^dim / dim!.
double lee_ball_volume(int dim, double radius);

/// Volume of the Euclidean ball, log-gamma evaluated.
double euclid_ball_volume(int dim, double radius);

struct Estimate {
    double value = 0.0;
    double std_error = 0.0;
};

/// Moment of the coordinate sum over the positive-orthant patch of the unit
/// sphere, integrated in angle space (no surface Jacobian): the angles run
/// over [0, pi/2]^(n-1) with the nested cos/sin parameterization. Tensor
/// Gauss-Legendre quadrature for n <= 4 (std_error = resolution delta),
/// seeded Monte Carlo above (std_error = standard error of the mean).
Estimate angular_integral(int n, int j, long long samples, std::uint64_t seed = 0x5eedULL);

/// Top moment via one step of the binomial-Beta recurrence, all lower-order
/// moments taken from angular_integral. n == 2 is returned directly from
/// quadrature (the recurrence has no base below that).
double angular_integral_recursive(int n, long long samples = 1'000'000,
                                  std::uint64_t seed = 0x5eedULL);

/// All moments 0..n computed by iterating the recurrence from the
/// one-dimensional base (single point x = (1), every moment 1). Fully
/// deterministic; agrees with quadrature to machine precision for small n.
std::vector<double> angular_integral_moments(int n);

/// Average volume of the cross-polytopes touching the Euclidean sphere of
/// radius euclid_radius, averaged in angle space over the positive orthant.
/// Deterministic quadrature for n <= 4, seeded Monte Carlo above.
double avg_lee_volume(int n, double euclid_radius, long long samples = 1'000'000,
                      std::uint64_t seed = 0x5eedULL);

struct VolumeRow {
    int n = 0;
    double euclid = 0.0;
    double avg_lee = 0.0;
    double ratio = 0.0;
};

struct CrossoverResult {
    int crossover_n = -1;  // -1 when no crossover found up to max_n
    std::vector<VolumeRow> table;
};

/// Smallest n <= max_n where the average cross-polytope volume drops below
/// the unit Euclidean ball, plus the full comparison table for n = 2..max_n.
CrossoverResult crossover_dimension(int max_n, long long samples = 1'000'000,
                                    std::uint64_t seed = 0x5eedULL);

}  // namespace leelat

#endif

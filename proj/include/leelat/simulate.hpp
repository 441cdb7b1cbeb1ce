#ifndef LEELAT_SIMULATE_HPP
#define LEELAT_SIMULATE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "leelat/lattice.hpp"
#include "leelat/rng.hpp"
#include "leelat/sphere.hpp"

namespace leelat {

/// One transmit/receive draw: received = basis * coeffs + noise exactly.
struct ChannelSample {
    QaryLattice lattice;
    std::vector<long long> coeffs;
    std::vector<long long> sent;
    std::vector<double> noise;
    std::vector<double> received;
};

struct ExperimentSpec {
    int n = 17;
    long long q = 5;
    int k_min = 1;
    int k_max = 16;
    int trials = 100;
    double laplace_scale = 1.0;
    std::uint64_t seed = 42;
    DecodeConfig decoder;       // radius empty = rounding estimate
    int threads = 0;            // 0 = hardware concurrency
    bool oracle_check = false;  // verify each trial against brute_force_cvp (small n only)
};

struct TrialRecord {
    int k = 0;
    int index = 0;
    bool failed = false;        // decoder raised; error kept for the log
    std::string error;
    double distance = 0.0;
    long long nodes_total = 0;
    long long leaves = 0;
    double babai = 0.0;
    double noise_l1 = 0.0;
    bool exact_recovery = false;  // decoded point == sent point
    bool within_noise = false;    // decoded distance <= |noise|_1
    bool babai_bound_ok = false;  // babai <= k/2 + q(n-k)/2
    bool node_bound_ok = false;   // nodes_total <= expected_node_bound
    bool distance_in_ball = false;  // distance <= babai radius
    double time_us = 0.0;
};

struct AggregateRow {
    int k = 0;
    int trials = 0;
    double mean_nodes = 0.0;
    double median_nodes = 0.0;
    double p95_nodes = 0.0;
    double mean_distance = 0.0;
    double exact_recovery_rate = 0.0;
    double correct_rate = 0.0;  // distance <= |noise|_1
    double mean_time_us = 0.0;
};

struct ExperimentResult {
    std::vector<AggregateRow> rows;
    std::vector<TrialRecord> trials;
};

/// Lattice with B entries drawn i.i.d. uniform on {0..q-1}.
QaryLattice sample_lattice(long long q, int n, int k, SplitRng& rng);

/// i.i.d. zero-mean Laplace coordinates with the given scale.
std::vector<double> sample_laplace_noise(int n, double scale, SplitRng& rng);

/// Draw a full channel sample: lattice, uniform coefficients, noise.
ChannelSample sample_channel(long long q, int n, int k, double scale, SplitRng& rng);

/// Per-trial RNG stream: derived from (seed, k, trial), so parallel and
/// serial schedules produce identical tables.
SplitRng trial_rng(std::uint64_t seed, int k, int trial);

/// Batch decode experiment over the configured k range.
ExperimentResult run_experiment(const ExperimentSpec& spec);

}  // namespace leelat

#endif

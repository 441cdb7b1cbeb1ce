#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "leelat/simulate.hpp"
#include "oracles.hpp"

using namespace leelat;

TEST_CASE("sample_lattice: shape, range, determinism") {
    SplitRng a(2024), b(2024);
    const QaryLattice la = sample_lattice(5, 17, 8, a);
    const QaryLattice lb = sample_lattice(5, 17, 8, b);
    CHECK(la.b_block.rows == 9);
    CHECK(la.b_block.cols == 8);
    for (long long e : la.b_block.a) {
        CHECK(e >= 0);
        CHECK(e < 5);
    }
    CHECK(la.b_block == lb.b_block);
    CHECK_THROWS_AS(sample_lattice(5, 4, 4, a), ShapeError);
}

TEST_CASE("sample_lattice entries are uniform (fixed-seed frequency check)") {
    SplitRng rng(99);
    const long long q = 5;
    const int draws = 100'000;
    std::vector<long long> counts(q, 0);
    for (int i = 0; i < draws / 12; ++i) {
        const QaryLattice lat = sample_lattice(q, 5, 2, rng);  // 6 entries per draw
        for (long long e : lat.b_block.a) ++counts[e];
        const QaryLattice lat2 = sample_lattice(q, 4, 2, rng);  // 4 entries
        for (long long e : lat2.b_block.a) ++counts[e];
    }
    long long total = 0;
    for (long long c : counts) total += c;
    const double p = 1.0 / static_cast<double>(q);
    const double sigma = std::sqrt(static_cast<double>(total) * p * (1 - p));
    for (long long c : counts)
        CHECK(std::abs(static_cast<double>(c) - static_cast<double>(total) * p) <= 3.0 * sigma);
}

TEST_CASE("sample_laplace_noise statistics at scale 1") {
    SplitRng rng(123456);
    const int draws = 1'000'000;
    double sum = 0.0, abs_sum = 0.0;
    int above_median = 0;
    const std::vector<double> e = sample_laplace_noise(draws, 1.0, rng);
    for (double v : e) {
        sum += v;
        abs_sum += std::abs(v);
        if (std::abs(v) > std::numbers::ln2) ++above_median;
    }
    const double inv = 1.0 / draws;
    // var = 2 for unit scale, so 4 sigma of the mean is 4*sqrt(2)/1000
    CHECK(std::abs(sum * inv) < 4.0 * std::numbers::sqrt2 / 1000.0);
    // |e| is exponential with mean 1 and sigma 1
    CHECK(std::abs(abs_sum * inv - 1.0) < 4.0 / 1000.0);
    // median of |e| is ln 2
    CHECK(std::abs(above_median * inv - 0.5) < 4.0 * 0.5 / 1000.0);
}

TEST_CASE("scale zero noise is exactly zero") {
    SplitRng rng(5);
    const std::vector<double> e = sample_laplace_noise(100, 0.0, rng);
    for (double v : e) CHECK(v == 0.0);
    CHECK_THROWS_AS(sample_laplace_noise(3, -1.0, rng), std::invalid_argument);
}

TEST_CASE("channel samples satisfy the receive model exactly") {
    SplitRng rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        const ChannelSample s = sample_channel(5, 9, 4, 1.0, rng);
        REQUIRE(s.received.size() == 9);
        for (int i = 0; i < 9; ++i)
            CHECK(s.received[i] == static_cast<double>(s.sent[i]) + s.noise[i]);
        CHECK(oracles::member(s.lattice, s.sent));
    }
}

TEST_CASE("experiment tables are bit-identical across runs and thread counts") {
    ExperimentSpec spec;
    spec.n = 8;
    spec.q = 5;
    spec.k_min = 1;
    spec.k_max = 7;
    spec.trials = 12;
    spec.seed = 77;
    spec.threads = 1;
    const ExperimentResult serial = run_experiment(spec);
    spec.threads = 4;
    const ExperimentResult parallel = run_experiment(spec);
    REQUIRE(serial.rows.size() == 7);
    REQUIRE(parallel.rows.size() == 7);
    for (size_t i = 0; i < serial.rows.size(); ++i) {
        CHECK(serial.rows[i].mean_nodes == parallel.rows[i].mean_nodes);
        CHECK(serial.rows[i].median_nodes == parallel.rows[i].median_nodes);
        CHECK(serial.rows[i].p95_nodes == parallel.rows[i].p95_nodes);
        CHECK(serial.rows[i].mean_distance == parallel.rows[i].mean_distance);
        CHECK(serial.rows[i].exact_recovery_rate == parallel.rows[i].exact_recovery_rate);
        CHECK(serial.rows[i].correct_rate == parallel.rows[i].correct_rate);
    }
}

TEST_CASE("noiseless trials recover the sent point along a single path") {
    ExperimentSpec spec;
    spec.n = 7;
    spec.q = 5;
    spec.k_min = 2;
    spec.k_max = 4;
    spec.trials = 15;
    spec.laplace_scale = 0.0;
    spec.seed = 3;
    const ExperimentResult result = run_experiment(spec);
    for (const TrialRecord& t : result.trials) {
        CHECK_FALSE(t.failed);
        CHECK(t.exact_recovery);
        CHECK(t.distance == 0.0);
        CHECK(t.nodes_total == t.k + 1);  // root plus one node per depth
    }
    for (const AggregateRow& row : result.rows) {
        CHECK(row.exact_recovery_rate == 1.0);
        CHECK(row.mean_distance == 0.0);
    }
}

TEST_CASE("per-trial invariants hold under noise") {
    ExperimentSpec spec;
    spec.n = 9;
    spec.q = 5;
    spec.k_min = 1;
    spec.k_max = 8;
    spec.trials = 25;
    spec.laplace_scale = 1.0;
    spec.seed = 2718;
    const ExperimentResult result = run_experiment(spec);
    for (const TrialRecord& t : result.trials) {
        REQUIRE_FALSE(t.failed);
        CHECK(t.babai_bound_ok);
        CHECK(t.node_bound_ok);
        CHECK(t.distance_in_ball);
        CHECK(t.within_noise);  // the true point is in reach, so the best is at most |e|
        CHECK(t.nodes_total >= t.k + 1);
    }
}

TEST_CASE("small-instance trials agree with the brute-force reference") {
    ExperimentSpec spec;
    spec.n = 6;
    spec.q = 5;
    spec.k_min = 1;
    spec.k_max = 5;
    spec.trials = 40;
    spec.laplace_scale = 0.8;
    spec.seed = 11;
    spec.oracle_check = true;
    const ExperimentResult result = run_experiment(spec);
    for (const TrialRecord& t : result.trials) CHECK_FALSE(t.failed);
}

TEST_CASE("trial streams are independent of schedule") {
    // the stream for (seed, k, trial) never depends on other trials
    SplitRng direct = trial_rng(42, 3, 7);
    const ChannelSample s1 = sample_channel(5, 6, 3, 1.0, direct);
    SplitRng again = trial_rng(42, 3, 7);
    const ChannelSample s2 = sample_channel(5, 6, 3, 1.0, again);
    CHECK(s1.received == s2.received);
    SplitRng other = trial_rng(42, 3, 8);
    const ChannelSample s3 = sample_channel(5, 6, 3, 1.0, other);
    CHECK(s1.received != s3.received);
}

TEST_CASE("spec validation") {
    ExperimentSpec spec;
    spec.n = 5;
    spec.k_min = 0;
    CHECK_THROWS_AS(run_experiment(spec), ShapeError);
    spec.k_min = 2;
    spec.k_max = 5;
    CHECK_THROWS_AS(run_experiment(spec), ShapeError);
    spec.k_max = 3;
    spec.trials = 0;
    CHECK_THROWS_AS(run_experiment(spec), std::invalid_argument);
}

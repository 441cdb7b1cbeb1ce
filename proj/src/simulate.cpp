#include "leelat/simulate.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <thread>

#include "leelat/decode.hpp"

namespace leelat {

QaryLattice sample_lattice(long long q, int n, int k, SplitRng& rng) {
    if (k < 1 || k >= n) throw ShapeError("sample_lattice: need 1 <= k < n");
    ZqMatrix b{q, n - k, k, {}};
    b.a.reserve(static_cast<size_t>(n - k) * k);
    for (int i = 0; i < (n - k) * k; ++i) b.a.push_back(rng.below(q));
    return build_lattice_from_blocks(q, n, k, b);
}

std::vector<double> sample_laplace_noise(int n, double scale, SplitRng& rng) {
    if (scale < 0) throw std::invalid_argument("noise scale must be >= 0");
    std::vector<double> e(n);
    for (int i = 0; i < n; ++i) e[i] = scale == 0.0 ? 0.0 : rng.laplace(scale);
    return e;
}

ChannelSample sample_channel(long long q, int n, int k, double scale, SplitRng& rng) {
    ChannelSample s;
    s.lattice = sample_lattice(q, n, k, rng);
    s.coeffs.resize(n);
    for (int i = 0; i < n; ++i) s.coeffs[i] = rng.below(q);
    s.sent = s.lattice.map_coeffs(s.coeffs);
    s.noise = sample_laplace_noise(n, scale, rng);
    s.received.resize(n);
    for (int i = 0; i < n; ++i) s.received[i] = static_cast<double>(s.sent[i]) + s.noise[i];
    return s;
}

SplitRng trial_rng(std::uint64_t seed, int k, int trial) {
    return SplitRng(SplitRng::mix(SplitRng::mix(seed, static_cast<std::uint64_t>(k)),
                                  static_cast<std::uint64_t>(trial)));
}

namespace {

TrialRecord run_trial(const ExperimentSpec& spec, int k, int index) {
    TrialRecord rec;
    rec.k = k;
    rec.index = index;
    try {
        SplitRng rng = trial_rng(spec.seed, k, index);
        const ChannelSample sample =
            sample_channel(spec.q, spec.n, k, spec.laplace_scale, rng);
        for (double e : sample.noise) rec.noise_l1 += std::abs(e);

        const BabaiEstimate babai = babai_radius(sample.lattice, sample.received);
        rec.babai = babai.radius;
        rec.babai_bound_ok =
            babai.radius <= 0.5 * k + 0.5 * static_cast<double>(spec.q) * (spec.n - k) + 1e-9;

        const auto t0 = std::chrono::steady_clock::now();
        const DecodeResult res = lee_sphere_decode(sample.lattice, sample.received, spec.decoder);
        const auto t1 = std::chrono::steady_clock::now();
        rec.time_us = std::chrono::duration<double, std::micro>(t1 - t0).count();

        rec.distance = res.distance;
        for (long long c : res.nodes_per_depth) rec.nodes_total += c;
        rec.leaves = res.leaves_tested;
        rec.exact_recovery = res.point && *res.point == sample.sent;
        rec.within_noise = res.point && res.distance <= rec.noise_l1 + 1e-9;
        rec.distance_in_ball = res.point && res.distance <= babai.radius + 1e-9;
        rec.node_bound_ok =
            static_cast<double>(rec.nodes_total) <= expected_node_bound(spec.n, spec.q, k);

        if (spec.oracle_check) {
            const DecodeResult ref = brute_force_cvp(sample.lattice, sample.received);
            if (std::abs(ref.distance - res.distance) > 1e-9) {
                rec.failed = true;
                rec.error = "distance disagrees with brute-force reference";
            }
        }
    } catch (const std::exception& ex) {
        rec.failed = true;
        rec.error = ex.what();
    }
    return rec;
}

AggregateRow aggregate(int k, const std::vector<TrialRecord>& trials, size_t begin, size_t end) {
    AggregateRow row;
    row.k = k;
    std::vector<long long> nodes;
    for (size_t i = begin; i < end; ++i) {
        const TrialRecord& t = trials[i];
        if (t.failed) continue;
        ++row.trials;
        nodes.push_back(t.nodes_total);
        row.mean_nodes += static_cast<double>(t.nodes_total);
        row.mean_distance += t.distance;
        row.exact_recovery_rate += t.exact_recovery ? 1.0 : 0.0;
        row.correct_rate += t.within_noise ? 1.0 : 0.0;
        row.mean_time_us += t.time_us;
    }
    if (row.trials == 0) return row;
    const double count = static_cast<double>(row.trials);
    row.mean_nodes /= count;
    row.mean_distance /= count;
    row.exact_recovery_rate /= count;
    row.correct_rate /= count;
    row.mean_time_us /= count;
    std::sort(nodes.begin(), nodes.end());
    row.median_nodes = static_cast<double>(nodes[(nodes.size() - 1) / 2]);
    row.p95_nodes = static_cast<double>(
        nodes[std::min(nodes.size() - 1, (nodes.size() - 1) * 95 / 100)]);
    return row;
}

}  // namespace

ExperimentResult run_experiment(const ExperimentSpec& spec) {
    if (spec.k_min < 1 || spec.k_max >= spec.n || spec.k_min > spec.k_max)
        throw ShapeError("run_experiment: need 1 <= k_min <= k_max < n");
    if (spec.trials < 1) throw std::invalid_argument("run_experiment: trials must be >= 1");

    const int k_count = spec.k_max - spec.k_min + 1;
    const size_t total = static_cast<size_t>(k_count) * spec.trials;
    ExperimentResult result;
    result.trials.resize(total);

    unsigned workers = spec.threads > 0 ? static_cast<unsigned>(spec.threads)
                                        : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, static_cast<unsigned>(total));

    std::atomic<size_t> cursor{0};
    auto worker = [&]() {
        for (;;) {
            const size_t i = cursor.fetch_add(1);
            if (i >= total) return;
            const int k = spec.k_min + static_cast<int>(i) / spec.trials;
            const int t = static_cast<int>(i) % spec.trials;
            result.trials[i] = run_trial(spec, k, t);
        }
    };
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    for (int k = spec.k_min; k <= spec.k_max; ++k) {
        const size_t begin = static_cast<size_t>(k - spec.k_min) * spec.trials;
        result.rows.push_back(aggregate(k, result.trials, begin, begin + spec.trials));
    }
    return result;
}

}  // namespace leelat

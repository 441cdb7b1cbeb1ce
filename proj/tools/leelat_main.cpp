// Command-line frontend: decode vectors against q-ary lattices, run noise
// simulations, evaluate node/ball counts and volume comparisons, and emit
// the corresponding CSV (optionally SVG) tables.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "leelat/decode.hpp"
#include "leelat/geometry.hpp"
#include "leelat/io.hpp"
#include "leelat/simulate.hpp"
#include "leelat/sphere.hpp"

namespace {

using namespace leelat;

constexpr int kExitDecodeInfeasible = 1;
constexpr int kExitInputError = 2;

std::string format_point(const std::vector<long long>& p) {
    std::ostringstream ss;
    ss << '(';
    for (size_t i = 0; i < p.size(); ++i) ss << (i ? ", " : "") << p[i];
    ss << ')';
    return ss.str();
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw ParseError("cannot open output file '" + path + "'");
    return file;
}

// ----- decode -----

struct DecodeArgs {
    std::string lattice_path;
    std::string vector_text;
    std::string method = "sphere";
    std::string radius = "babai";
    bool no_shrink = false;
    bool trace_nodes = false;
};

int cmd_decode(const DecodeArgs& args) {
    const LatticeInput input = read_lattice_file(args.lattice_path);
    const std::vector<double> r = parse_vector(args.vector_text);
    if (r.size() != static_cast<size_t>(input.lattice.n))
        throw ParseError("vector has " + std::to_string(r.size()) + " coordinates, lattice needs " +
                         std::to_string(input.lattice.n));

    DecodeResult res;
    if (args.method == "code") {
        res = decode_via_code(input.code, input.lattice, r);
    } else if (args.method == "brute") {
        // generator files: the lattice lives in systematized coordinate order
        const std::vector<double> rp = apply_perm(input.code.coord_perm, std::span(r));
        res = brute_force_cvp(input.lattice, rp);
        if (res.point) res.point = invert_perm(input.code.coord_perm, std::span(*res.point));
    } else if (args.method == "sphere") {
        DecodeConfig cfg;
        cfg.shrink_on_improve = !args.no_shrink;
        if (args.radius != "babai") {
            size_t used = 0;
            const double radius = std::stod(args.radius, &used);
            if (used != args.radius.size() || radius < 0)
                throw ParseError("--radius must be 'babai' or a nonnegative number");
            cfg.radius = radius;
        }
        const std::vector<double> rp = apply_perm(input.code.coord_perm, std::span(r));
        res = lee_sphere_decode(input.lattice, rp, cfg);
        if (res.point) res.point = invert_perm(input.code.coord_perm, std::span(*res.point));
    } else {
        throw ParseError("--method must be code, sphere or brute");
    }

    std::cout << "method: " << args.method << '\n';
    if (!res.point) {
        std::cout << "point: none within radius " << args.radius << '\n';
        return kExitDecodeInfeasible;
    }
    std::cout << "point: " << format_point(*res.point) << '\n';
    std::cout << "distance: " << res.distance << '\n';
    if (args.method == "sphere") {
        long long total = 0;
        for (long long c : res.nodes_per_depth) total += c;
        std::cout << "nodes: " << total << '\n';
        std::cout << "leaves: " << res.leaves_tested << '\n';
        if (args.trace_nodes) {
            std::cout << "depth,count\n";
            for (size_t j = 0; j < res.nodes_per_depth.size(); ++j)
                std::cout << j << ',' << res.nodes_per_depth[j] << '\n';
        }
    }
    return 0;
}

// ----- count -----

struct CountArgs {
    int k = 0;
    long long radius = 0;
    bool ball = false;
    bool per_depth = false;
};

int cmd_count(const CountArgs& args) {
    if (args.ball) {
        std::cout << lee_ball_cardinality(args.k, args.radius) << '\n';
        return 0;
    }
    if (args.per_depth) {
        std::cout << "depth,count\n";
        for (int j = 0; j <= args.k; ++j)
            std::cout << j << ',' << lee_ball_cardinality(j, args.radius) << '\n';
    }
    std::cout << exact_node_count(args.k, args.radius) << '\n';
    return 0;
}

// ----- volume -----

struct VolumeArgs {
    int max_n = 30;
    double samples = 1e6;
    std::uint64_t seed = 42;
    std::string out;
    std::string svg;
};

int cmd_volume(const VolumeArgs& args) {
    const CrossoverResult cross =
        crossover_dimension(args.max_n, static_cast<long long>(args.samples), args.seed);
    Csv csv;
    csv.header = {"n", "euclid", "avg_lee", "ratio"};
    for (const VolumeRow& row : cross.table)
        csv.rows.push_back({std::to_string(row.n), format_double(row.euclid),
                            format_double(row.avg_lee), format_double(row.ratio)});
    std::ofstream file;
    write_csv(open_output(file, args.out), csv);
    if (cross.crossover_n > 0)
        std::cerr << "crossover dimension: " << cross.crossover_n << '\n';
    if (!args.svg.empty()) {
        std::ofstream svg(args.svg);
        if (!svg) throw ParseError("cannot open '" + args.svg + "'");
        ChartSeries euclid{"euclidean", {}, {}}, lee{"lee average", {}, {}};
        for (const VolumeRow& row : cross.table) {
            euclid.x.push_back(row.n);
            euclid.y.push_back(row.euclid);
            lee.x.push_back(row.n);
            lee.y.push_back(row.avg_lee);
        }
        write_svg_chart(svg, "ball volume vs dimension", {euclid, lee}, true);
    }
    return 0;
}

// ----- simulate -----

struct SimulateArgs {
    int n = 17;
    long long q = 5;
    std::string k_range = "1:16";
    int trials = 100;
    double scale = 1.0;
    std::uint64_t seed = 42;
    int threads = 0;
    bool no_shrink = false;
    std::string out;
    std::string svg;
};

std::pair<int, int> parse_range(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        const int k = std::stoi(text);
        return {k, k};
    }
    return {std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
}

Csv experiment_csv(const ExperimentResult& result) {
    Csv csv;
    csv.header = {"k",             "trials",       "mean_nodes",
                  "median_nodes",  "p95_nodes",    "mean_distance",
                  "exact_recovery_rate", "correct_rate", "mean_time_us"};
    for (const AggregateRow& row : result.rows)
        csv.rows.push_back({std::to_string(row.k), std::to_string(row.trials),
                            format_double(row.mean_nodes), format_double(row.median_nodes),
                            format_double(row.p95_nodes), format_double(row.mean_distance),
                            format_double(row.exact_recovery_rate),
                            format_double(row.correct_rate), format_double(row.mean_time_us)});
    return csv;
}

int cmd_simulate(const SimulateArgs& args) {
    ExperimentSpec spec;
    spec.n = args.n;
    spec.q = args.q;
    const auto [k_min, k_max] = parse_range(args.k_range);
    spec.k_min = k_min;
    spec.k_max = k_max;
    spec.trials = args.trials;
    spec.laplace_scale = args.scale;
    spec.seed = args.seed;
    spec.threads = args.threads;
    spec.decoder.shrink_on_improve = !args.no_shrink;
    const ExperimentResult result = run_experiment(spec);

    std::ofstream file;
    write_csv(open_output(file, args.out), experiment_csv(result));
    for (const TrialRecord& t : result.trials)
        if (t.failed)
            std::cerr << "trial k=" << t.k << " #" << t.index << " failed: " << t.error << '\n';
    if (!args.svg.empty()) {
        std::ofstream svg(args.svg);
        if (!svg) throw ParseError("cannot open '" + args.svg + "'");
        ChartSeries nodes{"mean visited nodes", {}, {}};
        for (const AggregateRow& row : result.rows) {
            nodes.x.push_back(row.k);
            nodes.y.push_back(row.mean_nodes);
        }
        write_svg_chart(svg, "visited nodes vs code dimension", {nodes}, true);
    }
    return 0;
}

// ----- bench -----

struct BenchArgs {
    int n = 6;
    long long q = 5;
    int k = 3;
    int trials = 50;
    double scale = 1.0;
    std::uint64_t seed = 42;
    std::string out;
};

int cmd_bench(const BenchArgs& args) {
    Csv csv;
    csv.header = {"code_us", "sphere_us"};
    for (int t = 0; t < args.trials; ++t) {
        SplitRng rng = trial_rng(args.seed, args.k, t);
        const ChannelSample sample =
            sample_channel(args.q, args.n, args.k, args.scale, rng);
        const QaryCode code =
            code_from_blocks(args.q, args.n, args.k, sample.lattice.b_block);

        const auto c0 = std::chrono::steady_clock::now();
        const DecodeResult via_code = decode_via_code(code, sample.lattice, sample.received);
        const auto c1 = std::chrono::steady_clock::now();
        const DecodeResult via_sphere = lee_sphere_decode(sample.lattice, sample.received);
        const auto c2 = std::chrono::steady_clock::now();
        if (std::abs(via_code.distance - via_sphere.distance) > 1e-9)
            throw Error("bench: decoders disagree on trial " + std::to_string(t));

        csv.rows.push_back(
            {format_double(std::chrono::duration<double, std::micro>(c1 - c0).count()),
             format_double(std::chrono::duration<double, std::micro>(c2 - c1).count())});
    }
    std::ofstream file;
    write_csv(open_output(file, args.out), csv);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lee-metric decoding toolkit for q-ary lattices"};
    app.require_subcommand(1);

    DecodeArgs dec;
    CLI::App* decode = app.add_subcommand("decode", "decode a received vector");
    decode->add_option("--lattice", dec.lattice_path, "code/blocks file")->required();
    decode->add_option("--r", dec.vector_text, "received vector, space-separated")->required();
    decode->add_option("--method", dec.method, "code | sphere | brute");
    decode->add_option("--radius", dec.radius, "babai or explicit radius (sphere)");
    decode->add_flag("--no-shrink", dec.no_shrink, "keep the radius fixed during the search");
    decode->add_flag("--trace-nodes", dec.trace_nodes, "emit depth,count CSV");

    CountArgs cnt;
    CLI::App* count = app.add_subcommand("count", "node / ball counting");
    count->add_option("--k", cnt.k, "tree depth (or dimension with --ball)")
        ->required()
        ->check(CLI::NonNegativeNumber);
    count->add_option("--R", cnt.radius, "integer radius")->required()->check(CLI::NonNegativeNumber);
    count->add_flag("--ball", cnt.ball, "count ball points instead of tree nodes");
    count->add_flag("--per-depth", cnt.per_depth, "also print the per-depth terms");

    VolumeArgs vol;
    CLI::App* volume = app.add_subcommand("volume", "ball volume comparison table");
    volume->add_option("--max-n", vol.max_n, "largest dimension")->check(CLI::Range(2, 200));
    volume->add_option("--samples", vol.samples, "Monte Carlo samples per dimension")
        ->check(CLI::PositiveNumber);
    volume->add_option("--seed", vol.seed, "sampling seed");
    volume->add_option("--out", vol.out, "output CSV path (default stdout)");
    volume->add_option("--svg", vol.svg, "also write an SVG chart");

    SimulateArgs sim;
    CLI::App* simulate = app.add_subcommand("simulate", "noise-channel decode experiment");
    simulate->add_option("--n", sim.n, "lattice dimension")->check(CLI::Range(2, 64));
    simulate->add_option("--q", sim.q, "modulus")->check(CLI::Range(2LL, 1LL << 20));
    simulate->add_option("--k", sim.k_range, "code dimension or range lo:hi");
    simulate->add_option("--trials", sim.trials, "trials per k")->check(CLI::PositiveNumber);
    simulate->add_option("--scale", sim.scale, "noise scale")->check(CLI::NonNegativeNumber);
    simulate->add_option("--seed", sim.seed, "experiment seed");
    simulate->add_option("--threads", sim.threads, "worker threads (0 = all cores)");
    simulate->add_flag("--no-shrink", sim.no_shrink, "fixed-radius decoding");
    simulate->add_option("--out", sim.out, "output CSV path (default stdout)");
    simulate->add_option("--svg", sim.svg, "also write an SVG chart");

    BenchArgs ben;
    CLI::App* bench = app.add_subcommand("bench", "code vs sphere decoder timing");
    bench->add_option("--n", ben.n, "lattice dimension")->check(CLI::Range(2, 8));
    bench->add_option("--q", ben.q, "modulus")->check(CLI::Range(2LL, 1LL << 20));
    bench->add_option("--k", ben.k, "code dimension")->check(CLI::PositiveNumber);
    bench->add_option("--trials", ben.trials, "instances to time")->check(CLI::PositiveNumber);
    bench->add_option("--scale", ben.scale, "noise scale")->check(CLI::NonNegativeNumber);
    bench->add_option("--seed", ben.seed, "instance seed");
    bench->add_option("--out", ben.out, "output CSV path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (decode->parsed()) return cmd_decode(dec);
        if (count->parsed()) return cmd_count(cnt);
        if (volume->parsed()) return cmd_volume(vol);
        if (simulate->parsed()) return cmd_simulate(sim);
        if (bench->parsed()) return cmd_bench(ben);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return kExitInputError;
    }
    return 0;
}

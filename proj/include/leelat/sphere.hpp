#ifndef LEELAT_SPHERE_HPP
#define LEELAT_SPHERE_HPP

#include <optional>
#include <span>

#include "leelat/decode.hpp"
#include "leelat/lattice.hpp"

namespace leelat {

/// Sphere decoder configuration. radius empty = start from the rounding
/// estimate (always contains a lattice point); explicit radius may exclude
/// every point. shrink_on_improve tightens the ball to each new best
/// distance; keep it off when reproducing exact node-count identities.
struct DecodeConfig {
    std::optional<double> radius;
    bool shrink_on_improve = true;
    bool count_nodes = true;
};

struct BabaiEstimate {
    double radius = 0.0;
    std::vector<long long> point;
};

/// Rounding estimate of the decoding radius: round the first k received
/// coordinates, complete the tail with the per-coordinate minimizers for
/// that rounded prefix, and measure the sum distance. Guaranteed
/// <= k/2 + q(n-k)/2 and the estimate point is a lattice point, so a search
/// with this radius never comes back empty.
BabaiEstimate babai_radius(const QaryLattice& lat, std::span<const double> r);

/// Depth-first enumeration of lattice points within the ball: the first k
/// coordinates range over the integers of the residual budget interval, the
/// remaining ones are forced by the per-coordinate minimizers. Closed-ball
/// semantics. nodes_per_depth[j] counts prefixes that passed the depth-j
/// feasibility test (root = depth 0); leaves_tested counts tail completions.
DecodeResult lee_sphere_decode(const QaryLattice& lat, std::span<const double> r,
                               const DecodeConfig& cfg = {});

/// Number of tree nodes through depth k for an integer receive point and
/// integer radius: sum over depths of the ball cardinalities. Exact.
unsigned long long exact_node_count(int k, long long radius);

/// Upper bound on the expected node total through depth k with the rounding
/// radius: sum _j (j + q(n-j))^j / j!, evaluated in the log domain.
double expected_node_bound(int n, long long q, int k);

}  // namespace leelat

#endif

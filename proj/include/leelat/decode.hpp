#ifndef LEELAT_DECODE_HPP
#define LEELAT_DECODE_HPP

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "leelat/lattice.hpp"
#include "leelat/metrics.hpp"

namespace leelat {

/// Lift of a codeword to the lattice representative closest to a target:
/// point = codeword + q * shifts, coordinate-wise.
struct LiftResult {
    std::vector<long long> point;
    std::vector<long long> shifts;
    double distance = 0.0;
};

/// Outcome of a lattice decode. point is empty when an explicit search
/// radius excluded every lattice point. nodes_per_depth/leaves_tested are
/// filled by the sphere decoder only.
struct DecodeResult {
    std::optional<std::vector<long long>> point;
    double distance = 0.0;
    std::vector<long long> nodes_per_depth;
    long long leaves_tested = 0;
};

struct CodeDecodeResult {
    std::vector<long long> codeword;
    double distance = 0.0;
};

/// Among all representatives z = x + q*w of a codeword, the one minimizing
/// the sum distance to r: shifts[i] = round((r[i] - x[i]) / q).
LiftResult nearest_representative(const ZqVector& x, std::span<const double> r);

/// Scan every codeword for the one closest to the target on the torus.
/// Target coordinates must lie in [0, q). Ties: lexicographically smallest
/// codeword. Capacity-guarded.
CodeDecodeResult exhaustive_code_decode(const QaryCode& c, std::span<const double> target);

/// Pluggable code-level decoding engine for decode_via_code.
using CodeDecoder =
    std::function<CodeDecodeResult(const QaryCode&, std::span<const double>)>;

/// Decode r against the lattice of c: reduce r mod q, decode in the code,
/// lift the winning codeword. Operates in the coordinate system of the
/// supplied generator, so results need no un-permutation.
DecodeResult decode_via_code(const QaryCode& c, const QaryLattice& lat,
                             std::span<const double> r,
                             const CodeDecoder& engine = exhaustive_code_decode);

/// Reference decoder: lift every codeword and keep the global minimizer.
/// Ties: lexicographically smallest lattice point. Requires n <= 8 and
/// q^k <= 100000.
DecodeResult brute_force_cvp(const QaryLattice& lat, std::span<const double> r);

}  // namespace leelat

#endif

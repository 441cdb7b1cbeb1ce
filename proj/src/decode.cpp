#include "leelat/decode.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace leelat {

namespace {

constexpr long long kBruteForceCodewords = 100'000;
constexpr int kBruteForceMaxDim = 8;

bool lex_less(std::span<const long long> a, std::span<const long long> b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

LiftResult nearest_representative(const ZqVector& x, std::span<const double> r) {
    if (x.coords.size() != r.size())
        throw ShapeError("nearest_representative: length mismatch");
    const double q = static_cast<double>(x.q);
    LiftResult out;
    out.point.resize(r.size());
    out.shifts.resize(r.size());
    for (size_t i = 0; i < r.size(); ++i) {
        const long long w = static_cast<long long>(round_half_up((r[i] - x.coords[i]) / q));
        out.shifts[i] = w;
        out.point[i] = x.coords[i] + x.q * w;
        out.distance += std::abs(r[i] - static_cast<double>(out.point[i]));
    }
    return out;
}

CodeDecodeResult exhaustive_code_decode(const QaryCode& c, std::span<const double> target) {
    if (target.size() != static_cast<size_t>(c.n))
        throw ShapeError("exhaustive_code_decode: target length != n");
    for (double t : target)
        if (!(t >= 0.0 && t < static_cast<double>(c.q)))
            throw std::invalid_argument("exhaustive_code_decode: target coordinate outside [0, q)");
    CodeDecodeResult best;
    bool have = false;
    for_each_codeword(c, [&](std::span<const long long>, std::span<const long long> cw) {
        double d = 0.0;
        const double q = static_cast<double>(c.q);
        for (size_t i = 0; i < target.size(); ++i) {
            const double fwd = real_mod(target[i] - static_cast<double>(cw[i]), q);
            d += std::min(fwd, q - fwd);
        }
        if (!have || d < best.distance ||
            (d == best.distance && lex_less(cw, best.codeword))) {
            best.codeword.assign(cw.begin(), cw.end());
            best.distance = d;
            have = true;
        }
        return true;
    });
    return best;
}

DecodeResult decode_via_code(const QaryCode& c, const QaryLattice& lat,
                             std::span<const double> r, const CodeDecoder& engine) {
    if (lat.q != c.q || lat.n != c.n || lat.k != c.k)
        throw ShapeError("decode_via_code: lattice and code dimensions disagree");
    if (r.size() != static_cast<size_t>(c.n))
        throw ShapeError("decode_via_code: received vector length != n");
    std::vector<double> target(r.size());
    for (size_t i = 0; i < r.size(); ++i) target[i] = real_mod(r[i], static_cast<double>(c.q));
    const CodeDecodeResult cd = engine(c, target);
    const LiftResult lift = nearest_representative(ZqVector{c.q, cd.codeword}, r);
    DecodeResult out;
    out.point = lift.point;
    out.distance = lift.distance;
    return out;
}

DecodeResult brute_force_cvp(const QaryLattice& lat, std::span<const double> r) {
    if (r.size() != static_cast<size_t>(lat.n))
        throw ShapeError("brute_force_cvp: received vector length != n");
    if (lat.n > kBruteForceMaxDim)
        throw CapacityError("brute_force_cvp: n > " + std::to_string(kBruteForceMaxDim));
    const QaryCode c = code_from_blocks(lat.q, lat.n, lat.k, lat.b_block);
    if (c.codeword_count() > kBruteForceCodewords)
        throw CapacityError("brute_force_cvp: q^k > " + std::to_string(kBruteForceCodewords));
    DecodeResult best;
    ZqVector cw_vec{lat.q, {}};
    for_each_codeword(c, [&](std::span<const long long>, std::span<const long long> cw) {
        cw_vec.coords.assign(cw.begin(), cw.end());
        LiftResult lift = nearest_representative(cw_vec, r);
        if (!best.point || lift.distance < best.distance ||
            (lift.distance == best.distance && lex_less(lift.point, *best.point))) {
            best.point = std::move(lift.point);
            best.distance = lift.distance;
        }
        return true;
    });
    return best;
}

}  // namespace leelat

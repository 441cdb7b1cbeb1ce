#ifndef LEELAT_RNG_HPP
#define LEELAT_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

namespace leelat {

/// Deterministic random source. Wraps the standardized mt19937_64 engine and
/// derives all variates itself (no std distributions, whose output is
/// implementation-defined), so streams are bit-identical across platforms.
class SplitRng {
  public:
    explicit SplitRng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    /// Uniform in [0, 1), 53-bit resolution.
    double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound) by rejection; bound >= 1.
    long long below(long long bound) {
        const std::uint64_t b = static_cast<std::uint64_t>(bound);
        const std::uint64_t limit = ~0ULL - ~0ULL % b;
        std::uint64_t v;
        do {
            v = eng_();
        } while (v >= limit);
        return static_cast<long long>(v % b);
    }

    /// Zero-mean Laplace variate with the given scale, via inverse CDF.
    double laplace(double scale) {
        double u;
        do {
            u = unit();
        } while (u == 0.0);  // avoid log(0) at the left tail
        const double t = u - 0.5;
        const double mag = -scale * std::log(1.0 - 2.0 * std::abs(t));
        return t < 0 ? -mag : mag;
    }

    /// splitmix64 step over (stream, index): derives independent substream
    /// seeds deterministically.
    static std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
        std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

  private:
    std::mt19937_64 eng_;
};

}  // namespace leelat

#endif

#ifndef LEELAT_LATTICE_HPP
#define LEELAT_LATTICE_HPP

#include <atomic>
#include <functional>
#include <span>
#include <vector>

#include "leelat/metrics.hpp"
#include "leelat/zq.hpp"

namespace leelat {

/// Exhaustive procedures refuse codes with more than this many codewords.
inline constexpr long long kEnumerationCapacity = 1'000'000;

/// Linear code over Z_q given by an n x k generator matrix whose columns
/// span the code. When built from a generator over prime q, the stored
/// b_block/coord_perm describe the equivalent stacked-identity form:
/// permuting coordinates by coord_perm turns the code into
/// { (u, B u mod q) : u in Z_q^k }.
class QaryCode {
  public:
    long long q = 0;
    int n = 0;
    int k = 0;
    ZqMatrix generator;           // n x k, as supplied (entries reduced)
    ZqMatrix b_block;             // (n-k) x k; zero rows when k == n
    std::vector<int> coord_perm;  // coord_perm[i] = original coordinate at position i

    QaryCode() = default;
    QaryCode(long long q_, int n_, int k_, ZqMatrix gen, ZqMatrix b, std::vector<int> perm)
        : q(q_), n(n_), k(k_), generator(std::move(gen)), b_block(std::move(b)),
          coord_perm(std::move(perm)) {}

    QaryCode(const QaryCode& o)
        : q(o.q), n(o.n), k(o.k), generator(o.generator), b_block(o.b_block),
          coord_perm(o.coord_perm), d_cache_(o.d_cache_.load(std::memory_order_relaxed)) {}
    QaryCode& operator=(const QaryCode& o) {
        if (this != &o) {
            q = o.q; n = o.n; k = o.k;
            generator = o.generator; b_block = o.b_block; coord_perm = o.coord_perm;
            d_cache_.store(o.d_cache_.load(std::memory_order_relaxed), std::memory_order_relaxed);
        }
        return *this;
    }

    long long codeword_count() const;  // q^k, throws CapacityError past the guard

    // write-once cache for the minimum Lee distance; -1 = not yet computed
    long long cached_min_distance() const { return d_cache_.load(std::memory_order_acquire); }
    void store_min_distance(long long d) const { d_cache_.store(d, std::memory_order_release); }

  private:
    mutable std::atomic<long long> d_cache_{-1};
};

/// Lattice obtained by lifting a q-ary code: generator has identity in the
/// top-left k x k block, B bottom-left, q*I bottom-right, zeros top-right.
struct QaryLattice {
    long long q = 0;
    int n = 0;
    int k = 0;
    ZqMatrix b_block;   // (n-k) x k
    IntMatrix basis;    // n x n block form

    std::vector<long long> map_coeffs(std::span<const long long> x) const;
    std::vector<double> map_coeffs(std::span<const double> x) const;
};

/// Systematize a generator matrix (prime q) and package it as a code.
QaryCode build_code(const ZqMatrix& g);

/// Code in stacked-identity form given directly by its B block; works for
/// composite q. Pass a 0 x k b_block for k == n.
QaryCode code_from_blocks(long long q, int n, int k, const ZqMatrix& b_block);

/// Assemble the block generator for the lattice of a systematic code.
QaryLattice build_lattice(const QaryCode& c);

/// Same, from raw blocks (accepts composite q).
QaryLattice build_lattice_from_blocks(long long q, int n, int k, const ZqMatrix& b_block);

/// True iff v reduced mod q is a codeword. Prime q decides by solving the
/// generator system; composite q enumerates codewords (capacity-guarded).
bool lattice_contains(const QaryLattice& lat, std::span<const long long> v);

/// Minimum Lee weight over the nonzero codewords, exhaustively. Cached on
/// the code after the first call.
long long min_lee_distance(const QaryCode& c);

/// min(q, d(C)): the smallest Lee norm of a nonzero lattice vector.
long long minimum_norm(const QaryLattice& lat, const QaryCode& c);

/// Visit every codeword as (coefficients, codeword); stops early if the
/// visitor returns false. Enumeration order: coefficient vectors counting
/// up with the last coordinate fastest, so codewords appear in a fixed
/// deterministic order.
void for_each_codeword(const QaryCode& c,
                       const std::function<bool(std::span<const long long>,
                                                std::span<const long long>)>& visit);

}  // namespace leelat

#endif

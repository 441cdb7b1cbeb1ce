#ifndef LEELAT_ZQ_HPP
#define LEELAT_ZQ_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "leelat/errors.hpp"

namespace leelat {

/// Integer matrix with entries reduced to the canonical range [0, q).
/// Row-major storage. All arithmetic is exact.
struct ZqMatrix {
    long long q = 0;
    int rows = 0;
    int cols = 0;
    std::vector<long long> a;  // rows*cols entries, each in [0, q)

    long long& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    long long at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    bool operator==(const ZqMatrix&) const = default;
};

/// Plain integer matrix (entries unrestricted), used for lattice generators.
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<long long> a;

    long long& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    long long at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    bool operator==(const IntMatrix&) const = default;
};

/// a mod q in [0, q).
constexpr long long mod_pos(long long a, long long q) {
    long long m = a % q;
    return m < 0 ? m + q : m;
}

bool is_prime(long long q);

/// Inverse of a modulo prime q. Throws ModulusError if q is not prime,
/// std::domain_error if a == 0 (mod q).
long long mod_inverse(long long a, long long q);

/// Canonicalize an integer matrix modulo q. Throws ModulusError for q < 2,
/// ShapeError for empty or ragged input.
ZqMatrix reduce_mod_q(const std::vector<std::vector<long long>>& m, long long q);
ZqMatrix reduce_mod_q(int rows, int cols, std::span<const long long> entries, long long q);

/// g * x mod q for an n x k matrix and length-k coefficient vector.
std::vector<long long> mul_mod(const ZqMatrix& g, std::span<const long long> x);

struct SystematicForm {
    ZqMatrix matrix;             // n x k, rows permuted so the top k x k block is I_k
    std::vector<int> coord_perm; // coord_perm[i] = original row index placed at position i
};

/// Column-span-preserving reduction of an n x k generator matrix (columns
/// generate the code) to the stacked [identity on top, B below] shape, plus
/// the coordinate (row) permutation that realizes it. Requires prime q and
/// full column rank.
SystematicForm systematic_form(const ZqMatrix& g);

/// Rank of g over the field Z_q (q prime).
int code_rank(const ZqMatrix& g);

/// Solve g * x = v (mod q) for prime q. Returns a coefficient vector, or
/// nullopt when v is not in the column span.
std::optional<std::vector<long long>> solve_membership(const ZqMatrix& g,
                                                       std::span<const long long> v);

/// perm[i] = source index of position i.
std::vector<long long> apply_perm(std::span<const int> perm, std::span<const long long> v);
std::vector<double> apply_perm(std::span<const int> perm, std::span<const double> v);
std::vector<long long> invert_perm(std::span<const int> perm, std::span<const long long> v);
std::vector<double> invert_perm(std::span<const int> perm, std::span<const double> v);

}  // namespace leelat

#endif

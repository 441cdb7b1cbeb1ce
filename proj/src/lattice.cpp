#include "leelat/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace leelat {

namespace {

ZqMatrix empty_b(long long q, int k) { return ZqMatrix{q, 0, k, {}}; }

void check_blocks(long long q, int n, int k, const ZqMatrix& b) {
    if (q < 2) throw ModulusError("modulus must be >= 2, got " + std::to_string(q));
    if (k < 1 || k > n) throw ShapeError("need 1 <= k <= n");
    if (b.rows != n - k || (b.rows > 0 && b.cols != k))
        throw ShapeError("b_block must be (n-k) x k");
    if (b.rows > 0 && b.q != q) throw ShapeError("b_block modulus mismatch");
}

}  // namespace

long long QaryCode::codeword_count() const {
    long long count = 1;
    for (int i = 0; i < k; ++i) {
        if (count > kEnumerationCapacity / q)
            throw CapacityError("q^k exceeds enumeration capacity " +
                                std::to_string(kEnumerationCapacity));
        count *= q;
    }
    return count;
}

QaryCode build_code(const ZqMatrix& g) {
    SystematicForm sf = systematic_form(g);  // rejects non-prime q / rank deficiency
    const int n = g.rows, k = g.cols;
    ZqMatrix b = (k == n) ? empty_b(g.q, k)
                          : ZqMatrix{g.q, n - k, k,
                                     {sf.matrix.a.begin() + static_cast<size_t>(k) * k,
                                      sf.matrix.a.end()}};
    // stored generator: the systematic one mapped back to the caller's
    // coordinate order (same code as g, possibly a different basis of it)
    ZqMatrix gen{g.q, n, k, std::vector<long long>(static_cast<size_t>(n) * k, 0)};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < k; ++j) gen.at(sf.coord_perm[i], j) = sf.matrix.at(i, j);
    return QaryCode(g.q, n, k, std::move(gen), std::move(b), std::move(sf.coord_perm));
}

QaryCode code_from_blocks(long long q, int n, int k, const ZqMatrix& b_block) {
    check_blocks(q, n, k, b_block);
    ZqMatrix gen{q, n, k, std::vector<long long>(static_cast<size_t>(n) * k, 0)};
    for (int i = 0; i < k; ++i) gen.at(i, i) = 1;
    for (int i = 0; i < n - k; ++i)
        for (int j = 0; j < k; ++j) gen.at(k + i, j) = b_block.at(i, j);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    return QaryCode(q, n, k, std::move(gen),
                    b_block.rows == 0 ? empty_b(q, k) : b_block, std::move(perm));
}

QaryLattice build_lattice_from_blocks(long long q, int n, int k, const ZqMatrix& b_block) {
    check_blocks(q, n, k, b_block);
    IntMatrix m{n, n, std::vector<long long>(static_cast<size_t>(n) * n, 0)};
    for (int i = 0; i < k; ++i) m.at(i, i) = 1;
    for (int i = 0; i < n - k; ++i) {
        for (int j = 0; j < k; ++j) m.at(k + i, j) = b_block.at(i, j);
        m.at(k + i, k + i) = q;
    }
    return QaryLattice{q, n, k, b_block.rows == 0 ? empty_b(q, k) : b_block, std::move(m)};
}

QaryLattice build_lattice(const QaryCode& c) {
    return build_lattice_from_blocks(c.q, c.n, c.k, c.b_block);
}

std::vector<long long> QaryLattice::map_coeffs(std::span<const long long> x) const {
    if (x.size() != static_cast<size_t>(n)) throw ShapeError("coefficient vector length != n");
    std::vector<long long> y(n);
    for (int i = 0; i < k; ++i) y[i] = x[i];
    for (int i = 0; i < n - k; ++i) {
        long long acc = q * x[k + i];
        for (int j = 0; j < k; ++j) acc += b_block.at(i, j) * x[j];
        y[k + i] = acc;
    }
    return y;
}

std::vector<double> QaryLattice::map_coeffs(std::span<const double> x) const {
    if (x.size() != static_cast<size_t>(n)) throw ShapeError("coefficient vector length != n");
    std::vector<double> y(n);
    for (int i = 0; i < k; ++i) y[i] = x[i];
    for (int i = 0; i < n - k; ++i) {
        double acc = static_cast<double>(q) * x[k + i];
        for (int j = 0; j < k; ++j) acc += static_cast<double>(b_block.at(i, j)) * x[j];
        y[k + i] = acc;
    }
    return y;
}

void for_each_codeword(const QaryCode& c,
                       const std::function<bool(std::span<const long long>,
                                                std::span<const long long>)>& visit) {
    c.codeword_count();  // capacity check
    std::vector<long long> u(c.k, 0);
    std::vector<long long> cw(c.n);
    for (;;) {
        for (int r = 0; r < c.n; ++r) {
            long long acc = 0;
            for (int j = 0; j < c.k; ++j) acc += c.generator.at(r, j) * u[j] % c.q;
            cw[r] = mod_pos(acc, c.q);
        }
        if (!visit(u, cw)) return;
        int pos = c.k - 1;
        while (pos >= 0 && ++u[pos] == c.q) u[pos--] = 0;
        if (pos < 0) return;
    }
}

bool lattice_contains(const QaryLattice& lat, std::span<const long long> v) {
    if (v.size() != static_cast<size_t>(lat.n)) throw ShapeError("vector length != n");
    std::vector<long long> res(lat.n);
    for (int i = 0; i < lat.n; ++i) res[i] = mod_pos(v[i], lat.q);
    if (is_prime(lat.q)) {
        const QaryCode c = code_from_blocks(lat.q, lat.n, lat.k, lat.b_block);
        return solve_membership(c.generator, res).has_value();
    }
    // Composite q: no field structure, decide by exhaustive codeword scan.
    const QaryCode c = code_from_blocks(lat.q, lat.n, lat.k, lat.b_block);
    bool found = false;
    for_each_codeword(c, [&](std::span<const long long>, std::span<const long long> cw) {
        if (std::equal(cw.begin(), cw.end(), res.begin())) {
            found = true;
            return false;
        }
        return true;
    });
    return found;
}

long long min_lee_distance(const QaryCode& c) {
    const long long cached = c.cached_min_distance();
    if (cached >= 0) return cached;
    long long best = -1;
    for_each_codeword(c, [&](std::span<const long long> u, std::span<const long long> cw) {
        if (std::all_of(u.begin(), u.end(), [](long long x) { return x == 0; })) return true;
        long long w = 0;
        for (long long e : cw) w += std::min(e, c.q - e);
        if (best < 0 || w < best) best = w;
        return true;
    });
    c.store_min_distance(best);
    return best;
}

long long minimum_norm(const QaryLattice& lat, const QaryCode& c) {
    if (lat.q != c.q || lat.n != c.n || lat.k != c.k)
        throw ShapeError("lattice and code dimensions disagree");
    return std::min(lat.q, min_lee_distance(c));
}

}  // namespace leelat

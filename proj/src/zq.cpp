#include "leelat/zq.hpp"

#include <algorithm>
#include <string>

namespace leelat {

bool is_prime(long long q) {
    if (q < 2) return false;
    if (q < 4) return true;
    if (q % 2 == 0) return false;
    for (long long d = 3; d * d <= q; d += 2)
        if (q % d == 0) return false;
    return true;
}

long long mod_inverse(long long a, long long q) {
    if (!is_prime(q)) throw ModulusError("mod_inverse: modulus " + std::to_string(q) + " is not prime");
    a = mod_pos(a, q);
    if (a == 0) throw std::domain_error("mod_inverse: zero has no inverse");
    // extended Euclid
    long long r0 = q, r1 = a, s0 = 0, s1 = 1;
    while (r1 != 0) {
        long long t = r0 / r1;
        r0 -= t * r1;
        std::swap(r0, r1);
        s0 -= t * s1;
        std::swap(s0, s1);
    }
    return mod_pos(s0, q);
}

static void check_modulus(long long q) {
    if (q < 2) throw ModulusError("modulus must be >= 2, got " + std::to_string(q));
}

ZqMatrix reduce_mod_q(int rows, int cols, std::span<const long long> entries, long long q) {
    check_modulus(q);
    if (rows < 1 || cols < 1) throw ShapeError("matrix must have at least one row and one column");
    if (entries.size() != static_cast<size_t>(rows) * cols)
        throw ShapeError("entry count does not match dimensions");
    ZqMatrix m{q, rows, cols, {}};
    m.a.reserve(entries.size());
    for (long long e : entries) m.a.push_back(mod_pos(e, q));
    return m;
}

ZqMatrix reduce_mod_q(const std::vector<std::vector<long long>>& m, long long q) {
    check_modulus(q);
    if (m.empty() || m[0].empty()) throw ShapeError("matrix must have at least one row and one column");
    const size_t cols = m[0].size();
    std::vector<long long> flat;
    flat.reserve(m.size() * cols);
    for (const auto& row : m) {
        if (row.size() != cols) throw ShapeError("ragged matrix rows");
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return reduce_mod_q(static_cast<int>(m.size()), static_cast<int>(cols), flat, q);
}

std::vector<long long> mul_mod(const ZqMatrix& g, std::span<const long long> x) {
    if (x.size() != static_cast<size_t>(g.cols)) throw ShapeError("mul_mod: dimension mismatch");
    std::vector<long long> out(g.rows, 0);
    for (int r = 0; r < g.rows; ++r) {
        long long acc = 0;
        for (int c = 0; c < g.cols; ++c) acc += g.at(r, c) * mod_pos(x[c], g.q) % g.q;
        out[r] = mod_pos(acc, g.q);
    }
    return out;
}

namespace {

// Row-reduce a rows x cols matrix over prime q in place, returning pivot
// column indices in order. Gauss-Jordan with first-nonzero pivoting.
std::vector<int> rref(ZqMatrix& m) {
    std::vector<int> pivots;
    int lead = 0;
    for (int col = 0; col < m.cols && lead < m.rows; ++col) {
        int piv = -1;
        for (int r = lead; r < m.rows; ++r)
            if (m.at(r, col) != 0) { piv = r; break; }
        if (piv < 0) continue;
        if (piv != lead)
            for (int c = 0; c < m.cols; ++c) std::swap(m.at(piv, c), m.at(lead, c));
        const long long inv = mod_inverse(m.at(lead, col), m.q);
        for (int c = 0; c < m.cols; ++c) m.at(lead, c) = m.at(lead, c) * inv % m.q;
        for (int r = 0; r < m.rows; ++r) {
            if (r == lead || m.at(r, col) == 0) continue;
            const long long f = m.at(r, col);
            for (int c = 0; c < m.cols; ++c)
                m.at(r, c) = mod_pos(m.at(r, c) - f * m.at(lead, c), m.q);
        }
        pivots.push_back(col);
        ++lead;
    }
    return pivots;
}

ZqMatrix transpose(const ZqMatrix& m) {
    ZqMatrix t{m.q, m.cols, m.rows, std::vector<long long>(m.a.size())};
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) t.at(c, r) = m.at(r, c);
    return t;
}

}  // namespace

SystematicForm systematic_form(const ZqMatrix& g) {
    if (!is_prime(g.q))
        throw ModulusError("systematic_form: requires prime modulus, got " + std::to_string(g.q));
    const int n = g.rows, k = g.cols;
    // Work on the k x n transpose: rows span the code, coordinates are columns.
    ZqMatrix t = transpose(g);
    const std::vector<int> pivots = rref(t);
    if (static_cast<int>(pivots.size()) < k)
        throw RankError("systematic_form: generator has column rank " +
                        std::to_string(pivots.size()) + " < " + std::to_string(k));
    // Coordinate order: pivot columns first, remaining columns in input order.
    std::vector<int> perm = pivots;
    std::vector<bool> used(n, false);
    for (int p : pivots) used[p] = true;
    for (int c = 0; c < n; ++c)
        if (!used[c]) perm.push_back(c);

    ZqMatrix sys{g.q, n, k, std::vector<long long>(static_cast<size_t>(n) * k, 0)};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < k; ++j) sys.at(i, j) = t.at(j, perm[i]);
    return SystematicForm{std::move(sys), std::move(perm)};
}

int code_rank(const ZqMatrix& g) {
    if (!is_prime(g.q))
        throw ModulusError("code_rank: requires prime modulus, got " + std::to_string(g.q));
    ZqMatrix t = transpose(g);
    return static_cast<int>(rref(t).size());
}

std::optional<std::vector<long long>> solve_membership(const ZqMatrix& g,
                                                       std::span<const long long> v) {
    if (!is_prime(g.q))
        throw ModulusError("solve_membership: requires prime modulus, got " + std::to_string(g.q));
    if (v.size() != static_cast<size_t>(g.rows))
        throw ShapeError("solve_membership: vector length " + std::to_string(v.size()) +
                         " != " + std::to_string(g.rows));
    const int n = g.rows, k = g.cols;
    // Augmented system [g | v], eliminated over Z_q.
    ZqMatrix aug{g.q, n, k + 1, std::vector<long long>(static_cast<size_t>(n) * (k + 1), 0)};
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < k; ++c) aug.at(r, c) = g.at(r, c);
        aug.at(r, k) = mod_pos(v[r], g.q);
    }
    const std::vector<int> pivots = rref(aug);
    std::vector<long long> x(k, 0);
    int row = 0;
    for (int p : pivots) {
        if (p == k) return std::nullopt;  // pivot in the augmented column: inconsistent
        x[p] = aug.at(row, k);
        ++row;
    }
    return x;
}

std::vector<long long> apply_perm(std::span<const int> perm, std::span<const long long> v) {
    std::vector<long long> out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = v[perm[i]];
    return out;
}

std::vector<double> apply_perm(std::span<const int> perm, std::span<const double> v) {
    std::vector<double> out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = v[perm[i]];
    return out;
}

std::vector<long long> invert_perm(std::span<const int> perm, std::span<const long long> v) {
    std::vector<long long> out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[perm[i]] = v[i];
    return out;
}

std::vector<double> invert_perm(std::span<const int> perm, std::span<const double> v) {
    std::vector<double> out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[perm[i]] = v[i];
    return out;
}

}  // namespace leelat

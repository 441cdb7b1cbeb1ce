#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "leelat/zq.hpp"
#include "oracles.hpp"

using namespace leelat;

TEST_CASE("reduce_mod_q canonicalizes entries") {
    const ZqMatrix m = reduce_mod_q({{13, -1}}, 13);
    CHECK(m.a == std::vector<long long>{0, 12});
    CHECK(reduce_mod_q({{1, 5}}, 13).a == std::vector<long long>{1, 5});
    CHECK(reduce_mod_q({{-6}}, 13).a == std::vector<long long>{7});
}

TEST_CASE("reduce_mod_q rejects bad input") {
    CHECK_THROWS_AS(reduce_mod_q({{1}}, 1), ModulusError);
    CHECK_THROWS_AS(reduce_mod_q({{1}}, 0), ModulusError);
    CHECK_THROWS_AS(reduce_mod_q({{1, 2}, {3}}, 5), ShapeError);
    CHECK_THROWS_AS(reduce_mod_q(std::vector<std::vector<long long>>{}, 5), ShapeError);
}

TEST_CASE("reduce_mod_q is idempotent") {
    SplitRng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const int rows = 1 + static_cast<int>(rng.below(4));
        const int cols = 1 + static_cast<int>(rng.below(4));
        const long long q = 2 + rng.below(12);
        std::vector<long long> entries(static_cast<size_t>(rows) * cols);
        for (auto& e : entries) e = rng.below(2001) - 1000;
        const ZqMatrix once = reduce_mod_q(rows, cols, entries, q);
        const ZqMatrix twice = reduce_mod_q(rows, cols, once.a, q);
        CHECK(once == twice);
        for (long long e : once.a) {
            CHECK(e >= 0);
            CHECK(e < q);
        }
    }
}

TEST_CASE("systematic_form on the worked generators") {
    SUBCASE("already systematic single column") {
        const auto sf = systematic_form(reduce_mod_q({{1}, {5}}, 13));
        CHECK(sf.matrix.a == std::vector<long long>{1, 5});
        CHECK(sf.coord_perm == std::vector<int>{0, 1});
    }
    SUBCASE("identity stays put") {
        const ZqMatrix id = reduce_mod_q({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 5);
        const auto sf = systematic_form(id);
        CHECK(sf.matrix == id);
    }
    SUBCASE("scaling to unit pivot") {
        const auto sf = systematic_form(reduce_mod_q({{2}, {3}}, 5));
        CHECK(sf.matrix.a == std::vector<long long>{1, 4});
        // both generate the same five codewords
        CHECK(oracles::span_set(sf.matrix) == oracles::span_set(reduce_mod_q({{2}, {3}}, 5)));
    }
}

TEST_CASE("systematic_form errors") {
    CHECK_THROWS_AS(systematic_form(reduce_mod_q({{1}, {2}}, 4)), ModulusError);
    CHECK_THROWS_AS(systematic_form(reduce_mod_q({{2, 4}, {1, 2}}, 5)), RankError);
}

TEST_CASE("systematic_form preserves the codeword set up to the returned permutation") {
    SplitRng rng(29);
    const long long primes[] = {2, 3, 5, 7, 11, 13};
    int done = 0;
    while (done < 60) {
        const long long q = primes[rng.below(6)];
        const int n = 2 + static_cast<int>(rng.below(3));
        const int k = 1 + static_cast<int>(rng.below(n));
        double words = 1;
        for (int i = 0; i < k; ++i) words *= static_cast<double>(q);
        if (words > 1e5) continue;
        ZqMatrix g{q, n, k, {}};
        for (int i = 0; i < n * k; ++i) g.a.push_back(rng.below(q));
        SystematicForm sf;
        try {
            sf = systematic_form(g);
        } catch (const RankError&) {
            continue;
        }
        // permutation is a bijection on coordinates
        std::vector<bool> seen(n, false);
        for (int p : sf.coord_perm) {
            CHECK(!seen[p]);
            seen[p] = true;
        }
        // un-permute the systematic rows and compare spans exhaustively
        ZqMatrix back{q, n, k, std::vector<long long>(static_cast<size_t>(n) * k, 0)};
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < k; ++j) back.at(sf.coord_perm[i], j) = sf.matrix.at(i, j);
        CHECK(oracles::span_set(back) == oracles::span_set(g));
        // top block of the systematic matrix is the identity
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) CHECK(sf.matrix.at(i, j) == (i == j ? 1 : 0));
        ++done;
    }
}

TEST_CASE("code_rank") {
    CHECK(code_rank(reduce_mod_q({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 5)) == 3);
    CHECK(code_rank(reduce_mod_q({{1}, {5}}, 13)) == 1);
    CHECK(code_rank(reduce_mod_q({{2, 4}, {1, 2}}, 5)) == 1);
    CHECK_THROWS_AS(code_rank(reduce_mod_q({{1}}, 6)), ModulusError);

    // rank r means the span has exactly q^r elements
    SplitRng rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const long long q = trial % 2 ? 3 : 5;
        const int n = 2 + static_cast<int>(rng.below(2));
        const int k = 1 + static_cast<int>(rng.below(2));
        ZqMatrix g{q, n, k, {}};
        for (int i = 0; i < n * k; ++i) g.a.push_back(rng.below(q));
        const int r = code_rank(g);
        double expect = 1;
        for (int i = 0; i < r; ++i) expect *= static_cast<double>(q);
        CHECK(static_cast<double>(oracles::span_set(g).size()) == expect);
    }
}

TEST_CASE("solve_membership on the worked code") {
    const ZqMatrix g = reduce_mod_q({{1}, {5}}, 13);
    const auto x = solve_membership(g, std::vector<long long>{12, 8});
    REQUIRE(x.has_value());
    CHECK(*x == std::vector<long long>{12});
    const auto zero = solve_membership(g, std::vector<long long>{0, 0});
    REQUIRE(zero.has_value());
    CHECK(*zero == std::vector<long long>{0});
    CHECK_FALSE(solve_membership(g, std::vector<long long>{0, 1}).has_value());
    CHECK_THROWS_AS(solve_membership(g, std::vector<long long>{1, 2, 3}), ShapeError);
}

TEST_CASE("solve_membership reconstructs every image") {
    SplitRng rng(101);
    for (int trial = 0; trial < 80; ++trial) {
        const long long q = trial % 2 ? 7 : 5;
        const int n = 2 + static_cast<int>(rng.below(3));
        const int k = 1 + static_cast<int>(rng.below(2));
        ZqMatrix g{q, n, k, {}};
        for (int i = 0; i < n * k; ++i) g.a.push_back(rng.below(q));
        std::vector<long long> coeff(k);
        for (auto& c : coeff) c = rng.below(q);
        const std::vector<long long> v = mul_mod(g, coeff);
        const auto solved = solve_membership(g, v);
        REQUIRE(solved.has_value());
        CHECK(mul_mod(g, *solved) == v);
    }
}

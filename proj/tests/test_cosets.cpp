#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "constacode/bigint.hpp"
#include "constacode/cosets.hpp"

using namespace constacode;

TEST_CASE("cyclotomic cosets mod 80 base 3") {
    CHECK(cyclotomic_coset(0, 3, 80) == std::vector<std::int64_t>{0});
    CHECK(cyclotomic_coset(1, 3, 80) == std::vector<std::int64_t>{1, 3, 9, 27});
    CHECK_THROWS_AS(cyclotomic_coset(1, 3, 81), NotCoprime);
    std::mt19937_64 rng(0);
    std::uniform_int_distribution<std::int64_t> dist(0, 79);
    for (int t = 0; t < 100; ++t) {
        const std::int64_t i = dist(rng);
        CHECK(cyclotomic_coset(i, 3, 80) == cyclotomic_coset(i * 3 % 80, 3, 80));
    }
}

TEST_CASE("coset tables partition Z_M and sizes divide ord_M(q)") {
    for (auto [q, M] : {std::pair<std::int64_t, std::int64_t>{3, 80}, {5, 24}, {2, 255}, {7, 48}, {3, 10000}}) {
        const CosetTable t = CosetTable::build(q, M);
        const std::int64_t ord = order_mod(q, M);
        std::set<std::int64_t> seen;
        std::int64_t total = 0;
        for (std::int64_t leader : t.leaders()) {
            const auto c = t.coset(leader);
            CHECK(*std::min_element(c.begin(), c.end()) == leader);
            CHECK(ord % static_cast<std::int64_t>(c.size()) == 0);
            total += static_cast<std::int64_t>(c.size());
            for (auto x : c) {
                CHECK(!seen.count(x));
                seen.insert(x);
                CHECK(t.leader_of(x) == leader);
            }
        }
        CHECK(total == M);
    }
}

TEST_CASE("ord_{rn}(q) formula against direct computation") {
    for (std::int64_t q : {3, 4, 5, 7, 9}) {
        for (std::int64_t n = 2; n <= 120; ++n) {
            if (std::gcd(q, n) != 1) continue;
            const std::int64_t ell = order_mod(q, n);
            if (ell > 12) continue;  // keep q^ell in range
            for (std::int64_t r = 2; r <= q - 1; ++r) {
                if ((q - 1) % r != 0) continue;
                const std::int64_t qe = ipow(q, ell);
                const std::int64_t formula = r / std::gcd((qe - 1) / n, r) * ell;
                CHECK(order_mod(q, r * n) == formula);
            }
        }
    }
}

TEST_CASE("gamma_one leaders and degree accounting") {
    const auto g80 = gamma_one(3, 80, 2);
    CHECK(std::find(g80.begin(), g80.end(), 1) != g80.end());
    CHECK(std::find(g80.begin(), g80.end(), 0) == g80.end());
    const CosetTable t80 = CosetTable::build(3, 80);
    std::int64_t total = 0;
    for (auto i : g80) total += t80.coset_size(i);
    CHECK(total == 40);  // deg(x^40 + 1)

    const auto g24 = gamma_one(5, 24, 2);
    const CosetTable t24 = CosetTable::build(5, 24);
    total = 0;
    for (auto i : g24) total += t24.coset_size(i);
    CHECK(total == 12);

    CHECK_THROWS_AS(gamma_one(4, 63, 2), BadDivisor);
}

TEST_CASE("digit weights") {
    CHECK(wt_q(80, 3, 4) == 8);  // all digits q-1
    CHECK(wt(80, 3, 4) == 4);
    CHECK(wt(13, 3, 3) == 3);    // 13 = 111_3
    CHECK(wt_q(13, 3, 3) == 3);
    CHECK_THROWS_AS(wt(81, 3, 4), OutOfRange);
    CHECK_THROWS_AS(wt_q(-1, 3, 4), OutOfRange);
    // wt_q(N - i) = (q-1)m - wt_q(i)
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<std::int64_t> dist(1, 79);
    for (int t = 0; t < 100; ++t) {
        const std::int64_t i = dist(rng);
        CHECK(wt_q(80 - i, 3, 4) == 8 - wt_q(i, 3, 4));
    }
}

TEST_CASE("defining set of the first family") {
    const DefiningSet d1 = defining_set_cprime(3, 4, 2, 1);
    CHECK(d1.size() == 4);
    CHECK(d1.indices == std::vector<std::int64_t>{1, 3, 9, 27});

    const DefiningSet d4 = defining_set_cprime(3, 4, 2, 4);
    CHECK(d4.size() == 40);  // every residue = 1 mod 2 covered: the zero code
    for (std::int64_t i = 1; i < 80; i += 2) CHECK(d4.contains(i));

    CHECK(defining_set_cprime(5, 2, 2, 1).size() == 4);

    CHECK_THROWS_AS(defining_set_cprime(4, 3, 2, 1), BadDivisor);
    CHECK_THROWS_AS(defining_set_cprime(3, 4, 2, 0), EllOutOfRange);
    CHECK_THROWS_AS(defining_set_cprime(3, 4, 2, 5), EllOutOfRange);
}

TEST_CASE("first-family size formula for ell <= m-1") {
    for (std::int64_t q : {3, 4, 5}) {
        for (std::int64_t m = 2; m <= 4; ++m) {
            if (ipow(q, m) > 1024) continue;
            for (std::int64_t r = 2; r < q; ++r) {
                if ((q - 1) % r != 0) continue;
                for (std::int64_t ell = 1; ell <= m - 1; ++ell) {
                    std::int64_t expect = 0;
                    for (std::int64_t i = 1; i <= ell; ++i)
                        expect += static_cast<std::int64_t>(binomial(m, i)) * ipow(q - 1, i) / r;
                    CHECK(defining_set_cprime(q, m, r, ell).size() == expect);
                }
            }
        }
    }
}

TEST_CASE("defining set of the second family") {
    const DefiningSet d = defining_set_c(3, 3, 2, 3);
    CHECK(d.size() == 3);  // k = 13 - 3 = 10
    for (std::int64_t i : d.indices) {
        CHECK(wt_q(i, 3, 3) < 3);
        CHECK(wt_q(i, 3, 3) % 2 == 1);
    }
    // ell <= r-2: all residues with wt_q = 1 mod r, the zero code
    const DefiningSet z = defining_set_c(3, 4, 2, 0);
    std::int64_t expect = 0;
    for (std::int64_t i = 0; i < 80; ++i)
        if (wt_q(i, 3, 4) % 2 == 1) ++expect;
    CHECK(z.size() == expect);
    CHECK(z.size() == 40);
    // normalization: (3,4,2,4) and (3,4,2,3) give identical sets
    CHECK(defining_set_c(3, 4, 2, 4).indices == defining_set_c(3, 4, 2, 3).indices);

    CHECK_THROWS_AS(defining_set_c(3, 4, 2, 7), EllOutOfRange);
    CHECK_THROWS_AS(defining_set_c(5, 2, 3, 1), BadDivisor);
}

TEST_CASE("defining sets are q-closed and congruent mod r") {
    for (const DefiningSet& d :
         {defining_set_cprime(3, 4, 2, 2), defining_set_c(5, 2, 2, 3), defining_set_c(4, 3, 3, 2)}) {
        for (std::int64_t i : d.indices) {
            CHECK(d.contains(i * d.q % d.modulus));
            CHECK(i % d.r == 1 % d.r);
        }
    }
}

TEST_CASE("normalization of the second family over small grids") {
    for (std::int64_t q : {3, 5, 4, 7}) {
        for (std::int64_t m = 2; m <= 3; ++m) {
            if (ipow(q, m) > 400) continue;
            for (std::int64_t r = 2; r <= q - 1; ++r) {
                if ((q - 1) % r != 0) continue;
                for (std::int64_t ell = r - 1; ell < (q - 1) * m - 1; ++ell) {
                    const std::int64_t ell1 = ell / r, ell0 = ell % r;
                    if (ell0 == r - 1) continue;
                    if (ell1 == 0) continue;
                    const std::int64_t ell2 = ell1 - 1;
                    CHECK(defining_set_c(q, m, r, ell).indices ==
                          defining_set_c(q, m, r, r * ell2 + r - 1).indices);
                }
            }
        }
    }
}

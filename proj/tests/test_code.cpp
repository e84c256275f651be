#include <doctest.h>

#include <random>

#include "constacode/analysis.hpp"
#include "constacode/code.hpp"
#include "constacode/families.hpp"

using namespace constacode;

namespace {

ConstacyclicCode negacyclic_3_4(std::int64_t ell) { return cprime(3, 4, 2, ell); }

std::int64_t word_weight(const Word& w) {
    std::int64_t c = 0;
    for (auto x : w) c += x != 0;
    return c;
}

}  // namespace

TEST_CASE("from_generator endpoints") {
    auto F = default_field(3, 4);
    const Subfield s = F->subfield(1);
    const FieldElement lambda = -F->one();  // order 2, n = 40
    const ConstacyclicCode full = from_generator(Polynomial::one(s), lambda, 40);
    CHECK(full.k() == 40);
    const ConstacyclicCode zero = from_generator(Polynomial::x_n_minus(s, 40, lambda), lambda, 40);
    CHECK(zero.k() == 0);
    const ConstacyclicCode c = from_generator(minimal_poly(1, s), lambda, 40);
    CHECK(c.k() == 36);
    CHECK(c.r() == 2);
    // x^2 - 1 does not divide x^40 + 1
    CHECK_THROWS_AS(from_generator(Polynomial::from_symbols(s, {2, 0, 1}), lambda, 40), NotADivisorOfXnMinusLambda);
}

TEST_CASE("generator times check equals x^n - lambda") {
    for (const ConstacyclicCode& c : {negacyclic_3_4(1), cfamily(5, 2, 2, 3), cfamily(4, 3, 3, 2), dilix(3, 3, 1)}) {
        const Polynomial prod = c.generator() * c.check();
        CHECK(prod == Polynomial::x_n_minus(c.subfield(), c.n(), c.lambda()));
    }
}

TEST_CASE("dual dimensions, biduality, orthogonality") {
    const ConstacyclicCode c = negacyclic_3_4(1);
    const ConstacyclicCode d = dual(c);
    CHECK(d.n() == 40);
    CHECK(d.k() == 4);
    CHECK(d.lambda() == c.lambda().inverse());
    CHECK(code_equal(dual(d), c));

    const auto G = generator_matrix(c).rows();
    const auto H = generator_matrix(d).rows();
    const auto tabs = SymbolTables::get(c.subfield());
    for (const Word& g : G)
        for (const Word& h : H) {
            std::uint8_t acc = 0;
            for (std::size_t i = 0; i < g.size(); ++i) acc = tabs->a(acc, tabs->m(g[i], h[i]));
            CHECK(acc == 0);
        }

    // dual of the full space is the zero code
    auto F = default_field(3, 4);
    const Subfield s = F->subfield(1);
    const ConstacyclicCode full = from_generator(Polynomial::one(s), -F->one(), 40);
    CHECK(dual(full).k() == 0);
}

TEST_CASE("BCH lower bound") {
    CHECK(bch_lower_bound(negacyclic_3_4(1)) >= 3);  // matches the run formula at ell = 1
    // code with empty defining set: the full space
    auto F = default_field(3, 4);
    const Subfield s = F->subfield(1);
    const ConstacyclicCode full = from_generator(Polynomial::one(s), -F->one(), 40);
    CHECK(bch_lower_bound(full) == 1);
    // second family: bound at least the closed-form run length
    const ConstacyclicCode c = cfamily(5, 3, 2, 5);
    CHECK(bch_lower_bound(c) >= ((5 - 1) * ipow(5, 3 - 1 - 1) - 2) / 2 + 1);  // = 10
}

TEST_CASE("restriction of cyclic codes to constacyclic length 40") {
    auto F = default_field(3, 4);
    const Subfield s = F->subfield(1);
    const Polynomial mb = minimal_poly(1, s);
    const Polynomial xm1 = Polynomial::from_symbols(s, {2, 1});

    SUBCASE("g = M_b") {
        const Restriction r = restrict_cyclic(mb, 2);
        CHECK(r.g_underline == mb);
        CHECK(r.ind == std::vector<std::int64_t>{1});
    }
    SUBCASE("g = (x-1) M_b") {
        const Restriction r = restrict_cyclic(xm1 * mb, 2);
        CHECK(r.g_underline == mb);
        CHECK(r.ind == std::vector<std::int64_t>{0, 1});
    }
    SUBCASE("g = (x^40 - 1) M_b") {
        const Restriction r = restrict_cyclic(Polynomial::x_n_minus(s, 40, F->one()) * mb, 2);
        CHECK(r.g_underline == mb);
        CHECK(r.ind == std::vector<std::int64_t>{0, 1});
    }
    SUBCASE("non-divisor rejected") {
        // (x-1)^2 has a repeated root, so it cannot divide x^80 - 1
        CHECK_THROWS_AS(restrict_cyclic(Polynomial::from_symbols(s, {1, 1, 1}), 2), NotADivisor);
    }
}

TEST_CASE("encode, membership, constacyclic shift closure") {
    const ConstacyclicCode c = negacyclic_3_4(2);
    const Word zero_msg(static_cast<std::size_t>(c.k()), 0);
    CHECK(word_weight(encode(c, zero_msg)) == 0);

    std::mt19937_64 rng(0);
    std::uniform_int_distribution<int> sym(0, 2);
    const auto tabs = SymbolTables::get(c.subfield());
    const std::uint8_t lam = static_cast<std::uint8_t>(c.subfield().index_of(c.lambda()));
    for (int t = 0; t < 1000; ++t) {
        Word msg(static_cast<std::size_t>(c.k()));
        for (auto& x : msg) x = static_cast<std::uint8_t>(sym(rng));
        const Word cw = encode(c, msg);
        CHECK(contains(c, cw));
        // (c_0..c_{n-1}) in C  =>  (lambda c_{n-1}, c_0, .., c_{n-2}) in C
        Word shifted(cw.size());
        shifted[0] = tabs->m(lam, cw.back());
        std::copy(cw.begin(), cw.end() - 1, shifted.begin() + 1);
        CHECK(contains(c, shifted));
    }
    CHECK_THROWS_AS(encode(c, Word(3, 0)), LengthMismatch);
}

TEST_CASE("code equality by row space") {
    const ConstacyclicCode c = negacyclic_3_4(1);
    CHECK(code_equal(c, c));
    CHECK(!code_equal(c, dual(c)));
    CHECK_THROWS_AS(code_equal(c, cfamily(5, 2, 2, 3)), ShapeMismatch);
    // the self-dual [62, 31] code equals its dual as a row space
    const ConstacyclicCode sd = cfamily(5, 3, 2, 5);
    CHECK(code_equal(sd, dual(sd)));
}

TEST_CASE("trace representation generates exactly the code") {
    // zero coefficients give the zero word
    const ConstacyclicCode d1 = dual(cprime(5, 2, 2, 1));
    const auto leaders = d1.nonzero_leaders();
    CHECK(word_weight(trace_codeword(d1, std::vector<FieldElement>(leaders.size(), d1.field()->zero()))) == 0);

    // full generation over GF(25)^2: every trace word lies in the code built
    // from the reciprocal check polynomial
    REQUIRE(leaders.size() == 2);
    const FiniteField* F = d1.field();
    for (std::int64_t l1 = -1; l1 < 24; ++l1)
        for (std::int64_t l2 = -1; l2 < 24; ++l2) {
            std::vector<FieldElement> a{l1 < 0 ? F->zero() : F->from_log(l1), l2 < 0 ? F->zero() : F->from_log(l2)};
            CHECK(contains(d1, trace_codeword(d1, a)));
        }

    // span of trace words matches the code dimension on three small instances
    for (const ConstacyclicCode& code : {dual(cprime(5, 2, 2, 1)), cfamily(3, 3, 2, 3), cprime(3, 4, 2, 1)}) {
        const auto ls = code.nonzero_leaders();
        const FiniteField* FF = code.field();
        const std::int64_t N = FF->order();
        std::vector<Word> rows;
        for (std::size_t j = 0; j < ls.size(); ++j) {
            const std::int64_t mj = static_cast<std::int64_t>(cyclotomic_coset(ls[j], code.q(), N).size());
            const std::int64_t sub_ord = ipow(code.q(), mj) - 1;
            for (std::int64_t su = 0; su < mj; ++su) {
                std::vector<FieldElement> a(ls.size(), FF->zero());
                a[j] = FF->from_log((N / sub_ord) * (su + 1) % N);
                rows.push_back(trace_codeword(code, a));
            }
        }
        const GeneratorMatrix span(SymbolTables::get(code.subfield()), code.n(), std::move(rows));
        CHECK(span.rank() == code.k());
        CHECK(code_equal(code, span));
    }
}

TEST_CASE("trace coefficients outside GF(q^m_j) are rejected") {
    // the cyclic code with zeros of digit weight 1 keeps 0 among its
    // nonzeros; 0 sits in a singleton coset, so a_j must lie in GF(3)
    const ConstacyclicCode c = dilix(3, 3, 1);
    const auto leaders = c.nonzero_leaders();
    bool checked = false;
    for (std::size_t j = 0; j < leaders.size() && !checked; ++j) {
        const std::int64_t mj =
            static_cast<std::int64_t>(cyclotomic_coset(leaders[j], 3, c.field()->order()).size());
        if (mj < 3) {
            std::vector<FieldElement> a(leaders.size(), c.field()->zero());
            a[j] = c.field()->generator();  // generator of GF(3^3) is not in GF(3^mj)
            CHECK_THROWS_AS(trace_codeword(c, a), WrongSubfield);
            checked = true;
        }
    }
    CHECK(checked);
}

TEST_CASE("residue code equals the restriction") {
    auto F = default_field(3, 4);
    const Subfield s = F->subfield(1);
    const Polynomial mb = minimal_poly(1, s);

    SUBCASE("zero cyclic code") {
        const ConstacyclicCode z = from_generator(Polynomial::x_n_minus(s, 80, F->one()), F->one(), 80);
        CHECK(residue_code(z, 2).k() == 0);
    }
    SUBCASE("item 1: negacyclic [40, 36]") {
        const ConstacyclicCode cyc = from_generator(mb, F->one(), 80);
        const ConstacyclicCode res = residue_code(cyc, 2);
        CHECK(res.n() == 40);
        CHECK(res.k() == 36);
        CHECK(res.generator() == mb);
    }
    SUBCASE("random cyclic codes vs the gcd restriction") {
        std::mt19937_64 rng(11);
        const CosetTable tab = CosetTable::build(3, 80);
        for (int t = 0; t < 10; ++t) {
            Polynomial g = Polynomial::one(s);
            for (std::int64_t leader : tab.leaders())
                if (rng() % 3 == 0) g = g * minimal_poly(leader, s);
            const Restriction restr = restrict_cyclic(g, 2);
            if (restr.g_underline.is_one() || restr.g_underline.degree() == 40) continue;
            const ConstacyclicCode cyc = from_generator(g, F->one(), 80);
            const ConstacyclicCode res = residue_code(cyc, 2);
            const ConstacyclicCode expect = from_generator(restr.g_underline, F->from_log(40), 40);
            CHECK(code_equal(res, expect));
        }
    }
    SUBCASE("length not divisible") {
        const ConstacyclicCode cyc = from_generator(mb, F->one(), 80);
        CHECK_THROWS_AS(residue_code(cyc, 3), LengthNotDivisible);
    }
}

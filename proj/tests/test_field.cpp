#include <doctest.h>

#include <random>

#include "constacode/field.hpp"

using namespace constacode;

namespace {

// trial division by every monic polynomial of degree 1..deg/2 over Z_p;
// independent of the library's irreducibility test
bool reducible_by_trial_division(std::int64_t p, const std::vector<std::int64_t>& f) {
    const int deg = static_cast<int>(f.size()) - 1;
    for (int d = 1; 2 * d <= deg; ++d) {
        std::int64_t count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (std::int64_t code = 0; code < count; ++code) {
            std::vector<std::int64_t> g(static_cast<std::size_t>(d + 1), 0);
            g[static_cast<std::size_t>(d)] = 1;
            std::int64_t t = code;
            for (int i = 0; i < d; ++i) {
                g[static_cast<std::size_t>(i)] = t % p;
                t /= p;
            }
            // long division f mod g
            std::vector<std::int64_t> r(f);
            while (static_cast<int>(r.size()) - 1 >= d) {
                const std::int64_t c = r.back();
                if (c != 0) {
                    const std::size_t off = r.size() - g.size();
                    for (std::size_t i = 0; i < g.size(); ++i)
                        r[off + i] = ((r[off + i] - c * g[i]) % p + p) % p;
                }
                r.pop_back();
                while (!r.empty() && r.back() == 0) r.pop_back();
                if (r.empty()) break;
            }
            if (r.empty()) return true;
        }
    }
    return false;
}

}  // namespace

TEST_CASE("reference field GF(81) with modulus x^4+2x^3+2") {
    auto F = FiniteField::build(3, 4, {2, 0, 0, 2, 1});
    CHECK(F->size() == 81);
    CHECK(F->order() == 80);
    const FieldElement b = F->generator();
    CHECK(b.multiplicative_order() == 80);
    // b is a root of the modulus: b^4 + 2 b^3 + 2 = 0
    const FieldElement v = b.pow(4) + F->from_prime_int(2) * b.pow(3) + F->from_prime_int(2);
    CHECK(v.is_zero());
}

TEST_CASE("reducible modulus is rejected") {
    // oracle first: confirm x^4+x^3+2x^2+1 really is reducible over GF(3)
    const std::vector<std::int64_t> f{1, 0, 2, 1, 1};
    REQUIRE(reducible_by_trial_division(3, f));
    CHECK_THROWS_AS(FiniteField::build(3, 4, f), NotIrreducible);
}

TEST_CASE("prime field GF(2)") {
    auto F = FiniteField::build(2, 1, {1, 1});
    CHECK(F->size() == 2);
    CHECK(F->generator() == F->one());
    CHECK(F->one() + F->one() == F->zero());
}

TEST_CASE("construction rejections are named distinctly") {
    CHECK_THROWS_AS(FiniteField::build(4, 2, {1, 1, 1}), NotPrime);
    CHECK_THROWS_AS(FiniteField::build(3, 2, {1, 1, 2}), NotMonic);
    // x^4+x^3+x^2+x+1 is irreducible over GF(2) but its root has order 5
    CHECK_THROWS_AS(FiniteField::build(2, 4, {1, 1, 1, 1, 1}), NotPrimitive);
    CHECK_THROWS_AS(FiniteField::build(2, 21, std::vector<std::int64_t>(22, 1)), FieldTooLarge);
}

TEST_CASE("subfield enumeration of GF(3) inside GF(81)") {
    auto F = default_field(3, 4);
    const Subfield s = F->subfield(1);
    CHECK(s.q == 3);
    CHECK(s.step == 40);
    CHECK(s.omega() == F->from_log(40));
    // omega has order 2, exponents work mod 80
    CHECK(s.omega() * s.omega() == F->one());
    CHECK(s.contains(F->zero()));
    CHECK(s.contains(s.omega()));
    CHECK(!s.contains(F->generator()));
    CHECK_THROWS_AS(F->subfield(3), NotADivisor);
}

TEST_CASE("whole field as a subfield and GF(4) inside GF(64)") {
    auto F81 = default_field(3, 4);
    const Subfield whole = F81->subfield(4);
    CHECK(whole.q == 81);
    for (std::int64_t log = 0; log < 80; log += 7) CHECK(whole.contains(F81->from_log(log)));

    auto F64 = default_field(2, 6);
    const Subfield s4 = F64->subfield(2);
    CHECK(s4.q == 4);
    CHECK(s4.step == 21);  // (2^6-1)/(2^2-1)
    CHECK(s4.omega() == F64->from_log(21));
}

TEST_CASE("discrete logs respect multiplication") {
    auto F = default_field(5, 2);
    std::mt19937_64 rng(0);
    std::uniform_int_distribution<std::int64_t> dist(0, F->order() - 1);
    for (int t = 0; t < 200; ++t) {
        const FieldElement x = F->from_log(dist(rng)), y = F->from_log(dist(rng));
        CHECK((x * y).log() == (x.log() + y.log()) % F->order());
    }
}

TEST_CASE("x^(p^K) = x and subfield closure under + and *") {
    for (auto [p, K, e] : {std::tuple<int, int, int>{3, 4, 1}, {2, 6, 2}, {5, 2, 1}}) {
        auto F = default_field(p, K);
        const Subfield s = F->subfield(e);
        std::mt19937_64 rng(42);
        std::uniform_int_distribution<std::int64_t> dist(0, s.q - 1);
        for (int t = 0; t < 1000; ++t) {
            const FieldElement x = s.element(dist(rng)), y = s.element(dist(rng));
            CHECK(x.pow(F->size()) == x);
            CHECK(s.contains(x + y));
            CHECK(s.contains(x * y));
        }
    }
}

TEST_CASE("element and symbol printing") {
    auto F = default_field(3, 4);
    CHECK(F->zero().str() == "0");
    CHECK(F->from_log(13).str() == "b^13");
    const Subfield s = F->subfield(1);
    CHECK(s.symbol_str(0) == "0");
    CHECK(s.symbol_str(2) == "w^1");
}

TEST_CASE("field spec strings parse and round-trip") {
    auto F = parse_field_spec("3^4:2,0,0,2,1");
    CHECK(F->spec_string() == "3^4:2,0,0,2,1");
    CHECK(F->size() == 81);
    CHECK_THROWS_AS(parse_field_spec("3^4"), ParseError);
    CHECK_THROWS_AS(parse_field_spec("junk"), ParseError);
}

TEST_CASE("registry fields match the reference moduli") {
    CHECK(default_field(5, 2)->spec_string() == "5^2:2,4,1");
    CHECK(default_field(5, 3)->spec_string() == "5^3:3,3,0,1");
    CHECK(default_field(3, 3)->spec_string() == "3^3:1,2,0,1");
    CHECK(default_field(7, 2)->spec_string() == "7^2:3,6,1");
    CHECK(default_field(2, 4)->spec_string() == "2^4:1,1,0,0,1");
    CHECK(default_field(2, 8)->spec_string() == "2^8:1,0,1,1,1,0,0,0,1");
    CHECK(default_field(2, 10)->spec_string() == "2^10:1,1,1,1,0,1,1,0,0,0,1");
    // non-registry sizes fall back to a primitive-modulus search
    auto F = default_field(11, 2);
    CHECK(F->generator().multiplicative_order() == 120);
}

TEST_CASE("prime power decomposition") {
    std::int64_t p;
    int e;
    CHECK(prime_power(8, p, e));
    CHECK(p == 2);
    CHECK(e == 3);
    CHECK(prime_power(49, p, e));
    CHECK(p == 7);
    CHECK(!prime_power(12, p, e));
    CHECK(!prime_power(1, p, e));
}

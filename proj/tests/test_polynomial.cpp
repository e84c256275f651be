#include <doctest.h>

#include <random>

#include "constacode/cosets.hpp"
#include "constacode/polynomial.hpp"

using namespace constacode;

namespace {

Polynomial random_poly(const Subfield& s, int deg, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::int64_t> dist(0, s.q - 1);
    std::vector<FieldElement> c;
    for (int i = 0; i < deg; ++i) c.push_back(s.element(dist(rng)));
    c.push_back(s.element(1 + dist(rng) % (s.q - 1)));
    return Polynomial(s, std::move(c));
}

}  // namespace

TEST_CASE("minimal polynomial of b is the field modulus") {
    auto F = default_field(3, 4);
    const Subfield s = F->subfield(1);
    const Polynomial m1 = minimal_poly(1, s);
    CHECK(m1.degree() == 4);
    CHECK(m1.symbols() == std::vector<std::int64_t>{2, 0, 0, 2, 1});  // x^4+2x^3+2
    CHECK(minimal_poly(0, s).symbols() == std::vector<std::int64_t>{2, 1});  // x - 1
    CHECK(minimal_poly_of_zero(s) == Polynomial::x(s));
}

TEST_CASE("minimal polynomial over a coset of size 3 in GF(27)") {
    auto F = default_field(3, 3);
    const Subfield s = F->subfield(1);
    const Polynomial m2 = minimal_poly(2, s);
    CHECK(m2.degree() == 3);  // coset {2, 6, 18}
    for (std::int64_t j : {2, 6, 18}) CHECK(m2(F->from_log(j)).is_zero());
    for (const FieldElement& c : m2.coeffs()) CHECK(s.contains(c));
    CHECK(m2.coeffs().back() == F->one());
}

TEST_CASE("minimal polynomials multiply to x^(q^K - 1) - 1") {
    for (auto [p, K, e] : {std::tuple<int, int, int>{3, 4, 1}, {2, 6, 2}, {3, 3, 1}, {5, 2, 1}, {3, 6, 1}}) {
        auto F = default_field(p, K);
        const Subfield s = F->subfield(e);
        const CosetTable tab = CosetTable::build(s.q, F->order());
        Polynomial prod = Polynomial::one(s);
        for (std::int64_t leader : tab.leaders()) prod = prod * minimal_poly(leader, s);
        CHECK(prod == Polynomial::x_n_minus(s, F->order(), F->one()));
    }
}

TEST_CASE("minimal_poly(i) = minimal_poly(i q mod N)") {
    auto F = default_field(3, 4);
    const Subfield s = F->subfield(1);
    for (std::int64_t i : {1, 2, 5, 7, 11, 40, 53}) CHECK(minimal_poly(i, s) == minimal_poly(i * 3 % 80, s));
}

TEST_CASE("gcd basics over GF(3)") {
    auto F = default_field(3, 4);
    const Subfield s = F->subfield(1);
    const Polynomial f = Polynomial::from_symbols(s, {1, 2, 0, 2});  // arbitrary, leading w^1
    CHECK(poly_gcd(f, Polynomial::zero(s)) == f.monic());
    // gcd(x^2 - 1, x - 1) = x + 2 = x - 1 (monic) over GF(3)
    const Polynomial a = Polynomial::from_symbols(s, {2, 0, 1});
    const Polynomial b = Polynomial::from_symbols(s, {2, 1});
    CHECK(poly_gcd(a, b) == b);
}

TEST_CASE("gcd of a factor-set product with x^40 + 1") {
    // both sides built from minimal polynomials of the odd cosets mod 80
    auto F = default_field(3, 4);
    const Subfield s = F->subfield(1);
    const std::vector<std::int64_t> leaders = gamma_one(3, 80, 2);
    Polynomial part = Polynomial::one(s);
    for (std::size_t i = 0; i < leaders.size() / 2; ++i) part = part * minimal_poly(leaders[i], s);
    const Polynomial xn_lambda = Polynomial::x_n_minus(s, 40, -F->one());  // x^40 + 1
    CHECK(poly_gcd(part, xn_lambda) == part.monic());
}

TEST_CASE("divmod identity and errors") {
    auto F = default_field(5, 2);
    const Subfield s = F->subfield(1);
    std::mt19937_64 rng(7);
    for (int t = 0; t < 50; ++t) {
        const Polynomial a = random_poly(s, 9, rng), b = random_poly(s, 4, rng);
        const auto [q, r] = poly_divmod(a, b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
    }
    CHECK_THROWS_AS(poly_divmod(random_poly(s, 3, rng), Polynomial::zero(s)), DivisionByZeroPoly);
}

TEST_CASE("reciprocal check polynomial") {
    auto F = default_field(3, 4);
    const Subfield s = F->subfield(1);
    // x - 1 is self-reciprocal
    const Polynomial xm1 = Polynomial::from_symbols(s, {2, 1});
    CHECK(reciprocal_check_poly(xm1) == xm1);
    // x^2 + x + 2 reverses to 2x^2 + x + 1, scaled by 2^{-1} = 2: x^2 + 2x + 2
    const Polynomial h = Polynomial::from_symbols(s, {2, 1, 1});
    CHECK(reciprocal_check_poly(h).symbols() == std::vector<std::int64_t>{2, 2, 1});
    // involution up to monic scaling
    std::mt19937_64 rng(3);
    for (int t = 0; t < 20; ++t) {
        Polynomial p = random_poly(s, 5, rng);
        if (p.coeff(0).is_zero()) continue;
        CHECK(reciprocal_check_poly(reciprocal_check_poly(p)) == p.monic());
    }
    CHECK_THROWS_AS(reciprocal_check_poly(Polynomial::x(s)), ZeroConstantTerm);
}

TEST_CASE("coefficients outside the designated subfield are rejected") {
    auto F = default_field(2, 6);
    const Subfield s4 = F->subfield(2);
    CHECK_THROWS_AS(Polynomial(s4, {F->one(), F->generator()}), WrongSubfield);
}

TEST_CASE("evaluation uses the ambient field") {
    auto F = default_field(3, 4);
    const Subfield s = F->subfield(1);
    const Polynomial m1 = minimal_poly(1, s);
    CHECK(m1(F->generator()).is_zero());
    CHECK(!m1(F->one()).is_zero());
}

#include "constacode/polynomial.hpp"

#include <sstream>

namespace constacode {

Polynomial::Polynomial(Subfield sf, std::vector<FieldElement> coeffs) : sf_(sf), c_(std::move(coeffs)) {
    trim();
    check_subfield();
}

Polynomial Polynomial::from_symbols(Subfield sf, const std::vector<std::int64_t>& symbols) {
    std::vector<FieldElement> c;
    c.reserve(symbols.size());
    for (auto s : symbols) c.push_back(sf.element(s));
    return Polynomial(sf, std::move(c));
}

Polynomial Polynomial::x_n_minus(Subfield sf, std::int64_t n, FieldElement lambda) {
    std::vector<FieldElement> c(static_cast<std::size_t>(n + 1), sf.field->zero());
    c[0] = -lambda;
    c[static_cast<std::size_t>(n)] = sf.field->one();
    return Polynomial(sf, std::move(c));
}

void Polynomial::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

void Polynomial::check_subfield() const {
    for (const auto& x : c_)
        if (!sf_.contains(x)) throw WrongSubfield("coefficient outside GF(" + std::to_string(sf_.q) + ")");
}

bool Polynomial::is_one() const { return c_.size() == 1 && c_[0] == sf_.field->one(); }

FieldElement Polynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return sf_.field->zero();
    return c_[static_cast<std::size_t>(i)];
}

std::vector<std::int64_t> Polynomial::symbols() const {
    std::vector<std::int64_t> s;
    s.reserve(c_.size());
    for (const auto& x : c_) s.push_back(sf_.index_of(x));
    return s;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    if (sf_ != rhs.sf_) throw FieldMismatch("polynomials over different subfields");
    std::vector<FieldElement> c(std::max(c_.size(), rhs.c_.size()), sf_.field->zero());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(static_cast<int>(i)) + rhs.coeff(static_cast<int>(i));
    return Polynomial(sf_, std::move(c));
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
    if (sf_ != rhs.sf_) throw FieldMismatch("polynomials over different subfields");
    std::vector<FieldElement> c(std::max(c_.size(), rhs.c_.size()), sf_.field->zero());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(static_cast<int>(i)) - rhs.coeff(static_cast<int>(i));
    return Polynomial(sf_, std::move(c));
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    if (sf_ != rhs.sf_) throw FieldMismatch("polynomials over different subfields");
    if (is_zero() || rhs.is_zero()) return zero(sf_);
    std::vector<FieldElement> c(c_.size() + rhs.c_.size() - 1, sf_.field->zero());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < rhs.c_.size(); ++j) c[i + j] = c[i + j] + c_[i] * rhs.c_[j];
    }
    return Polynomial(sf_, std::move(c));
}

Polynomial Polynomial::operator*(FieldElement s) const {
    std::vector<FieldElement> c(c_);
    for (auto& x : c) x = x * s;
    return Polynomial(sf_, std::move(c));
}

bool Polynomial::operator==(const Polynomial& rhs) const {
    if (c_.size() != rhs.c_.size()) return false;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!(c_[i] == rhs.c_[i])) return false;
    return true;
}

FieldElement Polynomial::operator()(FieldElement x) const {
    FieldElement acc = sf_.field->zero();
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    if (c_.back() == sf_.field->one()) return *this;
    return *this * c_.back().inverse();
}

std::string Polynomial::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << sf_.symbol_str(sf_.index_of(c_[i]));
        if (i == 1) os << "*x";
        if (i > 1) os << "*x^" << i;
    }
    return os.str();
}

PolyDivMod poly_divmod(const Polynomial& a, const Polynomial& b) {
    if (a.subfield() != b.subfield()) throw FieldMismatch("polynomials over different subfields");
    if (b.is_zero()) throw DivisionByZeroPoly("division by the zero polynomial");
    const Subfield sf = a.subfield();
    std::vector<FieldElement> rem(a.coeffs());
    const int db = b.degree();
    const FieldElement lead_inv = b.coeff(db).inverse();
    if (a.degree() < db) return {Polynomial::zero(sf), a};
    std::vector<FieldElement> quo(static_cast<std::size_t>(a.degree() - db + 1), sf.field->zero());
    for (int i = a.degree(); i >= db; --i) {
        const FieldElement c = rem[static_cast<std::size_t>(i)] * lead_inv;
        if (c.is_zero()) continue;
        quo[static_cast<std::size_t>(i - db)] = c;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(i - db + j)] = rem[static_cast<std::size_t>(i - db + j)] - c * b.coeff(j);
    }
    return {Polynomial(sf, std::move(quo)), Polynomial(sf, std::move(rem))};
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
    if (a.subfield() != b.subfield()) throw FieldMismatch("polynomials over different subfields");
    while (!b.is_zero()) {
        Polynomial r = poly_divmod(a, b).remainder;
        a = b;
        b = r;
    }
    return a.monic();
}

Polynomial reciprocal_check_poly(const Polynomial& h) {
    if (h.is_zero() || h.coeff(0).is_zero()) throw ZeroConstantTerm("h(0) must be nonzero");
    const int k = h.degree();
    std::vector<FieldElement> c(static_cast<std::size_t>(k + 1), h.subfield().field->zero());
    const FieldElement h0inv = h.coeff(0).inverse();
    for (int i = 0; i <= k; ++i) c[static_cast<std::size_t>(k - i)] = h.coeff(i) * h0inv;
    return Polynomial(h.subfield(), std::move(c));
}

Polynomial minimal_poly(std::int64_t i, const Subfield& sf) {
    const FiniteField* F = sf.field;
    const std::int64_t N = F->order();
    i = ((i % N) + N) % N;
    // expand in the big field over the coset {i, iq, iq^2, ...} mod N
    std::vector<FieldElement> c{F->one()};
    std::int64_t j = i;
    do {
        const FieldElement root = F->from_log(j);
        std::vector<FieldElement> next(c.size() + 1, F->zero());
        for (std::size_t t = 0; t < c.size(); ++t) {
            next[t + 1] = next[t + 1] + c[t];
            next[t] = next[t] - c[t] * root;
        }
        c = std::move(next);
        j = j * sf.q % N;
    } while (j != i);
    return Polynomial(sf, std::move(c));  // subfield membership enforced here
}

}  // namespace constacode

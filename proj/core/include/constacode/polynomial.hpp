#ifndef CONSTACODE_POLYNOMIAL_HPP
#define CONSTACODE_POLYNOMIAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "constacode/field.hpp"

namespace constacode {

/// Dense polynomial with all coefficients in one designated subfield GF(q)
/// of the ambient field.  Coefficients are ascending; the zero polynomial is
/// the empty sequence, so the leading coefficient is always nonzero.
class Polynomial {
   public:
    explicit Polynomial(Subfield sf) : sf_(sf) {}
    Polynomial(Subfield sf, std::vector<FieldElement> coeffs);

    static Polynomial zero(Subfield sf) { return Polynomial(sf); }
    static Polynomial one(Subfield sf) { return Polynomial(sf, {sf.field->one()}); }
    static Polynomial x(Subfield sf) { return Polynomial(sf, {sf.field->zero(), sf.field->one()}); }
    /// c0 + c1 x + ... from subfield symbol indices.
    static Polynomial from_symbols(Subfield sf, const std::vector<std::int64_t>& symbols);
    /// x^n - lambda.
    static Polynomial x_n_minus(Subfield sf, std::int64_t n, FieldElement lambda);

    const Subfield& subfield() const { return sf_; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const;
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    FieldElement coeff(int i) const;                                 // zero beyond degree
    const std::vector<FieldElement>& coeffs() const { return c_; }
    std::vector<std::int64_t> symbols() const;  // subfield indices, ascending

    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;
    Polynomial operator*(FieldElement s) const;
    bool operator==(const Polynomial& rhs) const;
    bool operator!=(const Polynomial& rhs) const { return !(*this == rhs); }

    FieldElement operator()(FieldElement x) const;  // evaluation (in the big field)

    Polynomial monic() const;  // leading coefficient scaled to 1
    std::string str() const;   // "w^0 + w^1*x + ..." style

   private:
    Subfield sf_;
    std::vector<FieldElement> c_;

    void trim();
    void check_subfield() const;
};

/// Quotient and remainder with deg r < deg b.  Throws DivisionByZeroPoly.
struct PolyDivMod {
    Polynomial quotient;
    Polynomial remainder;
};
PolyDivMod poly_divmod(const Polynomial& a, const Polynomial& b);

/// Monic gcd; gcd(f, 0) is the monic scaling of f.
Polynomial poly_gcd(Polynomial a, Polynomial b);

/// h0^{-1} x^k h(1/x) for h with h(0) != 0; throws ZeroConstantTerm.
Polynomial reciprocal_check_poly(const Polynomial& h);

/// Minimal polynomial of b^i over GF(q): prod over the q-cyclotomic coset of
/// i mod (p^K - 1) of (x - b^j).  Monic, irreducible, coefficients in GF(q).
Polynomial minimal_poly(std::int64_t i, const Subfield& sf);

/// Minimal polynomial of the zero element: x.
inline Polynomial minimal_poly_of_zero(const Subfield& sf) { return Polynomial::x(sf); }

}  // namespace constacode

#endif

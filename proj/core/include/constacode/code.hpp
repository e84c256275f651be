#ifndef CONSTACODE_CODE_HPP
#define CONSTACODE_CODE_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "constacode/cosets.hpp"
#include "constacode/matrix.hpp"
#include "constacode/polynomial.hpp"

namespace constacode {

/// A lambda-constacyclic code of length n over GF(q), realized inside the
/// ambient field GF(q^m) with q^m - 1 = r n, r = ord(lambda).
///
/// All zeros of x^n - lambda are powers of a fixed primitive (q^m - 1)-th
/// root of unity `root = b^root_log` with root^n = lambda; the defining set
/// collects the exponents i (all = 1 mod r) with g(root^i) = 0.
class ConstacyclicCode {
   public:
    ConstacyclicCode(Subfield sf, std::int64_t n, FieldElement lambda, Polynomial g, Polynomial h,
                     std::int64_t root_log, std::optional<DefiningSet> defining_set);

    const Subfield& subfield() const { return sf_; }
    const FiniteField* field() const { return sf_.field; }
    std::int64_t q() const { return sf_.q; }
    std::int64_t n() const { return n_; }
    std::int64_t k() const { return n_ - g_.degree(); }
    FieldElement lambda() const { return lambda_; }
    std::int64_t r() const;  // ord(lambda)
    const Polynomial& generator() const { return g_; }
    const Polynomial& check() const { return h_; }
    std::int64_t root_log() const { return root_log_; }
    FieldElement root() const { return sf_.field->from_log(root_log_); }

    bool has_defining_set() const { return D_.has_value(); }
    /// Defining set (computed from the generator's zeros when not supplied).
    const DefiningSet& defining_set() const;

    /// Representatives (coset leaders) of the non-conjugate nonzeros, i.e.
    /// the roots of the check polynomial, as exponents of root.
    std::vector<std::int64_t> nonzero_leaders() const;

   private:
    Subfield sf_;
    std::int64_t n_;
    FieldElement lambda_;
    Polynomial g_, h_;
    std::int64_t root_log_;
    mutable std::optional<DefiningSet> D_;
};

/// Build a code from its generator polynomial; the check polynomial comes
/// from exact division.  Throws NotADivisorOfXnMinusLambda.
ConstacyclicCode from_generator(const Polynomial& g, FieldElement lambda, std::int64_t n,
                                std::optional<std::int64_t> root_log = std::nullopt,
                                std::optional<DefiningSet> defining_set = std::nullopt);

/// Dual code: lambda^{-1}-constacyclic of dimension n-k generated by the
/// reciprocal of the check polynomial.
ConstacyclicCode dual(const ConstacyclicCode& code);

/// BCH bound: 1 + the longest run g(root^{1+reh}) = ... = 0 over consecutive
/// h, maximized over all e with gcd(e, n) = 1 (e < e_cap; 0 means scan all).
/// Returns 1 when the defining set is empty, never more than n.
std::int64_t bch_lower_bound(const ConstacyclicCode& code, std::int64_t e_cap = 0);

/// Restriction of a cyclic code of length rn to length n = rn / r:
/// g_underline = gcd(g_N, x^n - lambda) plus Ind = {i : gcd(g_N, x^n - lambda^i) != 1}.
struct Restriction {
    Polynomial g_underline;
    std::vector<std::int64_t> ind;
};
Restriction restrict_cyclic(const Polynomial& g_N, std::int64_t r);

/// Message encoding (message-poly times g), codeword membership
/// (divisibility by g), and the k x n generator matrix of shifted g's.
Word encode(const ConstacyclicCode& code, const Word& message);
bool contains(const ConstacyclicCode& code, const Word& word);
GeneratorMatrix generator_matrix(const ConstacyclicCode& code);

bool code_equal(const ConstacyclicCode& a, const ConstacyclicCode& b);
bool code_equal(const ConstacyclicCode& a, const GeneratorMatrix& b);

/// Codeword c_t = sum_j Tr_{q^{m_j}/q}(a_j root^{-t i_j}) from one coefficient
/// per non-conjugate nonzero (aligned with nonzero_leaders()).
Word trace_codeword(const ConstacyclicCode& code, const std::vector<FieldElement>& coeffs);

/// {c(x) mod x^n - lambda : c in cyclic} as a constacyclic code of length
/// n = N / r.  Throws LengthNotDivisible.
ConstacyclicCode residue_code(const ConstacyclicCode& cyclic, std::int64_t r);

}  // namespace constacode

#endif

#ifndef CONSTACODE_COSETS_HPP
#define CONSTACODE_COSETS_HPP

#include <cstdint>
#include <vector>

#include "constacode/errors.hpp"

namespace constacode {

/// q-cyclotomic coset of i modulo M: {i, iq, iq^2, ...}, sorted.
/// Requires gcd(q, M) = 1.
std::vector<std::int64_t> cyclotomic_coset(std::int64_t i, std::int64_t q, std::int64_t M);

/// All q-cyclotomic cosets modulo M, with leaders (smallest member of each
/// coset).  Immutable after construction.
class CosetTable {
   public:
    static CosetTable build(std::int64_t q, std::int64_t M);

    std::int64_t q() const { return q_; }
    std::int64_t modulus() const { return M_; }
    const std::vector<std::int64_t>& leaders() const { return leaders_; }
    std::int64_t leader_of(std::int64_t i) const { return leader_[static_cast<std::size_t>(i)]; }
    std::vector<std::int64_t> coset(std::int64_t i) const { return cyclotomic_coset(i, q_, M_); }
    std::int64_t coset_size(std::int64_t i) const;

   private:
    std::int64_t q_ = 0, M_ = 0;
    std::vector<std::int64_t> leaders_;
    std::vector<std::int64_t> leader_;  // residue -> leader of its coset
};

/// Coset leaders mod N that are congruent to 1 mod r, sorted.
/// Requires r | q-1 and gcd(q, N) = 1 (intended use: N = q^m - 1).
std::vector<std::int64_t> gamma_one(std::int64_t q, std::int64_t N, std::int64_t r);

/// Number of nonzero q-adic digits of i (m digits); 0 <= i <= q^m - 1.
std::int64_t wt(std::int64_t i, std::int64_t q, std::int64_t m);

/// Sum of the q-adic digits of i (m digits); 0 <= i <= q^m - 1.
std::int64_t wt_q(std::int64_t i, std::int64_t q, std::int64_t m);

/// Defining set: a subset of Z_N closed under multiplication by q.
struct DefiningSet {
    enum class Family { Cprime, Cfamily, Custom };

    Family family = Family::Custom;
    std::int64_t q = 0, m = 0, r = 1, ell = 0;
    std::int64_t modulus = 0;  // N
    std::vector<std::int64_t> indices;  // sorted
    std::vector<bool> member;           // size N, O(1) membership

    std::int64_t size() const { return static_cast<std::int64_t>(indices.size()); }
    bool contains(std::int64_t i) const { return member[static_cast<std::size_t>(i)]; }

    static DefiningSet custom(std::int64_t N, std::vector<std::int64_t> indices);
};

/// D'(q,m,r,ell) = {i in Z_N : 1 <= wt(i) <= ell, i = 1 mod r}, N = q^m - 1.
/// Requires r | q-1, r > 1, 1 <= ell <= m.
DefiningSet defining_set_cprime(std::int64_t q, std::int64_t m, std::int64_t r, std::int64_t ell);

/// D(q,m,r,ell) = {i in Z_N : wt_q(i) < (q-1)m - ell, wt_q(i) = 1 mod r}.
/// Requires r | q-1, r > 1, 0 <= ell < (q-1)m - 1.
DefiningSet defining_set_c(std::int64_t q, std::int64_t m, std::int64_t r, std::int64_t ell);

/// Multiplicative order of q modulo M (gcd(q, M) = 1).
std::int64_t order_mod(std::int64_t q, std::int64_t M);

}  // namespace constacode

#endif

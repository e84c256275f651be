#ifndef CONSTACODE_FAMILIES_HPP
#define CONSTACODE_FAMILIES_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "constacode/code.hpp"
#include "constacode/weights.hpp"

namespace constacode {

// ---------------------------------------------------------------------------
// the two constacyclic families
// ---------------------------------------------------------------------------

/// Cprime(q, m, r, ell): lambda-constacyclic code of length (q^m - 1)/r whose
/// generator collects the minimal polynomials of b^i over all i with
/// 1 <= wt(i) <= ell, i = 1 mod r.  Requires r | q-1, r > 1, 1 <= ell <= m-1.
/// Pass a field to override the registry modulus.
ConstacyclicCode cprime(std::int64_t q, std::int64_t m, std::int64_t r, std::int64_t ell,
                        std::shared_ptr<const FiniteField> field = nullptr);

/// C(q, m, r, ell): generator over all i with wt_q(i) < (q-1)m - ell,
/// wt_q(i) = 1 mod r.  Requires r | q-1, r > 1, 0 <= ell < (q-1)m - 1.
ConstacyclicCode cfamily(std::int64_t q, std::int64_t m, std::int64_t r, std::int64_t ell,
                         std::shared_ptr<const FiniteField> field = nullptr);

/// Generator polynomial of C(q, m, r, ell)^dual: product of the minimal
/// polynomials of b^i over i with wt_q(i) <= ell, wt_q(i) = r-1 mod r.
/// Requires ell = r*ell1 + r-1 (EllNotCanonical otherwise).
Polynomial cfamily_dual_generator(std::int64_t q, std::int64_t m, std::int64_t r, std::int64_t ell,
                                  std::shared_ptr<const FiniteField> field = nullptr);

/// Closed-form dimensions and bounds.
std::int64_t cprime_dimension(std::int64_t q, std::int64_t m, std::int64_t r, std::int64_t ell);
std::int64_t cprime_bch_formula_lower(std::int64_t q, std::int64_t m, std::int64_t r, std::int64_t ell);
/// Canonical ell per the defining-set normalization: -1 for the zero code,
/// otherwise r*ell2 + r-1 generating the same code.
std::int64_t cfamily_canonical_ell(std::int64_t q, std::int64_t m, std::int64_t r, std::int64_t ell);
std::int64_t cfamily_dimension(std::int64_t q, std::int64_t m, std::int64_t r, std::int64_t ell);
std::int64_t cfamily_dimension_upper(std::int64_t q, std::int64_t m, std::int64_t r, std::int64_t ell);

// ---------------------------------------------------------------------------
// reference codes
// ---------------------------------------------------------------------------

/// Cyclic code of length q^m - 1 with zeros b^a over all 1 <= wt(a) <= h.
/// Requires 1 <= h <= m-1 (HOutOfRange).
ConstacyclicCode dilix(std::int64_t q, std::int64_t m, std::int64_t h,
                       std::shared_ptr<const FiniteField> field = nullptr);
std::int64_t dilix_dimension(std::int64_t q, std::int64_t m, std::int64_t h);

/// Point sequence e, eM, eM^2, ... where M is the companion matrix of the
/// minimal polynomial of b over GF(q).  Construction verifies the
/// isomorphism b^i = <eM^i, (1, b, ..., b^{m-1})> for every generated point.
struct CompanionSequence {
    Subfield sf;
    std::int64_t m = 0;
    std::vector<Word> points;  // rows of length m, GF(q) symbol indices
};
CompanionSequence companion_sequence(std::shared_ptr<const FiniteField> field, std::int64_t q, std::int64_t m,
                                     std::int64_t count);

/// Monomial bases x_1^{i_1}...x_m^{i_m} filtered by degree and congruence.
struct MonomialSpace {
    enum class Variant { M, TildeM, NgrmP, HomogeneousA };
    Variant variant;
    std::int64_t q = 0, m = 0, r = 1, ell = 0;
    std::vector<std::vector<int>> exponents;  // tuples of length m, entries in [0, q-1]

    std::int64_t dim() const { return static_cast<std::int64_t>(exponents.size()); }
};
/// sum = r-1 mod r, sum <= ell, per-variable <= q-1.
MonomialSpace monomial_space_m(std::int64_t q, std::int64_t m, std::int64_t r, std::int64_t ell);
/// sum = ell mod q-1, sum <= ell.
MonomialSpace monomial_space_tilde(std::int64_t q, std::int64_t m, std::int64_t r, std::int64_t ell);
/// sum = 0 mod r, sum <= ell.
MonomialSpace monomial_space_ngrm(std::int64_t q, std::int64_t m, std::int64_t r, std::int64_t ell);
/// Homogeneous of total degree ell, reduced so positive exponents lie in
/// [1, q-1] (congruent mod q-1), then deduplicated.
MonomialSpace monomial_space_homogeneous(std::int64_t q, std::int64_t m, std::int64_t ell);

/// Rows = evaluations of the monomial basis at the point sequence.
GeneratorMatrix evaluation_code(const MonomialSpace& space, const CompanionSequence& points);

/// Nonprimitive generalized Reed-Muller code of length (q^m - 1)/r with
/// ell = (q-1)h + ell0, ell0 = 0 mod r (BadEllDecomposition otherwise).
struct NgrmCode {
    GeneratorMatrix matrix;
    std::int64_t ell = 0, h = 0, ell0 = 0;
    std::int64_t dim_formula = 0;  // |{0 <= j <= n : wt_q(j r) <= ell}|
    std::int64_t d_formula = 0;    // ((q - ell0) q^{m-h-1} - 1)/r
};
NgrmCode ngrm(std::int64_t q, std::int64_t m, std::int64_t r, std::int64_t h, std::int64_t ell0 = 0,
              std::shared_ptr<const FiniteField> field = nullptr);

/// Closed-form parameters of the projective Reed-Muller code PRM(q, m, h),
/// 1 <= h <= (m-1)(q-1).
struct PrmParams {
    std::int64_t n = 0, k = 0, d = 0;
};
PrmParams prm_params(std::int64_t q, std::int64_t m, std::int64_t h);

/// Closed-form weight distribution of PRM(q, m, 2).
WeightDistribution prm2_weight_distribution(std::int64_t q, std::int64_t m);

// ---------------------------------------------------------------------------
// distance certificates and predictions
// ---------------------------------------------------------------------------

/// Codeword of C(q, m, r, ell) of weight (q - ell0 + r - 2) q^{m-1-ell1} / r,
/// where ell = (q-1) ell1 + ell0 with ell0 = r-1 mod r, ell0 >= r-1
/// (EllNotDecomposable otherwise).  Certifies the distance upper bound.
struct DistanceWitness {
    Word codeword;
    std::int64_t weight = 0;
};
DistanceWitness distance_witness(std::int64_t q, std::int64_t m, std::int64_t r, std::int64_t ell,
                                 std::shared_ptr<const FiniteField> field = nullptr);

enum class FamilyTag { Cprime, CprimeDual, Cfamily, CfamilyDual };

/// Closed-form (n, k) plus an exact d where a proven special case applies,
/// otherwise the bound interval.  The rule string names what fired.
struct PredictedParams {
    std::int64_t n = 0, k = 0;
    enum class DKind { Exact, Range, None } dkind = DKind::Range;
    std::int64_t d = -1;
    std::int64_t d_lo = 1, d_hi = -1;  // -1: no upper bound available
    std::string rule;
};
PredictedParams predict_params(FamilyTag family, std::int64_t q, std::int64_t m, std::int64_t r, std::int64_t ell);

/// Count of (x_1..x_t) in [1, q-1]^t with sum = 1 mod r: (q-1)^t / r.
std::int64_t unit_digit_solution_count(std::int64_t q, std::int64_t r, std::int64_t t);

/// Placements of t objects in m cells, no cell holding more than s.
BigInt bounded_placements(std::int64_t t, std::int64_t m, std::int64_t s);

}  // namespace constacode

#endif

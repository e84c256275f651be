#ifndef CONSTACODE_ANALYSIS_HPP
#define CONSTACODE_ANALYSIS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "constacode/bigint.hpp"
#include "constacode/code.hpp"
#include "constacode/weights.hpp"

namespace constacode {

inline constexpr std::int64_t kDefaultEnumerationCap = std::int64_t(1) << 26;

/// Weight distribution by exhaustive enumeration of the smaller of the code
/// and its dual (the dual route goes through the MacWilliams transform).
/// Throws TooLargeToEnumerate when both sides exceed cap.
WeightDistribution weight_distribution(const ConstacyclicCode& code, std::int64_t cap = kDefaultEnumerationCap,
                                       int threads = 0);
WeightDistribution weight_distribution(const GeneratorMatrix& G, std::int64_t cap = kDefaultEnumerationCap,
                                       int threads = 0);

/// MacWilliams transform: distribution of the dual of an [n, k] code with
/// distribution `dist`.  Exact integer arithmetic; throws InvalidDistribution
/// if the input is inconsistent (size, A_0, total != q^k or non-integral result).
WeightDistribution macwilliams(const WeightDistribution& dist, std::int64_t n, std::int64_t k, std::int64_t q);

/// Minimum-distance result with the certificates that produced it.
struct DistanceResult {
    enum class Kind { Exact, Range, None };  // None: zero code, d undefined

    Kind kind = Kind::Range;
    std::int64_t value = -1;  // Exact
    std::int64_t lo = 1;      // Range
    std::int64_t hi = -1;     // Range; -1 when no upper certificate exists

    std::int64_t bch = 0;              // BCH-run lower bound (0 = not computed)
    std::int64_t witness = -1;         // certified upper bound from a codeword
    bool enumerated = false;           // exact value came from enumeration
    std::int64_t sampled_upper = -1;   // empirical, NOT certified
    std::string source;                // "enumeration" | "certificates" | "range"
};

struct MinDistanceOptions {
    std::int64_t cap = kDefaultEnumerationCap;
    int threads = 0;
    std::optional<std::int64_t> upper_hint;  // certified witness weight, if any
    std::int64_t sample_count = 100000;      // random-codeword sampling when stuck
    std::uint64_t seed = 0;
    std::int64_t bch_e_cap = 0;              // 0 = scan every unit e mod n
};

/// Exact when enumeration is feasible under cap or when the BCH lower bound
/// meets a certified upper bound; otherwise a Range.
DistanceResult min_distance(const ConstacyclicCode& code, const MinDistanceOptions& opts = {});

/// Sphere-packing bound, with the refinement for even d.
struct SpherePackingResult {
    bool satisfies = false;                 // sum_{i<=floor((d-1)/2)} C(n,i)(q-1)^i <= q^{n-k}
    bool is_perfect = false;                // equality above
    std::optional<bool> even_refinement;    // only for even d
};
SpherePackingResult sphere_packing_check(std::int64_t n, std::int64_t k, std::int64_t d, std::int64_t q);

/// Largest d that passes the sphere-packing bound (and the even-d refinement)
/// for an [n, k] code over GF(q); a code attaining it is distance-optimal.
std::int64_t sphere_packing_optimal_d(std::int64_t n, std::int64_t k, std::int64_t q);

/// Generator-polynomial equality of the code and its dual.
bool self_dual_check(const ConstacyclicCode& code);

/// Closed-form distribution of Cprime(q, m, (q-1)/2, 1)^dual, split by the
/// parity of m (three weights for odd m, seven for even m).
/// Requires q an odd prime with (q-1)/2 > 1; throws HypothesisViolated.
WeightDistribution table12_closed_form(std::int64_t q, std::int64_t m);

struct Table12Report {
    WeightDistribution closed_form;
    WeightDistribution enumerated;
    bool match = false;
};
/// Enumerates Cprime(q, m, (q-1)/2, 1)^dual and compares with the closed form.
Table12Report table1_table2_check(std::int64_t q, std::int64_t m, std::int64_t cap = kDefaultEnumerationCap,
                                  int threads = 0);

}  // namespace constacode

#endif

#ifndef CONSTACODE_CLI_UTIL_HPP
#define CONSTACODE_CLI_UTIL_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>

#include "constacode/analysis.hpp"
#include "constacode/families.hpp"
#include "constacode/serialize.hpp"

namespace constacode::cli {

using ordered_json = nlohmann::ordered_json;

/// Parsed family spec like "cprime:q=3,m=4,r=2,ell=1".
struct FamilySpec {
    std::string family;  // cprime | c | ngrm | dilix
    std::map<std::string, std::int64_t> args;

    std::int64_t get(const std::string& key) const;
    std::int64_t get_or(const std::string& key, std::int64_t dflt) const;
};

FamilySpec parse_family_spec(const std::string& spec);

/// Analysis knobs shared by the subcommands.
struct AnalyzeOptions {
    std::int64_t cap = kDefaultEnumerationCap;
    int threads = 0;
    std::uint64_t seed = 0;
    bool want_distance = false;
    bool want_weights = false;
    bool want_dual = false;
};

ordered_json distance_to_json(const DistanceResult& r);
ordered_json predicted_to_json(const PredictedParams& p);

/// Witness-certified upper bound for a family-C instance, when the exponent
/// decomposition applies.
std::optional<std::int64_t> witness_upper(const std::string& family, std::int64_t q, std::int64_t m, std::int64_t r,
                                          std::int64_t ell, std::shared_ptr<const FiniteField> field);

/// Construct the code named by a family spec (cprime | c | dilix).
ConstacyclicCode build_family_code(const FamilySpec& spec, std::shared_ptr<const FiniteField> field);

}  // namespace constacode::cli

#endif

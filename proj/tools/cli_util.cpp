#include "cli_util.hpp"

#include <sstream>

namespace constacode::cli {

std::int64_t FamilySpec::get(const std::string& key) const {
    auto it = args.find(key);
    if (it == args.end()) throw ParseError("family spec is missing '" + key + "'");
    return it->second;
}

std::int64_t FamilySpec::get_or(const std::string& key, std::int64_t dflt) const {
    auto it = args.find(key);
    return it == args.end() ? dflt : it->second;
}

FamilySpec parse_family_spec(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos) throw ParseError("family spec must look like cprime:q=3,m=4,r=2,ell=1");
    FamilySpec out;
    out.family = spec.substr(0, colon);
    if (out.family != "cprime" && out.family != "c" && out.family != "ngrm" && out.family != "dilix")
        throw ParseError("unknown family '" + out.family + "'");
    std::istringstream is(spec.substr(colon + 1));
    std::string tok;
    while (std::getline(is, tok, ',')) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos) throw ParseError("expected key=value, got '" + tok + "'");
        try {
            out.args[tok.substr(0, eq)] = std::stoll(tok.substr(eq + 1));
        } catch (const std::exception&) {
            throw ParseError("bad integer in '" + tok + "'");
        }
    }
    return out;
}

ordered_json distance_to_json(const DistanceResult& r) {
    ordered_json j;
    switch (r.kind) {
        case DistanceResult::Kind::Exact:
            j["kind"] = "exact";
            j["d"] = r.value;
            break;
        case DistanceResult::Kind::Range:
            j["kind"] = "range";
            j["lo"] = r.lo;
            if (r.hi >= 0) j["hi"] = r.hi;
            break;
        case DistanceResult::Kind::None:
            j["kind"] = "none";
            j["d"] = nullptr;
            break;
    }
    ordered_json certs;
    certs["bch"] = r.bch;
    if (r.witness >= 0) certs["witness"] = r.witness;
    certs["enumerated"] = r.enumerated;
    if (r.sampled_upper >= 0) certs["sampled_upper_not_certified"] = r.sampled_upper;
    certs["source"] = r.source;
    j["certificates"] = certs;
    return j;
}

ordered_json predicted_to_json(const PredictedParams& p) {
    ordered_json j;
    j["n"] = p.n;
    j["k"] = p.k;
    switch (p.dkind) {
        case PredictedParams::DKind::Exact:
            j["d"] = p.d;
            break;
        case PredictedParams::DKind::Range:
            j["d_lo"] = p.d_lo;
            if (p.d_hi >= 0) j["d_hi"] = p.d_hi;
            break;
        case PredictedParams::DKind::None:
            j["d"] = nullptr;
            break;
    }
    j["rule"] = p.rule;
    return j;
}

std::optional<std::int64_t> witness_upper(const std::string& family, std::int64_t q, std::int64_t m, std::int64_t r,
                                          std::int64_t ell, std::shared_ptr<const FiniteField> field) {
    if (family != "c") return std::nullopt;
    try {
        const std::int64_t ellc = cfamily_canonical_ell(q, m, r, ell);
        if (ellc < 0) return std::nullopt;
        return distance_witness(q, m, r, ellc, std::move(field)).weight;
    } catch (const Error&) {
        return std::nullopt;
    }
}

ConstacyclicCode build_family_code(const FamilySpec& spec, std::shared_ptr<const FiniteField> field) {
    if (spec.family == "cprime")
        return cprime(spec.get("q"), spec.get("m"), spec.get("r"), spec.get("ell"), std::move(field));
    if (spec.family == "c")
        return cfamily(spec.get("q"), spec.get("m"), spec.get("r"), spec.get("ell"), std::move(field));
    if (spec.family == "dilix") return dilix(spec.get("q"), spec.get("m"), spec.get("h"), std::move(field));
    throw ParseError("family '" + spec.family + "' does not name a constacyclic construction");
}

}  // namespace constacode::cli

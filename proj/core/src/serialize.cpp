#include "constacode/serialize.hpp"

#include <nlohmann/json.hpp>

namespace constacode {

using ordered_json = nlohmann::ordered_json;

std::string code_to_json(const ConstacyclicCode& code) {
    ordered_json j;
    j["q"] = code.q();
    j["n"] = code.n();
    j["r"] = code.r();
    j["lambda_log"] = code.lambda().log();
    j["field_spec"] = code.field()->spec_string();
    j["generator_coeffs"] = code.generator().symbols();
    j["k"] = code.k();
    return j.dump();
}

ConstacyclicCode code_from_json(const std::string& json) {
    ordered_json j;
    try {
        j = ordered_json::parse(json);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad code JSON: ") + e.what());
    }
    try {
        const std::int64_t q = j.at("q").get<std::int64_t>();
        const std::int64_t n = j.at("n").get<std::int64_t>();
        const std::int64_t lambda_log = j.at("lambda_log").get<std::int64_t>();
        const auto field = parse_field_spec(j.at("field_spec").get<std::string>());
        std::int64_t p;
        int e;
        if (!prime_power(q, p, e) || p != field->p() || field->K() % e != 0)
            throw ParseError("q is not compatible with the field");
        const Subfield sf = field->subfield(e);
        const Polynomial g = Polynomial::from_symbols(sf, j.at("generator_coeffs").get<std::vector<std::int64_t>>());
        return from_generator(g, field->from_log(lambda_log), n);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad code JSON: ") + e.what());
    }
}

std::string weights_to_json(const WeightDistribution& wd) {
    ordered_json j = ordered_json::object();
    for (std::size_t w = 0; w < wd.counts.size(); ++w)
        if (wd.counts[w] != 0) j[std::to_string(w)] = wd.counts[w].str();
    return j.dump();
}

WeightDistribution weights_from_json(const std::string& json, std::int64_t n, std::int64_t q) {
    WeightDistribution wd;
    wd.n = n;
    wd.q = q;
    wd.counts.assign(static_cast<std::size_t>(n + 1), 0);
    try {
        const ordered_json j = ordered_json::parse(json);
        for (auto it = j.begin(); it != j.end(); ++it) {
            const std::int64_t w = std::stoll(it.key());
            if (w < 0 || w > n) throw ParseError("weight outside [0, n]");
            wd.counts[static_cast<std::size_t>(w)] = BigInt(it.value().get<std::string>());
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad weight JSON: ") + e.what());
    }
    return wd;
}

}  // namespace constacode

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cli_util.hpp"
#include "constacode/enumeration.hpp"
#include "verify.hpp"

using namespace constacode;
using namespace constacode::cli;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitConstruction = 3;
constexpr int kExitAnalysisIncomplete = 4;

std::int64_t env_cap() {
    if (const char* v = std::getenv("CONSTACODE_CAP")) {
        try {
            return std::stoll(v);
        } catch (const std::exception&) {
            std::cerr << "warning: ignoring malformed CONSTACODE_CAP\n";
        }
    }
    return kDefaultEnumerationCap;
}

std::shared_ptr<const FiniteField> field_from_flag(const std::string& field_spec, std::int64_t q, std::int64_t m) {
    if (field_spec.empty()) return field_for_alphabet(q, static_cast<int>(m));
    return parse_field_spec(field_spec);
}

struct AnalysisOutput {
    ordered_json json;
    bool incomplete = false;
};

ordered_json weights_json(const WeightDistribution& wd) { return ordered_json::parse(weights_to_json(wd)); }

// analysis of one constacyclic code: distance, optional weights, optional dual
AnalysisOutput analyze_code(const ConstacyclicCode& code, const std::optional<FamilySpec>& spec,
                            const AnalyzeOptions& opt) {
    AnalysisOutput out;
    out.json["code"] = ordered_json::parse(code_to_json(code));
    std::optional<std::int64_t> hint;
    if (spec && (spec->family == "c" || spec->family == "cprime")) {
        const auto q = spec->get("q"), m = spec->get("m"), r = spec->get("r"), ell = spec->get("ell");
        hint = witness_upper(spec->family, q, m, r, ell, nullptr);
        out.json["predicted"] = predicted_to_json(
            predict_params(spec->family == "c" ? FamilyTag::Cfamily : FamilyTag::Cprime, q, m, r, ell));
    }
    if (opt.want_distance) {
        MinDistanceOptions mopts;
        mopts.cap = opt.cap;
        mopts.threads = opt.threads;
        mopts.seed = opt.seed;
        mopts.upper_hint = hint;
        const DistanceResult res = min_distance(code, mopts);
        out.json["distance"] = distance_to_json(res);
        if (res.kind == DistanceResult::Kind::Range) out.incomplete = true;
    }
    if (opt.want_weights) {
        try {
            out.json["weights"] = weights_json(weight_distribution(code, opt.cap, opt.threads));
        } catch (const TooLargeToEnumerate& e) {
            out.json["weights"] = nullptr;
            out.json["weights_error"] = e.what();
            out.incomplete = true;
        }
    }
    if (opt.want_dual) {
        const ConstacyclicCode d = dual(code);
        ordered_json jd;
        jd["code"] = ordered_json::parse(code_to_json(d));
        if (spec && (spec->family == "c" || spec->family == "cprime"))
            jd["predicted"] = predicted_to_json(
                predict_params(spec->family == "c" ? FamilyTag::CfamilyDual : FamilyTag::CprimeDual, spec->get("q"),
                               spec->get("m"), spec->get("r"), spec->get("ell")));
        if (opt.want_distance) {
            MinDistanceOptions mopts;
            mopts.cap = opt.cap;
            mopts.threads = opt.threads;
            mopts.seed = opt.seed;
            const DistanceResult res = min_distance(d, mopts);
            jd["distance"] = distance_to_json(res);
            if (res.kind == DistanceResult::Kind::Range) out.incomplete = true;
        }
        if (opt.want_weights) {
            try {
                jd["weights"] = weights_json(weight_distribution(d, opt.cap, opt.threads));
            } catch (const TooLargeToEnumerate& e) {
                jd["weights"] = nullptr;
                jd["weights_error"] = e.what();
                out.incomplete = true;
            }
        }
        out.json["dual"] = jd;
    }
    return out;
}

// evaluation codes (ngrm) are analyzed through their generator matrix
AnalysisOutput analyze_ngrm(const FamilySpec& spec, const AnalyzeOptions& opt,
                            std::shared_ptr<const FiniteField> field) {
    const NgrmCode c =
        ngrm(spec.get("q"), spec.get("m"), spec.get("r"), spec.get("h"), spec.get_or("ell0", 0), std::move(field));
    AnalysisOutput out;
    out.json["code"] = {{"family", "ngrm"},
                        {"q", spec.get("q")},
                        {"n", c.matrix.n()},
                        {"k", c.matrix.rank()},
                        {"ell", c.ell},
                        {"dim_formula", c.dim_formula},
                        {"d_formula", c.d_formula}};
    if (opt.want_weights || opt.want_distance) {
        try {
            const WeightDistribution wd = weight_distribution(c.matrix, opt.cap, opt.threads);
            if (opt.want_weights) out.json["weights"] = weights_json(wd);
            if (opt.want_distance) {
                const auto d = wd.min_weight();
                ordered_json jd;
                jd["kind"] = d ? "exact" : "none";
                if (d) jd["d"] = *d;
                jd["certificates"] = {{"enumerated", true}, {"source", "enumeration"}};
                out.json["distance"] = jd;
            }
        } catch (const TooLargeToEnumerate& e) {
            out.json["weights"] = nullptr;
            out.json["weights_error"] = e.what();
            out.incomplete = true;
        }
    }
    return out;
}

int cmd_construct(const std::string& spec_str, const std::string& field_spec) {
    FamilySpec spec;
    try {
        spec = parse_family_spec(spec_str);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    try {
        ordered_json j;
        if (spec.family == "ngrm") {
            const auto field = field_from_flag(field_spec, spec.get("q"), spec.get("m"));
            AnalyzeOptions opt;  // construction only
            j = analyze_ngrm(spec, opt, field).json;
        } else {
            const auto field = field_from_flag(field_spec, spec.get("q"), spec.get("m"));
            const ConstacyclicCode code = build_family_code(spec, field);
            j["code"] = ordered_json::parse(code_to_json(code));
            if (spec.family == "cprime" || spec.family == "c")
                j["predicted"] = predicted_to_json(
                    predict_params(spec.family == "c" ? FamilyTag::Cfamily : FamilyTag::Cprime, spec.get("q"),
                                   spec.get("m"), spec.get("r"), spec.get("ell")));
        }
        std::cout << j.dump() << "\n";
        return kExitOk;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConstruction;
    }
}

int cmd_analyze(const std::string& input, const std::string& field_spec, AnalyzeOptions opt) {
    if (!opt.want_distance && !opt.want_weights) opt.want_distance = true;
    try {
        AnalysisOutput out;
        if (input.find(':') != std::string::npos && input.find('{') == std::string::npos) {
            const FamilySpec spec = parse_family_spec(input);
            const auto field = field_from_flag(field_spec, spec.get("q"), spec.get("m"));
            if (spec.family == "ngrm") {
                out = analyze_ngrm(spec, opt, field);
            } else {
                out = analyze_code(build_family_code(spec, field), spec, opt);
            }
        } else {
            // code record: literal JSON, a file path, or - for stdin
            std::string text = input;
            if (input == "-") {
                std::ostringstream ss;
                ss << std::cin.rdbuf();
                text = ss.str();
            } else if (input.find('{') == std::string::npos) {
                std::ifstream f(input);
                if (!f) throw ParseError("cannot open '" + input + "'");
                std::ostringstream ss;
                ss << f.rdbuf();
                text = ss.str();
            }
            out = analyze_code(code_from_json(text), std::nullopt, opt);
        }
        std::cout << out.json.dump() << "\n";
        return out.incomplete ? kExitAnalysisIncomplete : kExitOk;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConstruction;
    }
}

int cmd_verify(const std::string& suite, bool extended, std::uint64_t seed, std::int64_t cap, int threads,
               const std::string& format) {
    try {
        const RunReport rep = run_verify(suite, extended, seed, cap, threads);
        if (format == "json")
            std::cout << report_to_json(rep) << "\n";
        else
            std::cout << report_to_table(rep);
        return rep.failed == 0 ? kExitOk : kExitVerifyFailure;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

struct Range {
    std::int64_t lo = 0, hi = -1;
    bool given = false;
};

Range parse_range(const std::string& text) {
    Range r;
    r.given = true;
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            r.lo = r.hi = std::stoll(text);
        } else {
            r.lo = std::stoll(text.substr(0, dots));
            r.hi = std::stoll(text.substr(dots + 2));
        }
    } catch (const std::exception&) {
        throw ParseError("bad range '" + text + "'");
    }
    return r;  // hi < lo is an empty range: header-only output
}

int cmd_table(const std::string& family, const std::vector<std::string>& range_args, const std::string& format,
              std::int64_t cap, int threads) {
    if (family != "cprime" && family != "c") {
        std::cerr << "error: table supports the cprime and c families\n";
        return kExitUsage;
    }
    Range rq, rm, rr, rell;
    try {
        for (const std::string& arg : range_args) {
            const auto eq = arg.find('=');
            if (eq == std::string::npos) throw ParseError("expected key=range, got '" + arg + "'");
            const std::string key = arg.substr(0, eq);
            const Range r = parse_range(arg.substr(eq + 1));
            if (key == "q")
                rq = r;
            else if (key == "m")
                rm = r;
            else if (key == "r")
                rr = r;
            else if (key == "ell")
                rell = r;
            else
                throw ParseError("unknown range key '" + key + "'");
        }
        if (!rq.given || !rm.given) throw ParseError("ranges for q and m are required");
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConstruction;
    }

    struct RowOut {
        std::int64_t q, m, r, ell, n, k;
        std::string d, certs, flags;
    };
    std::vector<RowOut> rows;
    for (std::int64_t q = rq.lo; q <= rq.hi; ++q) {
        std::int64_t p;
        int e;
        if (!prime_power(q, p, e)) continue;
        for (std::int64_t m = rm.lo; m <= rm.hi; ++m) {
            if (ipow(q, m) > (std::int64_t(1) << 20)) continue;
            for (std::int64_t r = rr.given ? rr.lo : 2; r <= (rr.given ? rr.hi : q - 1); ++r) {
                if (r < 2 || (q - 1) % r != 0) continue;
                const std::int64_t ell_max = family == "cprime" ? m - 1 : (q - 1) * m - 2;
                for (std::int64_t ell = rell.given ? rell.lo : (family == "cprime" ? 1 : 0);
                     ell <= (rell.given ? std::min(rell.hi, ell_max) : ell_max); ++ell) {
                    try {
                        const ConstacyclicCode code = family == "cprime" ? cprime(q, m, r, ell) : cfamily(q, m, r, ell);
                        MinDistanceOptions mopts;
                        mopts.cap = cap;
                        mopts.threads = threads;
                        mopts.sample_count = 0;
                        mopts.upper_hint = witness_upper(family, q, m, r, ell, nullptr);
                        const DistanceResult res = min_distance(code, mopts);
                        RowOut row{q, m, r, ell, code.n(), code.k(), "", "", ""};
                        if (res.kind == DistanceResult::Kind::Exact) {
                            row.d = std::to_string(res.value);
                            row.certs = res.source;
                            const SpherePackingResult sp = sphere_packing_check(code.n(), code.k(), res.value, q);
                            if (sp.is_perfect)
                                row.flags = "perfect";
                            else if (res.value == sphere_packing_optimal_d(code.n(), code.k(), q))
                                row.flags = "sp-optimal";
                        } else if (res.kind == DistanceResult::Kind::Range) {
                            row.d = "[" + std::to_string(res.lo) + "," +
                                    (res.hi >= 0 ? std::to_string(res.hi) : "?") + "]";
                            row.certs = "bch=" + std::to_string(res.bch) +
                                        (res.witness >= 0 ? ",witness=" + std::to_string(res.witness) : "");
                        } else {
                            row.d = "-";
                            row.certs = "zero-code";
                        }
                        rows.push_back(std::move(row));
                    } catch (const EllOutOfRange&) {
                    } catch (const BadDivisor&) {
                    }
                }
            }
        }
    }

    if (format == "json") {
        ordered_json arr = ordered_json::array();
        for (const RowOut& row : rows)
            arr.push_back({{"family", family},
                           {"q", row.q},
                           {"m", row.m},
                           {"r", row.r},
                           {"ell", row.ell},
                           {"n", row.n},
                           {"k", row.k},
                           {"d", row.d},
                           {"certificates", row.certs},
                           {"flags", row.flags}});
        std::cout << arr.dump() << "\n";
    } else if (format == "csv") {
        std::cout << "family,q,m,r,ell,n,k,d,certificates,flags\n";
        for (const RowOut& row : rows)
            std::cout << family << ',' << row.q << ',' << row.m << ',' << row.r << ',' << row.ell << ',' << row.n
                      << ',' << row.k << ',' << row.d << ',' << row.certs << ',' << row.flags << "\n";
    } else {
        std::printf("%-7s %3s %3s %3s %4s %5s %5s %-12s %-24s %s\n", "family", "q", "m", "r", "ell", "n", "k", "d",
                    "certificates", "flags");
        for (const RowOut& row : rows)
            std::printf("%-7s %3lld %3lld %3lld %4lld %5lld %5lld %-12s %-24s %s\n", family.c_str(),
                        static_cast<long long>(row.q), static_cast<long long>(row.m), static_cast<long long>(row.r),
                        static_cast<long long>(row.ell), static_cast<long long>(row.n),
                        static_cast<long long>(row.k), row.d.c_str(), row.certs.c_str(), row.flags.c_str());
    }
    return kExitOk;
}

int cmd_inspect_cosets(std::int64_t q, std::int64_t M, std::int64_t r, const std::string& format) {
    try {
        const CosetTable tab = CosetTable::build(q, M);
        const std::vector<std::int64_t> leaders = r > 0 ? gamma_one(q, M, r) : tab.leaders();
        if (format == "json") {
            ordered_json j;
            j["q"] = q;
            j["modulus"] = M;
            if (r > 0) j["residue"] = r;
            ordered_json arr = ordered_json::array();
            for (std::int64_t l : leaders) arr.push_back({{"leader", l}, {"size", tab.coset_size(l)}});
            j["cosets"] = arr;
            std::cout << j.dump() << "\n";
        } else {
            std::printf("%8s %6s  members\n", "leader", "size");
            for (std::int64_t l : leaders) {
                std::printf("%8lld %6lld ", static_cast<long long>(l), static_cast<long long>(tab.coset_size(l)));
                for (std::int64_t x : tab.coset(l)) std::printf(" %lld", static_cast<long long>(x));
                std::printf("\n");
            }
        }
        return kExitOk;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConstruction;
    }
}

int cmd_inspect_field(const std::string& field_spec, const std::string& format) {
    try {
        const auto F = parse_field_spec(field_spec);
        if (format == "json") {
            ordered_json j;
            j["p"] = F->p();
            j["K"] = F->K();
            j["size"] = F->size();
            j["spec"] = F->spec_string();
            std::cout << j.dump() << "\n";
        } else {
            std::printf("GF(%lld) = GF(%lld^%d), modulus %s, generator b of order %lld\n",
                        static_cast<long long>(F->size()), static_cast<long long>(F->p()), F->K(),
                        F->spec_string().c_str(), static_cast<long long>(F->order()));
        }
        return kExitOk;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConstruction;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"construct and analyze the two constacyclic code families"};
    app.require_subcommand(1);

    std::string spec_str, field_spec, input, suite = "paper-examples", format = "table", family;
    std::vector<std::string> ranges;
    bool extended = false;
    std::uint64_t seed = 0;
    std::int64_t cap = env_cap();
    int threads = 0;
    std::int64_t iq = 0, iM = 0, ir = 0;

    auto* construct = app.add_subcommand("construct", "build a code and print its JSON record");
    construct->add_option("spec", spec_str, "family spec, e.g. cprime:q=3,m=4,r=2,ell=1")->required();
    construct->add_option("--field", field_spec, "field override p^K:c0,c1,...,cK");

    auto* analyze = app.add_subcommand("analyze", "distance / weight analysis of a code");
    analyze->add_option("input", input, "family spec, code JSON, file path, or -")->required();
    analyze->add_option("--field", field_spec, "field override");
    bool want_distance = false, want_weights = false, want_dual = false;
    analyze->add_flag("--distance", want_distance, "compute the minimum distance");
    analyze->add_flag("--weights", want_weights, "compute the weight distribution");
    analyze->add_flag("--dual", want_dual, "also analyze the dual code");
    analyze->add_option("--cap", cap, "enumeration cap (codewords)");
    analyze->add_option("--threads", threads, "enumeration threads (0 = all)");
    analyze->add_option("--seed", seed, "seed for sampled bounds");

    auto* verify = app.add_subcommand("verify", "run the bundled verification suites");
    verify->add_option("suite", suite, "paper-examples | theorems | all");
    verify->add_flag("--extended", extended, "include the long 4^15 sweep");
    verify->add_option("--seed", seed, "seed for randomized property checks");
    verify->add_option("--cap", cap, "enumeration cap");
    verify->add_option("--threads", threads, "enumeration threads");
    verify->add_option("--format", format, "table | json");

    auto* table = app.add_subcommand("table", "parameter table over ranges of q, m, r, ell");
    table->add_option("family", family, "cprime | c")->required();
    table->add_option("ranges", ranges, "q=3..5 m=2..3 [r=2] [ell=1..3]");
    table->add_option("--format", format, "table | csv | json");
    table->add_option("--cap", cap, "enumeration cap");
    table->add_option("--threads", threads, "enumeration threads");

    auto* inspect = app.add_subcommand("inspect", "inspect cosets or fields");
    auto* icosets = inspect->add_subcommand("cosets", "q-cyclotomic cosets modulo M");
    icosets->add_option("--q", iq, "base")->required();
    icosets->add_option("--mod", iM, "modulus")->required();
    icosets->add_option("--r", ir, "keep only leaders congruent to 1 mod r");
    icosets->add_option("--format", format, "table | json");
    auto* ifield = inspect->add_subcommand("field", "field described by a spec string");
    ifield->add_option("--field", field_spec, "p^K:c0,c1,...,cK")->required();
    ifield->add_option("--format", format, "table | json");
    inspect->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    if (construct->parsed()) return cmd_construct(spec_str, field_spec);
    if (analyze->parsed()) {
        AnalyzeOptions opt;
        opt.cap = cap;
        opt.threads = threads;
        opt.seed = seed;
        opt.want_distance = want_distance;
        opt.want_weights = want_weights;
        opt.want_dual = want_dual;
        return cmd_analyze(input, field_spec, opt);
    }
    if (verify->parsed()) return cmd_verify(suite, extended, seed, cap, threads, format);
    if (table->parsed()) return cmd_table(family, ranges, format, cap, threads);
    if (icosets->parsed()) return cmd_inspect_cosets(iq, iM, ir, format);
    if (ifield->parsed()) return cmd_inspect_field(field_spec, format);
    return kExitUsage;
}

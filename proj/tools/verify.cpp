#include "verify.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <random>
#include <set>
#include <sstream>

#include "cli_util.hpp"
#include "constacode/enumeration.hpp"

namespace constacode::cli {

namespace {

std::string params_str(std::int64_t n, std::int64_t k, std::int64_t d) {
    return "[" + std::to_string(n) + ", " + std::to_string(k) + ", " + std::to_string(d) + "]";
}

class Runner {
   public:
    Runner(RunReport& rep, std::int64_t cap, int threads, std::uint64_t seed)
        : rep_(rep), cap_(cap), threads_(threads), rng_(seed) {}

    std::int64_t cap() const { return cap_; }
    int threads() const { return threads_; }
    std::mt19937_64& rng() { return rng_; }

    void check(const std::string& id, const std::string& claim, const std::string& expected,
               const std::function<std::string()>& compute) {
        run(id, claim, expected, compute, /*flag_only=*/false);
    }

    /// Known discrepancy: reported, listed, never failing.
    void flagged(const std::string& id, const std::string& claim, const std::string& recorded,
                 const std::function<std::string()>& compute) {
        run(id, claim, recorded, compute, /*flag_only=*/true);
    }

   private:
    void run(const std::string& id, const std::string& claim, const std::string& expected,
             const std::function<std::string()>& compute, bool flag_only) {
        CheckRecord rec;
        rec.id = id;
        rec.claim = claim;
        rec.expected = expected;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            rec.computed = compute();
            rec.status = flag_only ? CheckRecord::Status::Flagged
                         : (rec.computed == expected ? CheckRecord::Status::Pass : CheckRecord::Status::Fail);
        } catch (const std::exception& e) {
            rec.computed = std::string("exception: ") + e.what();
            rec.status = flag_only ? CheckRecord::Status::Flagged : CheckRecord::Status::Fail;
        }
        rec.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        switch (rec.status) {
            case CheckRecord::Status::Pass: ++rep_.passed; break;
            case CheckRecord::Status::Fail: ++rep_.failed; break;
            case CheckRecord::Status::Flagged: ++rep_.flagged; break;
        }
        rep_.checks.push_back(std::move(rec));
    }

    RunReport& rep_;
    std::int64_t cap_;
    int threads_;
    std::mt19937_64 rng_;
};

std::int64_t exact_distance(const ConstacyclicCode& code, Runner& r, std::optional<std::int64_t> hint = std::nullopt) {
    MinDistanceOptions opts;
    opts.cap = r.cap();
    opts.threads = r.threads();
    opts.upper_hint = hint;
    opts.sample_count = 0;
    const DistanceResult res = min_distance(code, opts);
    if (res.kind != DistanceResult::Kind::Exact) throw Error("distance not certified");
    return res.value;
}

std::vector<std::pair<std::int64_t, std::int64_t>> qm_grid(std::int64_t max_qm) {
    std::vector<std::pair<std::int64_t, std::int64_t>> grid;
    for (std::int64_t q = 3; q <= max_qm; ++q) {
        std::int64_t p;
        int e;
        if (!prime_power(q, p, e)) continue;
        for (std::int64_t m = 2; ipow(q, m) <= max_qm; ++m) grid.emplace_back(q, m);
    }
    return grid;
}

std::vector<std::int64_t> divisors_of_qm1(std::int64_t q) {
    std::vector<std::int64_t> rs;
    for (std::int64_t r = 2; r <= q - 1; ++r)
        if ((q - 1) % r == 0) rs.push_back(r);
    return rs;
}

// ---------------------------------------------------------------------------
// paper-examples suite
// ---------------------------------------------------------------------------

void first_family_examples(Runner& R) {
    struct Row {
        std::int64_t q, m, r, ell;
        std::int64_t n, k, d;
        std::int64_t dk, dd;  // dual dimension and distance
    };
    const Row rows[] = {
        {3, 4, 2, 1, 40, 36, 3, 4, 27},  {3, 4, 2, 2, 40, 24, 8, 16, 12}, {3, 4, 2, 3, 40, 8, 21, 32, 4},
        {4, 3, 3, 2, 21, 9, 8, 12, 6},   {5, 2, 2, 1, 12, 8, 4, 4, 6},    {5, 3, 2, 1, 62, 56, 4, 6, 45},
        {7, 2, 2, 1, 24, 18, 5, 6, 45},  // dual distance of the last row is not a documented target
    };
    for (const Row& row : rows) {
        const std::string tag = "cprime-" + std::to_string(row.q) + "-" + std::to_string(row.m) + "-" +
                                std::to_string(row.r) + "-" + std::to_string(row.ell);
        R.check(tag + "-params", "first-family code parameters", params_str(row.n, row.k, row.d), [&] {
            const ConstacyclicCode c = cprime(row.q, row.m, row.r, row.ell);
            return params_str(c.n(), c.k(), exact_distance(c, R));
        });
        if (row.q == 7) continue;  // only [24, 18, 5] is on record for (7,2,2,1)
        R.check(tag + "-dual", "dual parameters", params_str(row.n, row.dk, row.dd), [&] {
            const ConstacyclicCode d = dual(cprime(row.q, row.m, row.r, row.ell));
            return params_str(d.n(), d.k(), exact_distance(d, R));
        });
    }

    R.check("cprime-3-4-2-1-perfect", "the [40, 36, 3] code attains the sphere-packing bound with equality",
            "perfect", [&] { return sphere_packing_check(40, 36, 3, 3).is_perfect ? "perfect" : "not perfect"; });
    R.check("cprime-5-2-2-1-optimal", "d = 5 is impossible for [12, 8] over GF(5); d = 4 passes the even-d bound",
            "distance-optimal", [&] {
                const bool opt = !sphere_packing_check(12, 8, 5, 5).satisfies &&
                                 sphere_packing_check(12, 8, 4, 5).satisfies &&
                                 *sphere_packing_check(12, 8, 4, 5).even_refinement;
                return opt ? "distance-optimal" : "not settled";
            });

    R.check("cprime-5-2-2-1-dual-enumerator", "weight enumerator of the [12, 4, 6] dual",
            "1 + 8z^6 + 144z^8 + 144z^9 + 168z^10 + 96z^11 + 64z^12", [&] {
                return weight_distribution(dual(cprime(5, 2, 2, 1)), R.cap(), R.threads()).enumerator_str();
            });
    R.check("cprime-5-3-2-1-dual-enumerator", "weight enumerator of the [62, 6, 45] dual",
            "1 + 3720z^45 + 9424z^50 + 2480z^55", [&] {
                return weight_distribution(dual(cprime(5, 3, 2, 1)), R.cap(), R.threads()).enumerator_str();
            });

    for (auto [q, m] : {std::pair<std::int64_t, std::int64_t>{5, 2}, {5, 3}, {7, 2}}) {
        R.check("table12-" + std::to_string(q) + "-" + std::to_string(m),
                "closed-form distribution of the half-divisor dual equals enumeration", "match", [&, q = q, m = m] {
                    const Table12Report rep = table1_table2_check(q, m, R.cap(), R.threads());
                    if (rep.closed_form.total() != big_pow(q, 2 * m)) return std::string("total mismatch");
                    return std::string(rep.match ? "match" : "mismatch");
                });
    }
}

void second_family_examples(Runner& R) {
    struct Row {
        std::int64_t q, m, r, ell;
        std::int64_t n, k, d;
        std::int64_t dk = -1, dd = -1;  // dual, when on record
    };
    const Row rows[] = {
        {3, 3, 2, 3, 13, 10, 3},
        {3, 4, 2, 1, 40, 4, 27},
        {4, 2, 3, 2, 5, 3, 3, 2, 4},
        {4, 3, 3, 2, 21, 6, 12, 15, 4},
        {4, 4, 3, 2, 85, 10, 48, 75, 4},
        {4, 3, 3, 5, 21, 18, 3, 3, 16},
        {4, 3, 3, 4, 21, 6, 12, 15, 4},
        {5, 3, 4, 3, 31, 10, 15, 21, 5},
    };
    for (const Row& row : rows) {
        const std::string tag = "c-" + std::to_string(row.q) + "-" + std::to_string(row.m) + "-" +
                                std::to_string(row.r) + "-" + std::to_string(row.ell);
        R.check(tag + "-params", "second-family code parameters", params_str(row.n, row.k, row.d), [&] {
            const ConstacyclicCode c = cfamily(row.q, row.m, row.r, row.ell);
            return params_str(c.n(), c.k(), exact_distance(c, R));
        });
        if (row.dk < 0) continue;
        R.check(tag + "-dual", "dual parameters", params_str(row.n, row.dk, row.dd), [&] {
            const ConstacyclicCode d = dual(cfamily(row.q, row.m, row.r, row.ell));
            return params_str(d.n(), d.k(), exact_distance(d, R));
        });
    }

    R.check("c-5-2-2-3-self-dual", "the [12, 6, 5] code equals its dual", "[12, 6, 5] self-dual", [&] {
        const ConstacyclicCode c = cfamily(5, 2, 2, 3);
        const std::string p = params_str(c.n(), c.k(), exact_distance(c, R));
        return p + (self_dual_check(c) ? " self-dual" : " not self-dual");
    });

    const char* golden42 = "1 + 30z^3 + 15z^4 + 18z^5";
    R.check("c-4-2-3-2-enumerator", "weight enumerator of the [5, 3, 3] code", golden42,
            [&] { return weight_distribution(cfamily(4, 2, 3, 2), R.cap(), R.threads()).enumerator_str(); });
    R.check("c-4-3-3-2-enumerator", "weight enumerator of the [21, 6, 12] code",
            "1 + 630z^12 + 3087z^16 + 378z^20",
            [&] { return weight_distribution(cfamily(4, 3, 3, 2), R.cap(), R.threads()).enumerator_str(); });
    R.check("c-4-4-3-2-enumerator", "weight enumerator of the [85, 10, 48] code",
            "1 + 10710z^48 + 411264z^60 + 257295z^64 + 362880z^68 + 6426z^80",
            [&] { return weight_distribution(cfamily(4, 4, 3, 2), R.cap(), R.threads()).enumerator_str(); });

    R.check("c-5-3-2-5-self-dual-certified",
            "the [62, 31, 10] code is self-dual, distance certified without enumeration",
            "[62, 31, 10] self-dual certificates", [&] {
                const ConstacyclicCode c = cfamily(5, 3, 2, 5);
                MinDistanceOptions opts;
                opts.cap = 0;  // forbid enumeration outright
                opts.sample_count = 0;
                opts.upper_hint = distance_witness(5, 3, 2, 5).weight;
                const DistanceResult res = min_distance(c, opts);
                if (res.kind != DistanceResult::Kind::Exact) return std::string("not certified");
                return params_str(c.n(), c.k(), res.value) + (self_dual_check(c) ? " self-dual " : " not-self-dual ") +
                       res.source;
            });

    // recorded as [30, 28, 3]; the construction has length 31, so the record
    // is reported as a discrepancy rather than matched
    R.flagged("c-5-3-4-7-length-discrepancy", "computed record disagrees with the stated [30, 28, 3] in length",
              "[30, 28, 3]", [&] {
                  const ConstacyclicCode c = cfamily(5, 3, 4, 7);
                  return params_str(c.n(), c.k(), exact_distance(c, R));
              });
    R.check("c-5-3-4-7-dual", "dual of the flagged record", params_str(31, 3, 25), [&] {
        const ConstacyclicCode d = dual(cfamily(5, 3, 4, 7));
        return params_str(d.n(), d.k(), exact_distance(d, R));
    });
}

void restriction_example(Runner& R) {
    auto F = default_field(3, 4);
    const Subfield s = F->subfield(1);
    const Polynomial mb = minimal_poly(1, s);
    const Polynomial xm1 = Polynomial::from_symbols(s, {2, 1});
    const Polynomial xn1 = Polynomial::x_n_minus(s, 40, F->one());

    struct Item {
        const char* id;
        Polynomial g;
        std::int64_t n, k, d;
        std::vector<std::int64_t> ind;
    };
    const Item items[] = {
        {"restrict-3-4-2-item1", mb, 80, 76, 2, {1}},
        {"restrict-3-4-2-item2", xm1 * mb, 80, 75, 3, {0, 1}},
        {"restrict-3-4-2-item3", xn1 * mb, 80, 36, 6, {0, 1}},
    };
    for (const Item& item : items) {
        R.check(item.id, "cyclic/constacyclic restriction pair",
                params_str(item.n, item.k, item.d) + " -> [40, 36, 3]", [&] {
                    const Restriction restr = restrict_cyclic(item.g, 2);
                    if (restr.ind != item.ind) return std::string("unexpected index set");
                    const ConstacyclicCode under = from_generator(restr.g_underline, F->from_log(40), 40);
                    const std::int64_t du = exact_distance(under, R);
                    const ConstacyclicCode cyc = from_generator(item.g, F->one(), 80);

                    std::int64_t dc;
                    if (cyc.n() - cyc.k() <= 5) {
                        dc = exact_distance(cyc, R);
                    } else {
                        // two-block certificate: the cyclic code is exactly
                        // {(-u || u) : u in the restriction}, so d = 2 d(under)
                        const GeneratorMatrix gen_under = generator_matrix(under);
                        const auto tabs = gen_under.tables_ptr();
                        std::vector<Word> blocks;
                        for (const Word& u : gen_under.rows()) {
                            Word w(80);
                            for (std::size_t i = 0; i < 40; ++i) {
                                w[i] = tabs->neg[u[i]];
                                w[40 + i] = u[i];
                            }
                            blocks.push_back(std::move(w));
                        }
                        if (!code_equal(generator_matrix(cyc), GeneratorMatrix(tabs, 80, std::move(blocks))))
                            return std::string("two-block structure violated");
                        dc = 2 * du;
                    }
                    // d(cyclic) <= |Ind| d(under); and with 1 <= |Ind| <= r-1,
                    // 2 <= d(cyclic) <= |Ind| + 1
                    if (dc > static_cast<std::int64_t>(item.ind.size()) * du) return std::string("bound 1 violated");
                    if (item.ind.size() == 1 && !(2 <= dc && dc <= 2)) return std::string("bound 2 violated");
                    return params_str(80, cyc.k(), dc) + " -> " + params_str(40, under.k(), du);
                });
    }
}

void reference_codes(Runner& R) {
    R.check("ngrm-3-4-2-sweep", "parameters of the length-40 evaluation codes",
            "[40, 1, 40] [40, 11, 13] [40, 30, 4] [40, 40, 1]", [&] {
                std::string out;
                for (std::int64_t h = 0; h <= 3; ++h) {
                    const NgrmCode c = ngrm(3, 4, 2, h);
                    if (c.matrix.rank() != c.dim_formula) return std::string("dimension formula mismatch");
                    const WeightDistribution wd = weight_distribution(c.matrix, R.cap(), R.threads());
                    const std::int64_t d = c.matrix.rank() == 0 ? 0 : wd.min_weight().value();
                    if (!out.empty()) out += " ";
                    out += params_str(40, c.matrix.rank(), d);
                }
                return out;
            });
    R.check("prm-3-4-distances", "projective Reed-Muller distances for h = 1..6", "27 18 9 6 3 2", [&] {
        std::string out;
        for (std::int64_t h = 1; h <= 6; ++h) {
            if (!out.empty()) out += " ";
            out += std::to_string(prm_params(3, 4, h).d);
        }
        return out;
    });
    R.check("dilix-dimension-relation", "dim of the digit-weight cyclic code is r times the first-family dim",
            "holds for ell = 1, 2, 3", [&] {
                for (std::int64_t ell : {1, 2, 3})
                    if (dilix(3, 4, ell).k() != 2 * cprime(3, 4, 2, ell).k()) return std::string("fails at " + std::to_string(ell));
                return std::string("holds for ell = 1, 2, 3");
            });
}

// ---------------------------------------------------------------------------
// theorems suite
// ---------------------------------------------------------------------------

void dimension_grid(Runner& R) {
    R.check("dimension-formulas-grid", "closed-form dimensions match deg(g) for every q^m <= 1024", "agree", [&] {
        std::int64_t count = 0;
        for (auto [q, m] : qm_grid(1024)) {
            for (std::int64_t r : divisors_of_qm1(q)) {
                auto field = field_for_alphabet(q, static_cast<int>(m));
                for (std::int64_t ell = 1; ell <= m - 1; ++ell, ++count)
                    if (cprime(q, m, r, ell, field).k() != cprime_dimension(q, m, r, ell))
                        return "first-family mismatch at q=" + std::to_string(q) + ",m=" + std::to_string(m) +
                               ",r=" + std::to_string(r) + ",ell=" + std::to_string(ell);
                for (std::int64_t ell = 0; ell < (q - 1) * m - 1; ++ell, ++count)
                    if (cfamily(q, m, r, ell, field).k() != cfamily_dimension(q, m, r, ell))
                        return "second-family mismatch at q=" + std::to_string(q) + ",m=" + std::to_string(m) +
                               ",r=" + std::to_string(r) + ",ell=" + std::to_string(ell);
            }
        }
        return count >= 100 ? std::string("agree") : std::string("grid too small");
    });
}

void evaluation_grids(Runner& R) {
    R.check("evaluation-code-equality-grid", "monomial evaluation equals the constacyclic construction (q^m <= 243)",
            "agree", [&] {
                for (auto [q, m] : qm_grid(243)) {
                    auto field = field_for_alphabet(q, static_cast<int>(m));
                    for (std::int64_t r : divisors_of_qm1(q)) {
                        const std::int64_t n = (ipow(q, m) - 1) / r;
                        const CompanionSequence pts = companion_sequence(field, q, m, n);
                        for (std::int64_t ell = r - 1; ell < (q - 1) * m - 1; ell += r)
                            if (!code_equal(cfamily(q, m, r, ell, field),
                                            evaluation_code(monomial_space_m(q, m, r, ell), pts)))
                                return "mismatch at q=" + std::to_string(q) + ",m=" + std::to_string(m) +
                                       ",r=" + std::to_string(r) + ",ell=" + std::to_string(ell);
                    }
                }
                return std::string("agree");
            });

    R.check("projected-homogeneous-equality-grid",
            "homogeneous evaluations equal the projected tilde subcode (q^m <= 243)", "agree", [&] {
                for (auto [q, m] : qm_grid(243)) {
                    auto field = field_for_alphabet(q, static_cast<int>(m));
                    const std::int64_t nbar = (ipow(q, m) - 1) / (q - 1);
                    const CompanionSequence pts = companion_sequence(field, q, m, nbar);
                    for (std::int64_t r : divisors_of_qm1(q))
                        for (std::int64_t ell = r - 1; ell <= (q - 1) * (m - 1) - 1; ell += r) {
                            if (ell < 1) continue;
                            if (!code_equal(evaluation_code(monomial_space_tilde(q, m, r, ell), pts),
                                            evaluation_code(monomial_space_homogeneous(q, m, ell), pts)))
                                return "mismatch at q=" + std::to_string(q) + ",m=" + std::to_string(m) +
                                       ",r=" + std::to_string(r) + ",ell=" + std::to_string(ell);
                        }
                }
                return std::string("agree");
            });

    R.check("tilde-concatenation-grid", "length-n tilde words are scaled concatenations of the projected word",
            "agree", [&] {
                for (auto [q, m] : qm_grid(243)) {
                    auto field = field_for_alphabet(q, static_cast<int>(m));
                    const std::int64_t nbar = (ipow(q, m) - 1) / (q - 1);
                    for (std::int64_t r : divisors_of_qm1(q)) {
                        const std::int64_t n = (ipow(q, m) - 1) / r;
                        const std::int64_t blocks = (q - 1) / r;
                        const CompanionSequence pts = companion_sequence(field, q, m, n);
                        const auto tabs = SymbolTables::get(pts.sf);
                        const FieldElement omega = field->from_log(field->order() / (q - 1));
                        for (std::int64_t ell = r - 1; ell <= (q - 1) * (m - 1) - 1; ell += r) {
                            if (ell < 1) continue;
                            const GeneratorMatrix ev = evaluation_code(monomial_space_tilde(q, m, r, ell), pts);
                            for (const Word& row : ev.rows())
                                for (std::int64_t b = 1; b < blocks; ++b) {
                                    const std::uint8_t sc = static_cast<std::uint8_t>(
                                        pts.sf.index_of(omega.pow(b * ell)));
                                    for (std::int64_t i = 0; i < nbar; ++i)
                                        if (row[static_cast<std::size_t>(b * nbar + i)] !=
                                            tabs->m(sc, row[static_cast<std::size_t>(i)]))
                                            return "mismatch at q=" + std::to_string(q) + ",m=" + std::to_string(m) +
                                                   ",r=" + std::to_string(r) + ",ell=" + std::to_string(ell);
                                }
                        }
                    }
                }
                return std::string("agree");
            });
}

void algebraic_properties(Runner& R) {
    R.check("generator-check-product", "g h = x^n - lambda on sampled constructions", "agree", [&] {
        for (auto [q, m] : qm_grid(256)) {
            auto field = field_for_alphabet(q, static_cast<int>(m));
            for (std::int64_t r : divisors_of_qm1(q)) {
                const ConstacyclicCode c = cprime(q, m, r, 1, field);
                if (c.generator() * c.check() != Polynomial::x_n_minus(c.subfield(), c.n(), c.lambda()))
                    return std::string("product mismatch");
            }
        }
        return std::string("agree");
    });

    R.check("dual-orthogonality", "every generator row is orthogonal to every dual generator row", "agree", [&] {
        for (const ConstacyclicCode& c : {cprime(3, 4, 2, 2), cfamily(5, 2, 2, 3), cfamily(4, 3, 3, 2)}) {
            const GeneratorMatrix G = generator_matrix(c), H = generator_matrix(dual(c));
            const auto tabs = G.tables_ptr();
            for (const Word& g : G.rows())
                for (const Word& h : H.rows()) {
                    std::uint8_t acc = 0;
                    for (std::size_t i = 0; i < g.size(); ++i) acc = tabs->a(acc, tabs->m(g[i], h[i]));
                    if (acc != 0) return std::string("nonzero inner product");
                }
        }
        return std::string("agree");
    });

    R.check("macwilliams-involution", "double transform returns the distribution", "agree", [&] {
        auto F = default_field(3, 2);
        const Subfield s = F->subfield(1);
        const CosetTable tab = CosetTable::build(3, 8);
        int done = 0;
        while (done < 20) {
            Polynomial g = Polynomial::one(s);
            for (std::int64_t leader : tab.leaders())
                if (R.rng()() % 2 == 0) g = g * minimal_poly(leader, s);
            const ConstacyclicCode c = from_generator(g, F->one(), 8);
            const WeightDistribution wd = weight_distribution(c, R.cap(), R.threads());
            if (macwilliams(macwilliams(wd, c.n(), c.k(), 3), c.n(), c.n() - c.k(), 3) != wd)
                return std::string("involution broken");
            ++done;
        }
        return std::string("agree");
    });

    R.check("bch-below-exact", "BCH bound never exceeds the enumerated distance", "agree", [&] {
        for (auto [q, m] : qm_grid(128)) {
            auto field = field_for_alphabet(q, static_cast<int>(m));
            for (std::int64_t r : divisors_of_qm1(q))
                for (std::int64_t ell = r - 1; ell < (q - 1) * m - 1; ell += r) {
                    const ConstacyclicCode c = cfamily(q, m, r, ell, field);
                    const std::int64_t side = enumerable_size(q, std::min(c.k(), c.n() - c.k()));
                    if (c.k() == 0 || side < 0 || side > (std::int64_t(1) << 18)) continue;
                    const auto d = weight_distribution(c, R.cap(), R.threads()).min_weight();
                    if (bch_lower_bound(c) > d.value()) return std::string("bound above exact distance");
                }
        }
        return std::string("agree");
    });

    R.check("counting-lemmas", "closed-form counts match brute force", "agree", [&] {
        for (std::int64_t q : {3, 5, 7, 9})
            for (std::int64_t r : divisors_of_qm1(q))
                for (std::int64_t t = 1; t <= 4; ++t) {
                    std::int64_t brute = 0;
                    std::vector<std::int64_t> x(static_cast<std::size_t>(t), 1);
                    for (;;) {
                        std::int64_t sum = 0;
                        for (auto v : x) sum += v;
                        brute += sum % r == 1 % r;
                        std::int64_t pos = 0;
                        while (pos < t && ++x[static_cast<std::size_t>(pos)] > q - 1) x[static_cast<std::size_t>(pos++)] = 1;
                        if (pos == t) break;
                    }
                    if (brute != unit_digit_solution_count(q, r, t)) return std::string("solution count mismatch");
                }
        for (std::int64_t t = 0; t <= 6; ++t)
            for (std::int64_t m = 1; m <= 6; ++m)
                for (std::int64_t s = 1; s <= 6; ++s) {
                    std::int64_t brute = 0;
                    std::vector<std::int64_t> x(static_cast<std::size_t>(m), 0);
                    for (;;) {
                        std::int64_t sum = 0;
                        for (auto v : x) sum += v;
                        brute += sum == t;
                        std::int64_t pos = 0;
                        while (pos < m && ++x[static_cast<std::size_t>(pos)] > s) x[static_cast<std::size_t>(pos++)] = 0;
                        if (pos == m) break;
                    }
                    if (BigInt(brute) != bounded_placements(t, m, s)) return std::string("placement count mismatch");
                }
        return std::string("agree");
    });

    R.check("coset-partition", "cyclotomic cosets partition Z_M with q-closure", "agree", [&] {
        for (auto [q, M] : {std::pair<std::int64_t, std::int64_t>{3, 80}, {5, 124}, {4, 63}, {7, 2400}}) {
            const CosetTable t = CosetTable::build(q, M);
            std::int64_t total = 0;
            for (std::int64_t leader : t.leaders()) {
                const auto c = t.coset(leader);
                total += static_cast<std::int64_t>(c.size());
                for (auto x : c)
                    if (t.leader_of(x * q % M) != leader) return std::string("not q-closed");
            }
            if (total != M) return std::string("not a partition");
        }
        return std::string("agree");
    });

    R.check("defining-set-normalization", "equal defining sets across the stated ell identification", "agree", [&] {
        for (auto [q, m] : qm_grid(300))
            for (std::int64_t r : divisors_of_qm1(q))
                for (std::int64_t ell = 0; ell < (q - 1) * m - 1; ++ell) {
                    const std::int64_t ellc = cfamily_canonical_ell(q, m, r, ell);
                    const auto got = defining_set_c(q, m, r, ell).indices;
                    if (ellc < 0) {
                        std::int64_t members = 0;
                        for (std::int64_t i = 0; i < ipow(q, m) - 1; ++i)
                            members += wt_q(i, q, m) % r == 1 % r;
                        if (static_cast<std::int64_t>(got.size()) != members) return std::string("zero-code set wrong");
                    } else if (got != defining_set_c(q, m, r, ellc).indices) {
                        return std::string("normalization mismatch");
                    }
                }
        return std::string("agree");
    });

    R.check("order-formula", "two routes to ord_{rn}(q) agree", "agree", [&] {
        for (std::int64_t q : {3, 4, 5, 7, 9})
            for (std::int64_t n = 2; n <= 100; ++n) {
                if (std::gcd(q, n) != 1) continue;
                const std::int64_t ell = order_mod(q, n);
                if (ell > 10) continue;
                for (std::int64_t r : divisors_of_qm1(q))
                    if (order_mod(q, r * n) != r / std::gcd((ipow(q, ell) - 1) / n, r) * ell)
                        return std::string("order mismatch");
            }
        return std::string("agree");
    });
}

void bound_properties(Runner& R) {
    R.check("first-family-dual-distance-bound", "dual distance is at least q^{m-ell} where computed exactly",
            "agree", [&] {
                for (auto [q, m, r, ell] :
                     {std::tuple<std::int64_t, std::int64_t, std::int64_t, std::int64_t>{3, 4, 2, 1},
                      {3, 4, 2, 2},
                      {3, 3, 2, 1},
                      {5, 2, 2, 1},
                      {4, 3, 3, 2},
                      {7, 2, 2, 1}}) {
                    const auto d = weight_distribution(dual(cprime(q, m, r, ell)), R.cap(), R.threads()).min_weight();
                    if (d.value() < ipow(q, m - ell)) return std::string("bound violated");
                }
                return std::string("agree");
            });

    R.check("second-family-dimension-upper-bound", "dimension never exceeds the stated upper bound", "agree", [&] {
        for (auto [q, m] : qm_grid(1024))
            for (std::int64_t r : divisors_of_qm1(q))
                for (std::int64_t ell = r - 1; ell < (q - 1) * m - 1; ell += r)
                    if (cfamily_dimension(q, m, r, ell) > cfamily_dimension_upper(q, m, r, ell))
                        return std::string("upper bound violated");
        return std::string("agree");
    });

    R.check("distance-bound-sandwich", "closed-form lower/upper bounds bracket the enumerated distance", "agree", [&] {
        for (auto [q, m] : qm_grid(128)) {
            auto field = field_for_alphabet(q, static_cast<int>(m));
            for (std::int64_t r : divisors_of_qm1(q))
                for (std::int64_t ell = r - 1; ell < (q - 1) * m - 1; ell += r) {
                    const PredictedParams p = predict_params(FamilyTag::Cfamily, q, m, r, ell);
                    const std::int64_t side = enumerable_size(q, std::min(p.k, p.n - p.k));
                    if (p.k == 0 || side < 0 || side > (std::int64_t(1) << 18)) continue;
                    const ConstacyclicCode c = cfamily(q, m, r, ell, field);
                    const auto d = weight_distribution(c, R.cap(), R.threads()).min_weight();
                    if (p.dkind == PredictedParams::DKind::Exact && p.d != d.value())
                        return "exact rule " + p.rule + " wrong at q=" + std::to_string(q) + ",m=" + std::to_string(m) +
                               ",r=" + std::to_string(r) + ",ell=" + std::to_string(ell);
                    if (p.dkind == PredictedParams::DKind::Range &&
                        (d.value() < p.d_lo || (p.d_hi >= 0 && d.value() > p.d_hi)))
                        return std::string("range miss");
                }
        }
        return std::string("agree");
    });

    R.check("witness-membership-grid", "distance witnesses are codewords of the stated weight", "agree", [&] {
        for (auto [q, m] : qm_grid(256)) {
            auto field = field_for_alphabet(q, static_cast<int>(m));
            for (std::int64_t r : divisors_of_qm1(q))
                for (std::int64_t ell = r - 1; ell < (q - 1) * m - 1; ell += r) {
                    const std::int64_t ell0 = ell % (q - 1);
                    if (ell0 % r != (r - 1) % r) continue;
                    distance_witness(q, m, r, ell, field);  // throws on any violation
                }
        }
        return std::string("agree");
    });

    R.check("monomial-scaling-identity", "f(e M^{jn+i}) = lambda^{-j} f(e M^i) for random monomials", "agree", [&] {
        for (auto [q, m] : {std::pair<std::int64_t, std::int64_t>{3, 4}, {5, 2}, {4, 3}}) {
            for (std::int64_t r : divisors_of_qm1(q)) {
                auto field = field_for_alphabet(q, static_cast<int>(m));
                const std::int64_t n = (ipow(q, m) - 1) / r;
                const CompanionSequence pts = companion_sequence(field, q, m, ipow(q, m) - 1);
                const auto tabs = SymbolTables::get(pts.sf);
                const std::int64_t ell = (q - 1) * m - 2 - ((q - 1) * m - 2 - (r - 1)) % r;
                const MonomialSpace space = monomial_space_m(q, m, r, ell);
                const FieldElement lambda = field->from_log(n % field->order());
                for (int trial = 0; trial < 10; ++trial) {
                    const auto& expo = space.exponents[R.rng()() % space.exponents.size()];
                    for (int probe = 0; probe < 20; ++probe) {
                        const std::int64_t i = static_cast<std::int64_t>(R.rng()() % n);
                        const std::int64_t j = static_cast<std::int64_t>(R.rng()() % r);
                        const auto eval_at = [&](const Word& p) {
                            std::uint8_t v = 1;
                            for (std::int64_t t = 0; t < m; ++t)
                                v = tabs->m(v, tabs->p(p[static_cast<std::size_t>(t)], expo[static_cast<std::size_t>(t)]));
                            return v;
                        };
                        const std::uint8_t lhs = eval_at(pts.points[static_cast<std::size_t>(j * n + i)]);
                        const std::uint8_t scale =
                            static_cast<std::uint8_t>(pts.sf.index_of(lambda.pow(-j)));
                        if (lhs != tabs->m(scale, eval_at(pts.points[static_cast<std::size_t>(i)])))
                            return std::string("scaling identity violated");
                    }
                }
            }
        }
        return std::string("agree");
    });

    R.check("kappa-dimension-closed-forms", "the three special-case dimension formulas match the double sum",
            "agree", [&] {
                for (auto [q, m] : qm_grid(1024)) {
                    for (std::int64_t r : divisors_of_qm1(q)) {
                        const std::int64_t n = (ipow(q, m) - 1) / r;
                        // ell = (q-1)(m-1) + ell0 with ell0 = r-1 mod r, ell0 < q-2
                        for (std::int64_t ell0 = r - 1; ell0 < q - 2; ell0 += r) {
                            const std::int64_t ell = (q - 1) * (m - 1) + ell0;
                            if (ell >= (q - 1) * m - 1) continue;
                            std::int64_t kappa = 0;
                            for (std::int64_t t = 0; t <= (q - 2 - ell0) / r - 1; ++t)
                                kappa += static_cast<std::int64_t>(binomial(m + r * t, r * t + 1));
                            if (cfamily_dimension(q, m, r, ell) != n - kappa) return std::string("case-1 mismatch");
                        }
                        // ell = (q-1)(m-2) + r-1
                        if (m >= 2) {
                            const std::int64_t ell = (q - 1) * (m - 2) + r - 1;
                            if (ell >= 0 && ell < (q - 1) * m - 1) {
                                BigInt kappa = 0;
                                for (std::int64_t t = 0; t <= 2 * (q - 1 - r) / r; ++t)
                                    kappa += binomial(m + r * t, r * t + 1);
                                if (2 * r <= q - 1) {
                                    BigInt corr = 0;
                                    for (std::int64_t t = (q - 1) / r; t <= 2 * (q - 1 - r) / r; ++t)
                                        corr += binomial(t * r - q + m, t * r - q + 1);
                                    kappa -= m * corr;
                                }
                                if (BigInt(cfamily_dimension(q, m, r, ell)) != n - kappa)
                                    return "case-2 mismatch at q=" + std::to_string(q) + ",m=" + std::to_string(m) +
                                           ",r=" + std::to_string(r);
                            }
                        }
                    }
                    // odd q, r = 2: ell = (q-1)(m-2) + ell0, ell0 odd
                    if (q % 2 == 1 && q >= 5) {
                        for (std::int64_t ell0 = 1; ell0 <= q - 2; ell0 += 2) {
                            const std::int64_t ell = (q - 1) * (m - 2) + ell0;
                            if (ell < 1 || ell >= (q - 1) * m - 1) continue;
                            BigInt kappa = 0;
                            if (ell0 == q - 2) {
                                for (std::int64_t t = 0; t <= (q - 3) / 2; ++t) kappa += binomial(2 * t + m, 2 * t + 1);
                            } else {
                                for (std::int64_t t = 0; t <= (2 * q - 5 - ell0) / 2; ++t)
                                    kappa += binomial(2 * t + m, 2 * t + 1);
                                BigInt corr = 0;
                                for (std::int64_t t = (q - 1) / 2; t <= (2 * q - 5 - ell0) / 2; ++t)
                                    corr += binomial(2 * t - q + m, 2 * t - q + 1);
                                kappa -= m * corr;
                            }
                            const std::int64_t n = (ipow(q, m) - 1) / 2;
                            if (BigInt(cfamily_dimension(q, m, 2, ell)) != n - kappa)
                                return "case-3 mismatch at q=" + std::to_string(q) + ",m=" + std::to_string(m) +
                                       ",ell0=" + std::to_string(ell0);
                        }
                    }
                }
                return std::string("agree");
            });

    R.check("self-dual-criterion", "q^m = 1 mod 4, r = 2, ell = (q-1)m/2 - 1 gives self-dual codes", "agree", [&] {
        for (auto [q, m] : qm_grid(1024)) {
            if (q % 2 == 0 || big_pow(q, m) % 4 != 1) continue;
            const std::int64_t ell = (q - 1) * m / 2 - 1;
            if (ell < 1 || ell >= (q - 1) * m - 1) continue;
            auto field = field_for_alphabet(q, static_cast<int>(m));
            const ConstacyclicCode c = cfamily(q, m, 2, ell, field);
            if (!self_dual_check(c)) return "not self-dual at q=" + std::to_string(q) + ",m=" + std::to_string(m);
            const PredictedParams p = predict_params(FamilyTag::Cfamily, q, m, 2, ell);
            const std::int64_t expect =
                (m % 2 == 0) ? ipow(q, m / 2) : (q + 3) / 4 * ipow(q, (m - 1) / 2);
            if (p.d != expect) return std::string("distance formula mismatch");
        }
        return std::string("agree");
    });

    R.check("residue-equals-restriction", "row-space residue equals the gcd restriction on random cyclic codes",
            "agree", [&] {
                auto F = default_field(3, 4);
                const Subfield s = F->subfield(1);
                const CosetTable tab = CosetTable::build(3, 80);
                int done = 0;
                while (done < 8) {
                    Polynomial g = Polynomial::one(s);
                    for (std::int64_t leader : tab.leaders())
                        if (R.rng()() % 3 == 0) g = g * minimal_poly(leader, s);
                    const Restriction restr = restrict_cyclic(g, 2);
                    if (restr.g_underline.is_one() || restr.g_underline.degree() == 40) continue;
                    const ConstacyclicCode cyc = from_generator(g, F->one(), 80);
                    if (!code_equal(residue_code(cyc, 2), from_generator(restr.g_underline, F->from_log(40), 40)))
                        return std::string("mismatch");
                    ++done;
                }
                return std::string("agree");
            });
}

void extended_checks(Runner& R) {
    R.check("c-4-5-3-2-enumerator", "full 4^15 sweep of the [341, 15, 192] code",
            "1 + 173910z^192 + 140241024z^240 + 809480463z^256 + 123742080z^272 + 104346z^320", [&] {
                const ConstacyclicCode c = cfamily(4, 5, 3, 2);
                if (c.n() != 341 || c.k() != 15) return std::string("wrong parameters");
                return weight_distribution(c, std::int64_t(1) << 31, R.threads()).enumerator_str();
            });
}

}  // namespace

RunReport run_verify(const std::string& suite, bool extended, std::uint64_t seed, std::int64_t cap, int threads) {
    if (suite != "paper-examples" && suite != "theorems" && suite != "all")
        throw ParseError("unknown suite '" + suite + "' (expected paper-examples, theorems or all)");
    RunReport rep;
    rep.suite = suite;
    rep.seed = seed;
    Runner R(rep, cap, threads, seed);
    if (suite == "paper-examples" || suite == "all") {
        first_family_examples(R);
        second_family_examples(R);
        restriction_example(R);
        reference_codes(R);
    }
    if (suite == "theorems" || suite == "all") {
        dimension_grid(R);
        evaluation_grids(R);
        algebraic_properties(R);
        bound_properties(R);
    }
    if (extended) extended_checks(R);
    return rep;
}

std::string report_to_json(const RunReport& rep) {
    ordered_json j;
    j["suite"] = rep.suite;
    j["seed"] = rep.seed;
    ordered_json checks = ordered_json::array();
    for (const CheckRecord& c : rep.checks) {
        ordered_json jc;
        jc["id"] = c.id;
        jc["claim"] = c.claim;
        jc["expected"] = c.expected;
        jc["computed"] = c.computed;
        jc["status"] = c.status == CheckRecord::Status::Pass     ? "pass"
                       : c.status == CheckRecord::Status::Fail   ? "fail"
                                                                 : "flagged";
        checks.push_back(jc);
    }
    j["checks"] = checks;
    j["summary"] = {{"pass", rep.passed}, {"fail", rep.failed}, {"flagged", rep.flagged}};
    return j.dump(2);
}

std::string report_to_table(const RunReport& rep) {
    std::size_t idw = 4, expw = 8;
    for (const CheckRecord& c : rep.checks) {
        idw = std::max(idw, c.id.size());
        expw = std::max(expw, c.expected.size());
    }
    std::ostringstream os;
    os << std::left << std::setw(8) << "status" << std::setw(static_cast<int>(idw) + 2) << "id"
       << std::setw(static_cast<int>(expw) + 2) << "expected"
       << "computed (ms)\n";
    for (const CheckRecord& c : rep.checks) {
        const char* st = c.status == CheckRecord::Status::Pass     ? "PASS"
                         : c.status == CheckRecord::Status::Fail   ? "FAIL"
                                                                   : "FLAGGED";
        os << std::left << std::setw(8) << st << std::setw(static_cast<int>(idw) + 2) << c.id
           << std::setw(static_cast<int>(expw) + 2) << c.expected << c.computed << " (" << std::fixed
           << std::setprecision(0) << c.ms << ")\n";
    }
    os << rep.passed << " passed, " << rep.failed << " failed, " << rep.flagged << " flagged\n";
    return os.str();
}

}  // namespace constacode::cli

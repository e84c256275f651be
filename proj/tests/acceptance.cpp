// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
// Criterion 10 (the 4^15 sweep) is opt-in: set CONSTACODE_EXTENDED=1.
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <numeric>
#include <random>
#include <string>

#include "constacode/analysis.hpp"
#include "constacode/enumeration.hpp"
#include "constacode/families.hpp"

using namespace constacode;

namespace {

int g_failures = 0;

void criterion(int number, const char* title, const std::function<std::string()>& body) {
    std::string detail;
    bool ok = false;
    try {
        detail = body();
        ok = detail.rfind("FAIL", 0) != 0;
    } catch (const std::exception& e) {
        detail = std::string("FAIL: exception: ") + e.what();
    }
    if (!ok) ++g_failures;
    std::printf("%s criterion %2d (%s): %s\n", ok ? "PASS" : "FAIL", number, title, detail.c_str());
    std::fflush(stdout);
}

std::int64_t exact_d(const ConstacyclicCode& c, std::optional<std::int64_t> hint = std::nullopt) {
    MinDistanceOptions opts;
    opts.sample_count = 0;
    opts.upper_hint = hint;
    const DistanceResult r = min_distance(c, opts);
    if (r.kind != DistanceResult::Kind::Exact) throw Error("distance not exact");
    return r.value;
}

bool params_are(const ConstacyclicCode& c, std::int64_t n, std::int64_t k, std::int64_t d,
                std::optional<std::int64_t> hint = std::nullopt) {
    return c.n() == n && c.k() == k && exact_d(c, hint) == d;
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

std::vector<std::int64_t> rs_of(std::int64_t q) {
    std::vector<std::int64_t> rs;
    for (std::int64_t r = 2; r <= q - 1; ++r)
        if ((q - 1) % r == 0) rs.push_back(r);
    return rs;
}

void criterion_1() {
    criterion(1, "first-family examples with exact distances", [] {
        struct Row {
            std::int64_t q, m, r, ell, n, k, d, dk, dd;
        };
        for (const Row& row : {Row{3, 4, 2, 1, 40, 36, 3, 4, 27}, Row{3, 4, 2, 2, 40, 24, 8, 16, 12},
                               Row{3, 4, 2, 3, 40, 8, 21, 32, 4}, Row{4, 3, 3, 2, 21, 9, 8, 12, 6},
                               Row{5, 2, 2, 1, 12, 8, 4, 4, 6}, Row{5, 3, 2, 1, 62, 56, 4, 6, 45}}) {
            const ConstacyclicCode c = cprime(row.q, row.m, row.r, row.ell);
            if (!params_are(c, row.n, row.k, row.d)) return std::string("FAIL: primal at q=") + std::to_string(row.q);
            if (!params_are(dual(c), row.n, row.dk, row.dd))
                return std::string("FAIL: dual at q=") + std::to_string(row.q);
        }
        if (!params_are(cprime(7, 2, 2, 1), 24, 18, 5)) return std::string("FAIL: (7,2,2,1)");
        if (!sphere_packing_check(40, 36, 3, 3).is_perfect) return std::string("FAIL: perfection of [40, 36, 3]");
        return std::string("6 example pairs + [24, 18, 5], all exact");
    });
}

void criterion_2() {
    criterion(2, "weight enumerators verbatim", [] {
        if (weight_distribution(dual(cprime(5, 2, 2, 1))).enumerator_str() !=
            "1 + 8z^6 + 144z^8 + 144z^9 + 168z^10 + 96z^11 + 64z^12")
            return std::string("FAIL: dual of (5,2,2,1)");
        if (weight_distribution(dual(cprime(5, 3, 2, 1))).enumerator_str() !=
            "1 + 3720z^45 + 9424z^50 + 2480z^55")
            return std::string("FAIL: dual of (5,3,2,1)");
        if (weight_distribution(cfamily(4, 2, 3, 2)).enumerator_str() != "1 + 30z^3 + 15z^4 + 18z^5")
            return std::string("FAIL: (4,2,3,2)");
        if (weight_distribution(cfamily(4, 3, 3, 2)).enumerator_str() != "1 + 630z^12 + 3087z^16 + 378z^20")
            return std::string("FAIL: (4,3,3,2)");
        if (weight_distribution(cfamily(4, 4, 3, 2)).enumerator_str() !=
            "1 + 10710z^48 + 411264z^60 + 257295z^64 + 362880z^68 + 6426z^80")
            return std::string("FAIL: (4,4,3,2)");
        return std::string("5 enumerators, exact integer equality");
    });
}

void criterion_3() {
    criterion(3, "closed-form tables equal enumerated dual distributions", [] {
        for (auto [q, m] : {std::pair<std::int64_t, std::int64_t>{5, 2}, {5, 3}, {7, 2}}) {
            const Table12Report rep = table1_table2_check(q, m);
            if (!rep.match) return std::string("FAIL: mismatch at q=") + std::to_string(q) + ",m=" + std::to_string(m);
        }
        return std::string("(5,2), (5,3), (7,2) all match");
    });
}

void criterion_4() {
    criterion(4, "second-family examples with duals and self-duality", [] {
        if (!params_are(cfamily(3, 3, 2, 3), 13, 10, 3)) return std::string("FAIL: (3,3,2,3)");
        const ConstacyclicCode sd12 = cfamily(5, 2, 2, 3);
        if (!params_are(sd12, 12, 6, 5) || !self_dual_check(sd12)) return std::string("FAIL: (5,2,2,3)");
        if (!params_are(cfamily(3, 4, 2, 1), 40, 4, 27)) return std::string("FAIL: (3,4,2,1)");
        if (!params_are(cfamily(4, 3, 3, 5), 21, 18, 3) || !params_are(dual(cfamily(4, 3, 3, 5)), 21, 3, 16))
            return std::string("FAIL: (4,3,3,5)");
        if (!params_are(cfamily(4, 3, 3, 4), 21, 6, 12) || !params_are(dual(cfamily(4, 3, 3, 4)), 21, 15, 4))
            return std::string("FAIL: (4,3,3,4)");
        if (!params_are(cfamily(5, 3, 4, 3), 31, 10, 15) || !params_are(dual(cfamily(5, 3, 4, 3)), 31, 21, 5))
            return std::string("FAIL: (5,3,4,3)");
        // [62, 31, 10]: certified by matching lower/upper certificates only
        const ConstacyclicCode sd62 = cfamily(5, 3, 2, 5);
        MinDistanceOptions opts;
        opts.cap = 0;
        opts.sample_count = 0;
        opts.upper_hint = distance_witness(5, 3, 2, 5).weight;
        const DistanceResult res = min_distance(sd62, opts);
        if (res.kind != DistanceResult::Kind::Exact || res.value != 10 || res.enumerated || !self_dual_check(sd62))
            return std::string("FAIL: (5,3,2,5)");
        // recorded [30, 28, 3] disagrees in length; computed record is kept and flagged
        const ConstacyclicCode flagged = cfamily(5, 3, 4, 7);
        if (!params_are(flagged, 31, 28, 3)) return std::string("FAIL: computed record of (5,3,4,7)");
        if (!params_are(dual(flagged), 31, 3, 25)) return std::string("FAIL: dual of (5,3,4,7)");
        return std::string("7 examples + duals; [30, 28, 3] length discrepancy flagged, computed [31, 28, 3]");
    });
}

void criterion_5() {
    criterion(5, "dimension formulas vs constructed deg(g), q^m <= 1024", [] {
        std::int64_t instances = 0;
        for (auto [q, m] : qm_grid(1024))
            for (std::int64_t r : rs_of(q)) {
                auto field = field_for_alphabet(q, static_cast<int>(m));
                for (std::int64_t ell = 1; ell <= m - 1; ++ell, ++instances)
                    if (cprime(q, m, r, ell, field).k() != cprime_dimension(q, m, r, ell))
                        return std::string("FAIL: first family at q=") + std::to_string(q);
                for (std::int64_t ell = 0; ell < (q - 1) * m - 1; ++ell, ++instances)
                    if (cfamily(q, m, r, ell, field).k() != cfamily_dimension(q, m, r, ell))
                        return std::string("FAIL: second family at q=") + std::to_string(q);
            }
        if (instances < 200) return std::string("FAIL: grid too small");
        return std::to_string(instances) + " instances agree exactly";
    });
}

void criterion_6() {
    criterion(6, "evaluation-code equalities", [] {
        std::int64_t checked = 0;
        for (auto [q, m] : qm_grid(243)) {
            auto field = field_for_alphabet(q, static_cast<int>(m));
            const std::int64_t nbar = (ipow(q, m) - 1) / (q - 1);
            for (std::int64_t r : rs_of(q)) {
                const std::int64_t n = (ipow(q, m) - 1) / r;
                const CompanionSequence pts = companion_sequence(field, q, m, n);
                const CompanionSequence ptsbar = companion_sequence(field, q, m, nbar);
                const auto tabs = SymbolTables::get(pts.sf);
                const FieldElement omega = field->from_log(field->order() / (q - 1));
                for (std::int64_t ell = r - 1; ell < (q - 1) * m - 1; ell += r, ++checked) {
                    if (!code_equal(cfamily(q, m, r, ell, field),
                                    evaluation_code(monomial_space_m(q, m, r, ell), pts)))
                        return std::string("FAIL: row-space equality at q=") + std::to_string(q);
                    if (ell < 1 || ell > (q - 1) * (m - 1) - 1) continue;
                    if (!code_equal(evaluation_code(monomial_space_tilde(q, m, r, ell), ptsbar),
                                    evaluation_code(monomial_space_homogeneous(q, m, ell), ptsbar)))
                        return std::string("FAIL: homogeneous projection at q=") + std::to_string(q);
                    // concatenation identity, basis monomial by basis monomial
                    const GeneratorMatrix ev = evaluation_code(monomial_space_tilde(q, m, r, ell), pts);
                    for (const Word& row : ev.rows())
                        for (std::int64_t b = 1; b < (q - 1) / r; ++b) {
                            const std::uint8_t sc = static_cast<std::uint8_t>(pts.sf.index_of(omega.pow(b * ell)));
                            for (std::int64_t i = 0; i < nbar; ++i)
                                if (row[static_cast<std::size_t>(b * nbar + i)] !=
                                    tabs->m(sc, row[static_cast<std::size_t>(i)]))
                                    return std::string("FAIL: concatenation at q=") + std::to_string(q);
                        }
                }
            }
        }
        return std::to_string(checked) + " instances: row-space equality, projection, concatenation";
    });
}

void criterion_7() {
    criterion(7, "cyclic-to-constacyclic worked example", [] {
        auto F = default_field(3, 4);
        const Subfield s = F->subfield(1);
        const Polynomial mb = minimal_poly(1, s);
        const Polynomial xm1 = Polynomial::from_symbols(s, {2, 1});
        const Polynomial xn1 = Polynomial::x_n_minus(s, 40, F->one());
        struct Item {
            Polynomial g;
            std::int64_t k, d;
            std::size_t ind_count;
        };
        const Item items[] = {{mb, 76, 2, 1}, {xm1 * mb, 75, 3, 2}, {xn1 * mb, 36, 6, 2}};
        for (const Item& item : items) {
            const Restriction restr = restrict_cyclic(item.g, 2);
            if (restr.ind.size() != item.ind_count) return std::string("FAIL: index set");
            const ConstacyclicCode under = from_generator(restr.g_underline, F->from_log(40), 40);
            if (!params_are(under, 40, 36, 3)) return std::string("FAIL: restriction parameters");
            const ConstacyclicCode cyc = from_generator(item.g, F->one(), 80);
            std::int64_t dc;
            if (cyc.n() - cyc.k() <= 5) {
                dc = exact_d(cyc);
            } else {
                // [80, 36]: the code is exactly {(-u || u)}, so d = 2 d(under)
                const GeneratorMatrix gu = generator_matrix(under);
                const auto tabs = gu.tables_ptr();
                std::vector<Word> blocks;
                for (const Word& u : gu.rows()) {
                    Word w(80);
                    for (std::size_t i = 0; i < 40; ++i) {
                        w[i] = tabs->neg[u[i]];
                        w[40 + i] = u[i];
                    }
                    blocks.push_back(std::move(w));
                }
                if (!code_equal(generator_matrix(cyc), GeneratorMatrix(tabs, 80, std::move(blocks))))
                    return std::string("FAIL: two-block structure");
                dc = 2 * 3;
            }
            if (cyc.k() != item.k || dc != item.d) return std::string("FAIL: cyclic parameters");
            // d(C) <= |Ind| d(C_) always; and 2 <= d(C) <= |Ind|+1 when |Ind| <= r-1
            if (dc > static_cast<std::int64_t>(restr.ind.size()) * 3) return std::string("FAIL: product bound");
            if (restr.ind.size() == 1 && !(2 <= dc && dc <= 2)) return std::string("FAIL: small-index bound");
        }
        return std::string("pairs [80,76,2]/[80,75,3]/[80,36,6] -> [40,36,3], bounds verified");
    });
}

void criterion_8() {
    criterion(8, "reference codes", [] {
        const std::int64_t expect_k[] = {1, 11, 30, 40}, expect_d[] = {40, 13, 4, 1};
        for (std::int64_t h = 0; h <= 3; ++h) {
            const NgrmCode c = ngrm(3, 4, 2, h);
            if (c.matrix.rank() != expect_k[h] || c.d_formula != expect_d[h])
                return std::string("FAIL: evaluation-code sweep");
            const WeightDistribution wd = weight_distribution(c.matrix);
            if (wd.min_weight().value_or(0) != (h == 3 ? 1 : expect_d[h]))
                return std::string("FAIL: enumerated distance of the sweep");
        }
        const std::int64_t prm_d[] = {27, 18, 9, 6, 3, 2};
        for (std::int64_t h = 1; h <= 6; ++h)
            if (prm_params(3, 4, h).d != prm_d[h - 1]) return std::string("FAIL: projective distances");
        for (std::int64_t ell : {1, 2, 3})
            if (dilix(3, 4, ell).k() != 2 * cprime(3, 4, 2, ell).k())
                return std::string("FAIL: dimension relation");
        return std::string("evaluation sweep, projective distances, dimension relation");
    });
}

void criterion_9() {
    criterion(9, "invariant property suites", [] {
        // g h = x^n - lambda and dual orthogonality
        for (const ConstacyclicCode& c :
             {cprime(3, 4, 2, 2), cfamily(5, 2, 2, 3), cfamily(4, 3, 3, 2), dilix(3, 3, 1)}) {
            if (c.generator() * c.check() != Polynomial::x_n_minus(c.subfield(), c.n(), c.lambda()))
                return std::string("FAIL: generator-check product");
            const GeneratorMatrix G = generator_matrix(c), H = generator_matrix(dual(c));
            const auto tabs = G.tables_ptr();
            for (const Word& g : G.rows())
                for (const Word& h : H.rows()) {
                    std::uint8_t acc = 0;
                    for (std::size_t i = 0; i < g.size(); ++i) acc = tabs->a(acc, tabs->m(g[i], h[i]));
                    if (acc != 0) return std::string("FAIL: dual orthogonality");
                }
        }
        // MacWilliams involution on random cyclic codes of length 8
        {
            std::mt19937_64 rng(0);
            auto F = default_field(3, 2);
            const Subfield s = F->subfield(1);
            const CosetTable tab = CosetTable::build(3, 8);
            for (int done = 0; done < 20;) {
                Polynomial g = Polynomial::one(s);
                for (std::int64_t leader : tab.leaders())
                    if (rng() % 2 == 0) g = g * minimal_poly(leader, s);
                const ConstacyclicCode c = from_generator(g, F->one(), 8);
                const WeightDistribution wd = weight_distribution(c);
                if (macwilliams(macwilliams(wd, 8, c.k(), 3), 8, 8 - c.k(), 3) != wd)
                    return std::string("FAIL: involution");
                ++done;
            }
        }
        // BCH bound below every exactly computed distance
        for (auto [q, m] : qm_grid(128)) {
            auto field = field_for_alphabet(q, static_cast<int>(m));
            for (std::int64_t r : rs_of(q))
                for (std::int64_t ell = r - 1; ell < (q - 1) * m - 1; ell += r) {
                    const ConstacyclicCode c = cfamily(q, m, r, ell, field);
                    const std::int64_t side = enumerable_size(q, std::min(c.k(), c.n() - c.k()));
                    if (c.k() == 0 || side < 0 || side > (std::int64_t(1) << 16)) continue;
                    if (bch_lower_bound(c) > weight_distribution(c).min_weight().value())
                        return std::string("FAIL: BCH above exact distance");
                }
        }
        // counting oracles
        for (std::int64_t q : {3, 5, 7, 9})
            for (std::int64_t r : rs_of(q))
                for (std::int64_t t = 1; t <= 4; ++t) {
                    std::int64_t brute = 0;
                    std::vector<std::int64_t> x(static_cast<std::size_t>(t), 1);
                    for (;;) {
                        std::int64_t sum = std::accumulate(x.begin(), x.end(), std::int64_t(0));
                        brute += sum % r == 1 % r;
                        std::int64_t pos = 0;
                        while (pos < t && ++x[static_cast<std::size_t>(pos)] > q - 1)
                            x[static_cast<std::size_t>(pos++)] = 1;
                        if (pos == t) break;
                    }
                    if (brute != unit_digit_solution_count(q, r, t)) return std::string("FAIL: digit counting");
                }
        for (std::int64_t t = 0; t <= 6; ++t)
            for (std::int64_t m = 1; m <= 6; ++m)
                for (std::int64_t s2 = 1; s2 <= 6; ++s2) {
                    std::int64_t brute = 0;
                    std::vector<std::int64_t> x(static_cast<std::size_t>(m), 0);
                    for (;;) {
                        brute += std::accumulate(x.begin(), x.end(), std::int64_t(0)) == t;
                        std::int64_t pos = 0;
                        while (pos < m && ++x[static_cast<std::size_t>(pos)] > s2)
                            x[static_cast<std::size_t>(pos++)] = 0;
                        if (pos == m) break;
                    }
                    if (BigInt(brute) != bounded_placements(t, m, s2)) return std::string("FAIL: placements");
                }
        // coset partition + defining-set normalization
        for (auto [q, M] : {std::pair<std::int64_t, std::int64_t>{3, 80}, {5, 124}, {4, 255}}) {
            const CosetTable tab = CosetTable::build(q, M);
            std::int64_t total = 0;
            for (std::int64_t leader : tab.leaders()) total += tab.coset_size(leader);
            if (total != M) return std::string("FAIL: coset partition");
        }
        for (auto [q, m] : qm_grid(300))
            for (std::int64_t r : rs_of(q))
                for (std::int64_t ell = 0; ell < (q - 1) * m - 1; ++ell) {
                    const std::int64_t ellc = cfamily_canonical_ell(q, m, r, ell);
                    if (ellc >= 0 &&
                        defining_set_c(q, m, r, ell).indices != defining_set_c(q, m, r, ellc).indices)
                        return std::string("FAIL: normalization");
                }
        return std::string("products, orthogonality, involution, bounds, oracles, partitions, normalization");
    });
}

void criterion_10() {
    const char* env = std::getenv("CONSTACODE_EXTENDED");
    if (env == nullptr || std::strcmp(env, "1") != 0) {
        std::printf("SKIP criterion 10 (extended 4^15 sweep): set CONSTACODE_EXTENDED=1 to run\n");
        return;
    }
    criterion(10, "extended 4^15 sweep of the [341, 15, 192] code", [] {
        const ConstacyclicCode c = cfamily(4, 5, 3, 2);
        const WeightDistribution wd = weight_distribution(c, std::int64_t(1) << 31);
        const std::string expect =
            "1 + 173910z^192 + 140241024z^240 + 809480463z^256 + 123742080z^272 + 104346z^320";
        if (wd.enumerator_str() != expect) return std::string("FAIL: enumerator mismatch");
        return std::string("full enumeration matches");
    });
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    if (g_failures > 0) {
        std::printf("%d criterion(s) FAILED\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}

#include "constacode/families.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace constacode {

namespace {

Subfield subfield_for(std::shared_ptr<const FiniteField>& field, std::int64_t q, std::int64_t m) {
    std::int64_t p;
    int e;
    if (!prime_power(q, p, e)) throw NotPrime("alphabet size must be a prime power");
    if (!field) field = default_field(p, e * static_cast<int>(m));
    if (field->p() != p || field->K() != e * m)
        throw FieldMismatch("field does not realize GF(q^m)");
    return field->subfield(e);
}

std::vector<std::int64_t> coset_leaders_of(const DefiningSet& D, std::int64_t q) {
    const std::int64_t N = D.modulus;
    std::vector<std::int64_t> leaders;
    for (std::int64_t i : D.indices) {
        bool is_leader = true;
        for (std::int64_t j = i * q % N; j != i; j = j * q % N)
            if (j < i) {
                is_leader = false;
                break;
            }
        if (is_leader) leaders.push_back(i);
    }
    return leaders;
}

ConstacyclicCode build_from_defining_set(Subfield sf, DefiningSet D, std::int64_t r) {
    const FiniteField* F = sf.field;
    const std::int64_t N = F->order();
    const std::int64_t n = N / r;
    Polynomial g = Polynomial::one(sf);
    for (std::int64_t leader : coset_leaders_of(D, sf.q)) g = g * minimal_poly(leader, sf);
    const FieldElement lambda = F->from_log(n % N);
    return from_generator(g, lambda, n, 1, std::move(D));
}

}  // namespace

ConstacyclicCode cprime(std::int64_t q, std::int64_t m, std::int64_t r, std::int64_t ell,
                        std::shared_ptr<const FiniteField> field) {
    if (ell < 1 || ell > m - 1) throw EllOutOfRange("cprime needs 1 <= ell <= m-1");
    Subfield sf = subfield_for(field, q, m);
    return build_from_defining_set(sf, defining_set_cprime(q, m, r, ell), r);
}

ConstacyclicCode cfamily(std::int64_t q, std::int64_t m, std::int64_t r, std::int64_t ell,
                         std::shared_ptr<const FiniteField> field) {
    Subfield sf = subfield_for(field, q, m);
    return build_from_defining_set(sf, defining_set_c(q, m, r, ell), r);
}

Polynomial cfamily_dual_generator(std::int64_t q, std::int64_t m, std::int64_t r, std::int64_t ell,
                                  std::shared_ptr<const FiniteField> field) {
    if (r <= 1 || (q - 1) % r != 0) throw BadDivisor("need r | q-1 and r > 1");
    if (ell % r != r - 1) throw EllNotCanonical("need ell = r*ell1 + r-1");
    if (ell < 0 || ell >= (q - 1) * m - 1) throw EllOutOfRange("need r-1 <= ell < (q-1)m - 1");
    Subfield sf = subfield_for(field, q, m);
    const std::int64_t N = sf.field->order();
    std::vector<std::int64_t> idx;
    for (std::int64_t i = 0; i < N; ++i) {
        const std::int64_t w = wt_q(i, q, m);
        if (w <= ell && w % r == (r - 1) % r) idx.push_back(i);
    }
    DefiningSet D = DefiningSet::custom(N, std::move(idx));
    Polynomial g = Polynomial::one(sf);
    for (std::int64_t leader : coset_leaders_of(D, q)) g = g * minimal_poly(leader, sf);
    return g;
}

std::int64_t cprime_dimension(std::int64_t q, std::int64_t m, std::int64_t r, std::int64_t ell) {
    if (r <= 1 || (q - 1) % r != 0) throw BadDivisor("need r | q-1 and r > 1");
    if (ell < 1 || ell > m) throw EllOutOfRange("need 1 <= ell <= m");
    BigInt sum = 0;
    for (std::int64_t i = 0; i <= ell; ++i) sum += binomial(m, i) * big_pow(q - 1, i);
    const BigInt k = (big_pow(q, m) - sum) / r;
    return static_cast<std::int64_t>(k);
}

std::int64_t cprime_bch_formula_lower(std::int64_t q, std::int64_t m, std::int64_t r, std::int64_t ell) {
    (void)m;
    return (ipow(q, ell + 1) - 1 - 2 * (q - 1)) / (r * (q - 1)) + 2;
}

std::int64_t cfamily_canonical_ell(std::int64_t q, std::int64_t m, std::int64_t r, std::int64_t ell) {
    if (r <= 1 || (q - 1) % r != 0) throw BadDivisor("need r | q-1 and r > 1");
    if (ell < 0 || ell >= (q - 1) * m - 1) throw EllOutOfRange("need 0 <= ell < (q-1)m - 1");
    const std::int64_t ell1 = ell / r, ell0 = ell % r;
    if (ell1 == 0 && ell0 <= r - 2) return -1;  // zero code
    const std::int64_t ell2 = (ell0 == r - 1) ? ell1 : ell1 - 1;
    return r * ell2 + r - 1;
}

std::int64_t cfamily_dimension(std::int64_t q, std::int64_t m, std::int64_t r, std::int64_t ell) {
    const std::int64_t ellc = cfamily_canonical_ell(q, m, r, ell);
    if (ellc < 0) return 0;
    const std::int64_t ell1 = (ellc - (r - 1)) / r;
    BigInt k = 0;
    for (std::int64_t t = 0; t <= ell1; ++t)
        for (std::int64_t j = 0; j <= m; ++j) {
            const std::int64_t top = t * r + r - 1 - j * q;
            const BigInt term = binomial(m, j) * binomial(top + m - 1, top);
            k += (j % 2 == 0) ? term : -term;
        }
    return static_cast<std::int64_t>(k);
}

std::int64_t cfamily_dimension_upper(std::int64_t q, std::int64_t m, std::int64_t r, std::int64_t ell) {
    const std::int64_t ellc = cfamily_canonical_ell(q, m, r, ell);
    if (ellc < 0) return 0;
    const std::int64_t ell2 = (ellc + 1 + q - 2) / (q - 1);  // ceil((ell+1)/(q-1))
    BigInt sum = 0;
    for (std::int64_t t = 0; t <= m - ell2; ++t) sum += binomial(m, t) * big_pow(q - 1, t);
    return static_cast<std::int64_t>((big_pow(q, m) - sum) / r);
}

ConstacyclicCode dilix(std::int64_t q, std::int64_t m, std::int64_t h, std::shared_ptr<const FiniteField> field) {
    if (h < 1 || h > m - 1) throw HOutOfRange("need 1 <= h <= m-1");
    Subfield sf = subfield_for(field, q, m);
    const std::int64_t N = sf.field->order();
    std::vector<std::int64_t> idx;
    for (std::int64_t a = 1; a < N; ++a)
        if (wt(a, q, m) <= h) idx.push_back(a);
    return build_from_defining_set(sf, DefiningSet::custom(N, std::move(idx)), 1);
}

std::int64_t dilix_dimension(std::int64_t q, std::int64_t m, std::int64_t h) {
    BigInt sum = 0;
    for (std::int64_t i = 0; i <= h; ++i) sum += binomial(m, i) * big_pow(q - 1, i);
    return static_cast<std::int64_t>(big_pow(q, m) - sum);
}

CompanionSequence companion_sequence(std::shared_ptr<const FiniteField> field, std::int64_t q, std::int64_t m,
                                     std::int64_t count) {
    Subfield sf = subfield_for(field, q, m);
    const FiniteField* F = sf.field;
    if (count > F->order()) throw CountTooLarge("count exceeds q^m - 1");
    const auto tabs = SymbolTables::get(sf);
    const Polynomial mb = minimal_poly(1, sf);  // minimal polynomial of b over GF(q), degree m
    std::vector<std::uint8_t> neg_eps(static_cast<std::size_t>(m));
    for (std::int64_t j = 0; j < m; ++j)
        neg_eps[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(sf.index_of(-mb.coeff(static_cast<int>(j))));

    CompanionSequence seq;
    seq.sf = sf;
    seq.m = m;
    seq.points.reserve(static_cast<std::size_t>(count));
    Word p(static_cast<std::size_t>(m), 0);
    p[0] = 1;
    for (std::int64_t i = 0; i < count; ++i) {
        seq.points.push_back(p);
        // verify b^i = <p, (1, b, ..., b^{m-1})>
        FieldElement acc = F->zero();
        for (std::int64_t j = 0; j < m; ++j)
            acc = acc + sf.element(p[static_cast<std::size_t>(j)]) * F->generator().pow(j);
        if (acc != F->generator().pow(i)) throw Error("companion sequence does not track powers of b");
        // p <- p M  (shift with feedback through the last coordinate)
        const std::uint8_t top = p[static_cast<std::size_t>(m - 1)];
        for (std::int64_t j = m - 1; j > 0; --j)
            p[static_cast<std::size_t>(j)] =
                tabs->a(p[static_cast<std::size_t>(j - 1)], tabs->m(top, neg_eps[static_cast<std::size_t>(j)]));
        p[0] = tabs->m(top, neg_eps[0]);
    }
    return seq;
}

namespace {

MonomialSpace gen_bounded(MonomialSpace::Variant v, std::int64_t q, std::int64_t m, std::int64_t r, std::int64_t ell,
                          std::int64_t mod, std::int64_t residue) {
    MonomialSpace s;
    s.variant = v;
    s.q = q;
    s.m = m;
    s.r = r;
    s.ell = ell;
    std::vector<int> tuple(static_cast<std::size_t>(m), 0);
    // lexicographic sweep over [0, q-1]^m with running-sum pruning
    const auto rec = [&](auto&& self, std::int64_t pos, std::int64_t sum) -> void {
        if (pos == m) {
            if (sum % mod == residue % mod) s.exponents.push_back(tuple);
            return;
        }
        for (int v2 = 0; v2 <= q - 1 && sum + v2 <= ell; ++v2) {
            tuple[static_cast<std::size_t>(pos)] = v2;
            self(self, pos + 1, sum + v2);
        }
        tuple[static_cast<std::size_t>(pos)] = 0;
    };
    rec(rec, 0, 0);
    return s;
}

}  // namespace

MonomialSpace monomial_space_m(std::int64_t q, std::int64_t m, std::int64_t r, std::int64_t ell) {
    return gen_bounded(MonomialSpace::Variant::M, q, m, r, ell, r, r - 1);
}

MonomialSpace monomial_space_tilde(std::int64_t q, std::int64_t m, std::int64_t r, std::int64_t ell) {
    return gen_bounded(MonomialSpace::Variant::TildeM, q, m, r, ell, q - 1, ell % (q - 1));
}

MonomialSpace monomial_space_ngrm(std::int64_t q, std::int64_t m, std::int64_t r, std::int64_t ell) {
    return gen_bounded(MonomialSpace::Variant::NgrmP, q, m, r, ell, r, 0);
}

MonomialSpace monomial_space_homogeneous(std::int64_t q, std::int64_t m, std::int64_t ell) {
    MonomialSpace s;
    s.variant = MonomialSpace::Variant::HomogeneousA;
    s.q = q;
    s.m = m;
    s.r = 1;
    s.ell = ell;
    std::set<std::vector<int>> reduced;
    std::vector<int> tuple(static_cast<std::size_t>(m), 0);
    const auto rec = [&](auto&& self, std::int64_t pos, std::int64_t left) -> void {
        if (pos == m - 1) {
            tuple[static_cast<std::size_t>(pos)] = static_cast<int>(left);
            std::vector<int> t(tuple);
            for (auto& x : t)
                if (x > 0) x = static_cast<int>((x - 1) % (q - 1) + 1);
            reduced.insert(std::move(t));
            return;
        }
        for (std::int64_t v = 0; v <= left; ++v) {
            tuple[static_cast<std::size_t>(pos)] = static_cast<int>(v);
            self(self, pos + 1, left - v);
        }
    };
    rec(rec, 0, ell);
    s.exponents.assign(reduced.begin(), reduced.end());
    return s;
}

GeneratorMatrix evaluation_code(const MonomialSpace& space, const CompanionSequence& points) {
    if (space.q != points.sf.q || space.m != points.m) throw ShapeMismatch("monomial space and points disagree");
    const auto tabs = SymbolTables::get(points.sf);
    const std::int64_t n = static_cast<std::int64_t>(points.points.size());
    std::vector<Word> rows;
    rows.reserve(space.exponents.size());
    for (const auto& expo : space.exponents) {
        Word row(static_cast<std::size_t>(n));
        for (std::int64_t i = 0; i < n; ++i) {
            std::uint8_t v = 1;  // empty product, 0^0 = 1
            const Word& p = points.points[static_cast<std::size_t>(i)];
            for (std::int64_t j = 0; j < space.m; ++j)
                v = tabs->m(v, tabs->p(p[static_cast<std::size_t>(j)], expo[static_cast<std::size_t>(j)]));
            row[static_cast<std::size_t>(i)] = v;
        }
        rows.push_back(std::move(row));
    }
    return GeneratorMatrix(tabs, n, std::move(rows));
}

NgrmCode ngrm(std::int64_t q, std::int64_t m, std::int64_t r, std::int64_t h, std::int64_t ell0,
              std::shared_ptr<const FiniteField> field) {
    if (r < 1 || (q - 1) % r != 0) throw BadDivisor("need r | q-1");
    const std::int64_t ell = (q - 1) * h + ell0;
    if (h < 0 || ell0 < 0 || ell0 > q - 2 || ell0 % r != 0 || ell >= (q - 1) * m)
        throw BadEllDecomposition("need ell = (q-1)h + ell0 < (q-1)m with ell0 = 0 mod r");
    Subfield sf = subfield_for(field, q, m);
    const std::int64_t n = sf.field->order() / r;
    NgrmCode out{evaluation_code(monomial_space_ngrm(q, m, r, ell), companion_sequence(field, q, m, n)), ell, h, ell0,
                 0, 0};
    for (std::int64_t j = 0; j <= n; ++j)
        if (wt_q(j * r, q, m) <= ell) ++out.dim_formula;
    out.d_formula = ((q - ell0) * ipow(q, m - h - 1) - 1) / r;
    return out;
}

PrmParams prm_params(std::int64_t q, std::int64_t m, std::int64_t h) {
    if (h < 1 || h > (m - 1) * (q - 1)) throw HOutOfRange("need 1 <= h <= (m-1)(q-1)");
    PrmParams out;
    out.n = (ipow(q, m) - 1) / (q - 1);
    const std::int64_t u = (h - 1) / (q - 1), v = (h - 1) % (q - 1);
    out.d = (q - v) * ipow(q, m - 2 - u);
    BigInt k = 0;
    for (std::int64_t t = h; t > 0; t -= q - 1) k += bounded_placements(t, m, q - 1);
    out.k = static_cast<std::int64_t>(k);
    return out;
}

WeightDistribution prm2_weight_distribution(std::int64_t q, std::int64_t m) {
    if (m < 2) throw HOutOfRange("need m >= 2");
    WeightDistribution wd;
    wd.q = q;
    wd.n = (ipow(q, m) - 1) / (q - 1);
    wd.counts.assign(static_cast<std::size_t>(wd.n + 1), 0);
    wd.counts[0] = 1;
    BigInt a = big_pow(q, m) - 1;
    for (std::int64_t j = 1; j <= (m - 1) / 2; ++j) {
        BigInt num = big_pow(q, j * j + j);
        for (std::int64_t i = m - 2 * j; i <= m; ++i) num *= big_pow(q, i) - 1;
        BigInt den = 1;
        for (std::int64_t i = 1; i <= j; ++i) den *= big_pow(q, 2 * i) - 1;
        a += num / den;
    }
    wd.counts[static_cast<std::size_t>(ipow(q, m - 1))] = a;
    for (std::int64_t j = 1; j <= m / 2; ++j)
        for (std::int64_t tau : {1, -1}) {
            const std::int64_t w = ipow(q, m - 1) - tau * ipow(q, m - 1 - j);
            BigInt num = big_pow(q, j * j) * (big_pow(q, j) + tau);
            for (std::int64_t i = m - 2 * j + 1; i <= m; ++i) num *= big_pow(q, i) - 1;
            BigInt den = 2;
            for (std::int64_t i = 1; i <= j; ++i) den *= big_pow(q, 2 * i) - 1;
            wd.counts[static_cast<std::size_t>(w)] += num / den;
        }
    return wd;
}

DistanceWitness distance_witness(std::int64_t q, std::int64_t m, std::int64_t r, std::int64_t ell,
                                 std::shared_ptr<const FiniteField> field) {
    if (r <= 1 || (q - 1) % r != 0) throw BadDivisor("need r | q-1 and r > 1");
    if (ell < r - 1 || ell >= (q - 1) * m - 1) throw EllNotDecomposable("need r-1 <= ell < (q-1)m - 1");
    const std::int64_t ell1 = ell / (q - 1), ell0 = ell % (q - 1);
    if (ell0 % r != r - 1) throw EllNotDecomposable("need ell0 = r-1 mod r in ell = (q-1)ell1 + ell0");
    Subfield sf = subfield_for(field, q, m);
    const FiniteField* F = sf.field;
    const std::int64_t n = F->order() / r;
    const FieldElement omega = F->from_log(F->order() / (q - 1));
    const CompanionSequence seq = companion_sequence(field, q, m, n);

    DistanceWitness out;
    out.codeword.assign(static_cast<std::size_t>(n), 0);
    for (std::int64_t i = 0; i < n; ++i) {
        const Word& pt = seq.points[static_cast<std::size_t>(i)];
        bool zero = false;
        for (std::int64_t j = 0; j < ell1; ++j) zero |= pt[static_cast<std::size_t>(j)] != 0;
        if (zero) continue;
        const FieldElement y = sf.element(pt[static_cast<std::size_t>(ell1)]);
        FieldElement v = y.pow(r - 1);
        for (std::int64_t t = 1; t <= (ell0 - r + 1) / r; ++t) v = v * (y.pow(r) - omega.pow(r * t));
        out.codeword[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(sf.index_of(v));
    }
    for (auto s : out.codeword) out.weight += s != 0;

    const std::int64_t expected = (q - ell0 + r - 2) * ipow(q, m - 1 - ell1) / r;
    if (out.weight != expected) throw Error("witness weight mismatch");
    if (!contains(cfamily(q, m, r, ell, field), out.codeword)) throw Error("witness is not a codeword");
    return out;
}

std::int64_t unit_digit_solution_count(std::int64_t q, std::int64_t r, std::int64_t t) {
    return ipow(q - 1, t) / r;
}

BigInt bounded_placements(std::int64_t t, std::int64_t m, std::int64_t s) {
    BigInt total = 0;
    for (std::int64_t j = 0; j <= m; ++j) {
        const std::int64_t top = t - j * (s + 1);
        const BigInt term = binomial(m, j) * binomial(top + m - 1, top);
        total += (j % 2 == 0) ? term : -term;
    }
    return total;
}

PredictedParams predict_params(FamilyTag family, std::int64_t q, std::int64_t m, std::int64_t r, std::int64_t ell) {
    if (r <= 1 || (q - 1) % r != 0) throw BadDivisor("need r | q-1 and r > 1");
    PredictedParams out;
    out.n = (ipow(q, m) - 1) / r;

    if (family == FamilyTag::Cprime || family == FamilyTag::CprimeDual) {
        if (ell < 1 || ell > m - 1) throw OutOfTheoremRange("dimension formula needs 1 <= ell <= m-1");
        const std::int64_t k = cprime_dimension(q, m, r, ell);
        if (family == FamilyTag::Cprime) {
            out.k = k;
            if (r == q - 1 && ell == 1) {
                out.dkind = PredictedParams::DKind::Exact;
                out.d = 3;
                out.rule = "hamming-parameters";
            } else if (q % 2 == 1 && r > 1 && r == (q - 1) / 2 && ell == 1) {
                out.dkind = PredictedParams::DKind::Exact;
                out.d = 4;
                out.rule = "half-divisor-ell1";
            } else if (q % 3 == 1 && r > 1 && r == (q - 1) / 3 && ell == 1) {
                out.dkind = PredictedParams::DKind::Range;
                out.d_lo = 5;
                out.d_hi = 6;
                out.rule = "third-divisor-ell1";
            } else {
                out.dkind = PredictedParams::DKind::Range;
                out.d_lo = cprime_bch_formula_lower(q, m, r, ell);
                out.d_hi = -1;
                out.rule = "bch-run";
            }
        } else {
            out.k = out.n - k;
            if (r == q - 1 && ell == 1) {
                out.dkind = PredictedParams::DKind::Exact;
                out.d = ipow(q, m - 1);
                out.rule = "simplex-parameters";
            } else if (q % 2 == 1 && r > 1 && r == (q - 1) / 2 && ell == 1) {
                out.dkind = PredictedParams::DKind::Exact;
                out.d = (m % 2 == 1) ? 2 * ipow(q, m - 1) - ipow(q, (m - 1) / 2)
                                     : 2 * ipow(q, m - 1) - (q - 1) * ipow(q, (m - 2) / 2);
                out.rule = "two-block-trace";
            } else {
                out.dkind = PredictedParams::DKind::Range;
                out.d_lo = ipow(q, m - ell);
                out.d_hi = -1;
                out.rule = "dual-bch-run";
            }
        }
        return out;
    }

    // C family and its dual
    const std::int64_t ellc = cfamily_canonical_ell(q, m, r, ell);
    const std::int64_t k = cfamily_dimension(q, m, r, ell);
    if (family == FamilyTag::Cfamily) {
        out.k = k;
        if (ellc < 0) {
            out.dkind = PredictedParams::DKind::None;
            out.rule = "zero-code";
            return out;
        }
        const std::int64_t ell1 = ellc / (q - 1), ell0 = ellc % (q - 1);
        if (r == 2) {
            out.dkind = PredictedParams::DKind::Exact;
            out.d = (q - ell0) / 2 * ipow(q, m - 1 - ell1);
            out.rule = "r2-exact";
        } else if (r == q - 1 && ell0 == q - 2) {
            out.dkind = PredictedParams::DKind::Exact;
            out.d = 3 * ipow(q, m - 2 - ell1);
            out.rule = "prm-scalar-equivalent";
        } else if (ell1 == m - 1) {
            out.dkind = PredictedParams::DKind::Exact;
            out.d = (q - ell0 + r - 2) / r;
            out.rule = "top-block";
        } else if (ell1 == m - 2 && ell0 == r - 1) {
            out.dkind = PredictedParams::DKind::Exact;
            out.d = (q - 1) * (q - r + 2) / r;
            out.rule = "penultimate-block";
        } else {
            out.dkind = PredictedParams::DKind::Range;
            out.d_lo = ((q - ell0) * ipow(q, m - ell1 - 1) - 2) / r + 1;
            out.d_hi = (q - ell0 + r - 2) * ipow(q, m - 1 - ell1) / r;
            if (r > 2 && ellc <= (q - 1) * (m - 1) - 1 && ell1 <= m - 2)
                out.d_hi = std::min(out.d_hi, (q - 1) / r * (q - ell0 + 1) * ipow(q, m - 2 - ell1));
            out.rule = "bounds";
        }
        return out;
    }

    // CfamilyDual
    out.k = out.n - k;
    if (ellc < 0) {
        out.dkind = PredictedParams::DKind::Exact;
        out.d = 1;
        out.rule = "full-space";
        return out;
    }
    const std::int64_t ell1 = ellc / (q - 1), ell0 = ellc % (q - 1);
    if (r == 2) {
        out.dkind = PredictedParams::DKind::Exact;
        out.d = (ell0 < q - 2) ? (3 + ell0) / 2 * ipow(q, ell1) : ipow(q, ell1 + 1);
        out.rule = "r2-dual-exact";
    } else if (r == q - 1 && ell0 == q - 2) {
        out.dkind = PredictedParams::DKind::Exact;
        out.d = ipow(q, ell1 + 1);
        out.rule = "prm-dual";
    } else {
        out.dkind = PredictedParams::DKind::Range;
        out.d_lo = (ell0 + 1) * ipow(q, ell1) / r + 1;
        out.d_hi = -1;
        out.rule = "dual-bch-run";
    }
    return out;
}

}  // namespace constacode

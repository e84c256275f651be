#include "constacode/code.hpp"

#include <algorithm>
#include <numeric>

#include "constacode/bigint.hpp"

namespace constacode {

ConstacyclicCode::ConstacyclicCode(Subfield sf, std::int64_t n, FieldElement lambda, Polynomial g, Polynomial h,
                                   std::int64_t root_log, std::optional<DefiningSet> defining_set)
    : sf_(sf), n_(n), lambda_(lambda), g_(std::move(g)), h_(std::move(h)), root_log_(root_log),
      D_(std::move(defining_set)) {}

std::int64_t ConstacyclicCode::r() const { return lambda_.multiplicative_order(); }

const DefiningSet& ConstacyclicCode::defining_set() const {
    if (!D_) {
        const std::int64_t N = sf_.field->order();
        const std::int64_t rr = r();
        const FieldElement rt = root();
        std::vector<std::int64_t> idx;
        for (std::int64_t i = 1 % rr; i < N; i += rr)
            if (g_(rt.pow(i)).is_zero()) idx.push_back(i);
        D_ = DefiningSet::custom(N, std::move(idx));
    }
    return *D_;
}

std::vector<std::int64_t> ConstacyclicCode::nonzero_leaders() const {
    const DefiningSet& D = defining_set();
    const std::int64_t N = sf_.field->order();
    const std::int64_t rr = r();
    std::vector<std::int64_t> out;
    std::vector<bool> seen(static_cast<std::size_t>(N), false);
    for (std::int64_t i = 1 % rr; i < N; i += rr) {
        if (seen[static_cast<std::size_t>(i)] || D.contains(i)) continue;
        std::int64_t j = i;
        do {
            seen[static_cast<std::size_t>(j)] = true;
            j = j * sf_.q % N;
        } while (j != i);
        out.push_back(i);
    }
    return out;
}

namespace {

std::int64_t canonical_root_log(const Subfield& sf, FieldElement lambda, std::int64_t n) {
    const std::int64_t N = sf.field->order();
    const std::int64_t target = lambda.is_zero() ? -1 : lambda.log();
    for (std::int64_t u = 1; u < N || u == 1; ++u) {
        if (std::gcd(u, N) != 1) continue;
        if (u * n % N == target % N) return u;
    }
    throw Error("no primitive root matches lambda");
}

}  // namespace

ConstacyclicCode from_generator(const Polynomial& g, FieldElement lambda, std::int64_t n,
                                std::optional<std::int64_t> root_log, std::optional<DefiningSet> defining_set) {
    const Subfield sf = g.subfield();
    if (lambda.is_zero() || !sf.contains(lambda)) throw WrongSubfield("lambda must be in GF(q)*");
    const std::int64_t r = lambda.multiplicative_order();
    if (sf.field->order() != r * n) throw LengthMismatch("ambient field must satisfy q^m - 1 = r n");
    const Polynomial xnl = Polynomial::x_n_minus(sf, n, lambda);
    auto dm = poly_divmod(xnl, g.monic());
    if (!dm.remainder.is_zero()) throw NotADivisorOfXnMinusLambda("g does not divide x^n - lambda");
    const std::int64_t rl = root_log ? *root_log : canonical_root_log(sf, lambda, n);
    return ConstacyclicCode(sf, n, lambda, g.monic(), dm.quotient, rl, std::move(defining_set));
}

ConstacyclicCode dual(const ConstacyclicCode& code) {
    const Polynomial ghat = reciprocal_check_poly(code.check());
    const FieldElement lam_inv = code.lambda().inverse();
    const std::int64_t N = code.field()->order();
    // complement of D within the residue class {i = 1 mod r}; valid w.r.t.
    // the dual's root = root^{-1}
    const DefiningSet& D = code.defining_set();
    const std::int64_t r = code.r();
    std::vector<std::int64_t> idx;
    for (std::int64_t i = 1 % r; i < N; i += r)
        if (!D.contains(i)) idx.push_back(i);
    return from_generator(ghat, lam_inv, code.n(), (N - code.root_log()) % N,
                          DefiningSet::custom(N, std::move(idx)));
}

std::int64_t bch_lower_bound(const ConstacyclicCode& code, std::int64_t e_cap) {
    const DefiningSet& D = code.defining_set();
    if (D.size() == 0) return 1;
    const std::int64_t n = code.n();
    const std::int64_t N = code.field()->order();
    const std::int64_t r = code.r();
    if (D.size() == n) return n;  // zero code: clamp at n
    const std::int64_t cap = (e_cap > 0) ? std::min(e_cap, n) : n;
    std::int64_t best = 1;
    std::vector<char> present(static_cast<std::size_t>(n));
    for (std::int64_t e = 1; e <= cap; ++e) {
        if (std::gcd(e, n) != 1) continue;
        const std::int64_t stride = r * e % N;
        std::int64_t idx = 1 % N;
        for (std::int64_t h = 0; h < n; ++h) {
            present[static_cast<std::size_t>(h)] = D.contains(idx) ? 1 : 0;
            idx = (idx + stride) % N;
        }
        // longest circular run of 1s
        std::int64_t run = 0, cur = 0;
        for (std::int64_t h = 0; h < 2 * n; ++h) {
            if (present[static_cast<std::size_t>(h % n)]) {
                ++cur;
                run = std::max(run, std::min(cur, n));
            } else {
                cur = 0;
            }
        }
        best = std::max(best, std::min(run + 1, n));
    }
    return best;
}

Restriction restrict_cyclic(const Polynomial& g_N, std::int64_t r) {
    const Subfield sf = g_N.subfield();
    const std::int64_t N = sf.field->order();
    if (r < 1 || N % r != 0) throw LengthNotDivisible("r must divide q^m - 1");
    const std::int64_t n = N / r;
    const Polynomial xN1 = Polynomial::x_n_minus(sf, N, sf.field->one());
    if (!poly_divmod(xN1, g_N.monic()).remainder.is_zero())
        throw NotADivisor("g does not divide x^N - 1");
    const FieldElement lambda = sf.field->from_log(n % N);
    Restriction res{Polynomial::one(sf), {}};
    for (std::int64_t i = 0; i < r; ++i) {
        const Polynomial gi = poly_gcd(g_N, Polynomial::x_n_minus(sf, n, lambda.pow(i)));
        if (!gi.is_one()) res.ind.push_back(i);
        if (i == 1 % r) res.g_underline = gi;
    }
    return res;
}

Word encode(const ConstacyclicCode& code, const Word& message) {
    if (static_cast<std::int64_t>(message.size()) != code.k()) throw LengthMismatch("message length must be k");
    const auto tabs = SymbolTables::get(code.subfield());
    const auto g = code.generator().symbols();
    Word out(static_cast<std::size_t>(code.n()), 0);
    for (std::size_t i = 0; i < message.size(); ++i) {
        if (message[i] == 0) continue;
        for (std::size_t j = 0; j < g.size(); ++j)
            out[i + j] = tabs->a(out[i + j], tabs->m(message[i], static_cast<std::uint8_t>(g[j])));
    }
    return out;
}

bool contains(const ConstacyclicCode& code, const Word& word) {
    if (static_cast<std::int64_t>(word.size()) != code.n()) throw LengthMismatch("word length must be n");
    const auto tabs = SymbolTables::get(code.subfield());
    const auto g = code.generator().symbols();
    const int dg = code.generator().degree();
    Word rem(word);
    for (std::int64_t i = code.n() - 1; i >= dg; --i) {
        const std::uint8_t c = rem[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        for (int j = 0; j <= dg; ++j)  // g is monic
            rem[static_cast<std::size_t>(i - dg + j)] =
                tabs->s(rem[static_cast<std::size_t>(i - dg + j)], tabs->m(c, static_cast<std::uint8_t>(g[static_cast<std::size_t>(j)])));
    }
    return std::all_of(rem.begin(), rem.end(), [](std::uint8_t x) { return x == 0; });
}

GeneratorMatrix generator_matrix(const ConstacyclicCode& code) {
    const auto tabs = SymbolTables::get(code.subfield());
    const auto g = code.generator().symbols();
    std::vector<Word> rows;
    rows.reserve(static_cast<std::size_t>(code.k()));
    for (std::int64_t i = 0; i < code.k(); ++i) {
        Word row(static_cast<std::size_t>(code.n()), 0);
        for (std::size_t j = 0; j < g.size(); ++j) row[static_cast<std::size_t>(i) + j] = static_cast<std::uint8_t>(g[j]);
        rows.push_back(std::move(row));
    }
    return GeneratorMatrix(tabs, code.n(), std::move(rows));
}

bool code_equal(const ConstacyclicCode& a, const ConstacyclicCode& b) {
    if (a.q() != b.q() || a.n() != b.n()) throw ShapeMismatch("codes over different (q, n)");
    return code_equal(generator_matrix(a), generator_matrix(b));
}

bool code_equal(const ConstacyclicCode& a, const GeneratorMatrix& b) {
    return code_equal(generator_matrix(a), b);
}

Word trace_codeword(const ConstacyclicCode& code, const std::vector<FieldElement>& coeffs) {
    const auto leaders = code.nonzero_leaders();
    if (coeffs.size() != leaders.size()) throw LengthMismatch("one coefficient per non-conjugate nonzero");
    const FiniteField* F = code.field();
    const std::int64_t N = F->order();
    const Subfield sf = code.subfield();
    const FieldElement rt = code.root();
    std::vector<std::int64_t> msizes;
    for (std::size_t j = 0; j < leaders.size(); ++j) {
        const std::int64_t mj = static_cast<std::int64_t>(cyclotomic_coset(leaders[j], sf.q, N).size());
        msizes.push_back(mj);
        // a_j must lie in GF(q^{m_j})
        if (!coeffs[j].is_zero() && coeffs[j].log() % (N / (ipow(sf.q, mj) - 1)) != 0)
            throw WrongSubfield("coefficient outside GF(q^m_j)");
    }
    Word out(static_cast<std::size_t>(code.n()), 0);
    for (std::int64_t t = 0; t < code.n(); ++t) {
        FieldElement acc = F->zero();
        for (std::size_t j = 0; j < leaders.size(); ++j) {
            if (coeffs[j].is_zero()) continue;
            FieldElement y = coeffs[j] * rt.pow(-t * leaders[j] % N);
            FieldElement tr = F->zero();
            FieldElement yq = y;
            for (std::int64_t s = 0; s < msizes[j]; ++s) {
                tr = tr + yq;
                yq = yq.pow(sf.q);
            }
            acc = acc + tr;
        }
        out[static_cast<std::size_t>(t)] = static_cast<std::uint8_t>(sf.index_of(acc));
    }
    return out;
}

ConstacyclicCode residue_code(const ConstacyclicCode& cyclic, std::int64_t r) {
    const std::int64_t N = cyclic.n();
    if (r < 1 || N % r != 0) throw LengthNotDivisible("r must divide the cyclic length");
    if (cyclic.r() != 1) throw LengthMismatch("input must be a cyclic code");
    const Subfield sf = cyclic.subfield();
    const std::int64_t n = N / r;
    const FieldElement lambda = cyclic.root().pow(n);
    const auto tabs = SymbolTables::get(sf);
    // reduce every generator row mod x^n - lambda: x^(j) -> lambda^(j/n) x^(j mod n)
    const std::uint8_t lam_sym = static_cast<std::uint8_t>(sf.index_of(lambda));
    std::vector<Word> rows;
    const GeneratorMatrix gen = generator_matrix(cyclic);
    for (const Word& row : gen.rows()) {
        Word red(static_cast<std::size_t>(n), 0);
        for (std::int64_t j = 0; j < N; ++j) {
            std::uint8_t c = row[static_cast<std::size_t>(j)];
            if (c == 0) continue;
            for (std::int64_t t = 0; t < j / n; ++t) c = tabs->m(c, lam_sym);
            red[static_cast<std::size_t>(j % n)] = tabs->a(red[static_cast<std::size_t>(j % n)], c);
        }
        rows.push_back(std::move(red));
    }
    GeneratorMatrix reduced(tabs, n, std::move(rows));
    // generator polynomial of the residue ideal = gcd of all row polynomials
    // with x^n - lambda
    Polynomial g = Polynomial::x_n_minus(sf, n, lambda);
    for (const Word& row : reduced.rref()) {
        std::vector<FieldElement> c;
        c.reserve(row.size());
        for (auto s : row) c.push_back(sf.element(s));
        g = poly_gcd(g, Polynomial(sf, std::move(c)));
    }
    ConstacyclicCode res = from_generator(g, lambda, n, cyclic.root_log());
    if (res.k() != reduced.rank()) throw Error("residue row space is not an ideal");  // cannot happen
    return res;
}

}  // namespace constacode

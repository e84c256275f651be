#include "constacode/analysis.hpp"

#include <random>

#include "constacode/enumeration.hpp"
#include "constacode/families.hpp"

namespace constacode {

namespace {

WeightDistribution from_counts(std::int64_t n, std::int64_t q, const std::vector<std::uint64_t>& counts) {
    WeightDistribution wd;
    wd.n = n;
    wd.q = q;
    wd.counts.assign(counts.begin(), counts.end());
    return wd;
}

WeightDistribution distribution_of_matrix(const GeneratorMatrix& G, std::int64_t cap, int threads) {
    const std::int64_t k = G.rank();
    const std::int64_t direct = enumerable_size(G.q(), k);
    if (direct >= 0 && direct <= cap) return from_counts(G.n(), G.q(), enumerate_weights(G, cap, threads));
    const std::int64_t dual_size = enumerable_size(G.q(), G.n() - k);
    if (dual_size >= 0 && dual_size <= cap) {
        const GeneratorMatrix H = G.null_space();
        const WeightDistribution dual_wd = from_counts(G.n(), G.q(), enumerate_weights(H, cap, threads));
        return macwilliams(dual_wd, G.n(), G.n() - k, G.q());
    }
    throw TooLargeToEnumerate("q^k = " + (direct < 0 ? std::string(">2^62") : std::to_string(direct)) +
                              " and q^(n-k) = " +
                              (dual_size < 0 ? std::string(">2^62") : std::to_string(dual_size)) + " both exceed cap " +
                              std::to_string(cap));
}

}  // namespace

WeightDistribution weight_distribution(const GeneratorMatrix& G, std::int64_t cap, int threads) {
    return distribution_of_matrix(G, cap, threads);
}

WeightDistribution weight_distribution(const ConstacyclicCode& code, std::int64_t cap, int threads) {
    const std::int64_t k = code.k();
    const std::int64_t direct = enumerable_size(code.q(), k);
    if (direct >= 0 && direct <= cap)
        return from_counts(code.n(), code.q(), enumerate_weights(generator_matrix(code), cap, threads));
    const std::int64_t dual_size = enumerable_size(code.q(), code.n() - k);
    if (dual_size >= 0 && dual_size <= cap) {
        const WeightDistribution dual_wd =
            from_counts(code.n(), code.q(), enumerate_weights(generator_matrix(dual(code)), cap, threads));
        return macwilliams(dual_wd, code.n(), code.n() - k, code.q());
    }
    throw TooLargeToEnumerate("q^k = " + (direct < 0 ? std::string(">2^62") : std::to_string(direct)) +
                              " and q^(n-k) = " +
                              (dual_size < 0 ? std::string(">2^62") : std::to_string(dual_size)) + " both exceed cap " +
                              std::to_string(cap));
}

WeightDistribution macwilliams(const WeightDistribution& dist, std::int64_t n, std::int64_t k, std::int64_t q) {
    if (dist.n != n || static_cast<std::int64_t>(dist.counts.size()) != n + 1)
        throw InvalidDistribution("length mismatch");
    if (dist.counts[0] != 1) throw InvalidDistribution("A_0 must be 1");
    const BigInt size = big_pow(q, k);
    if (dist.total() != size) throw InvalidDistribution("counts do not sum to q^k");

    // binomial table up to n
    std::vector<std::vector<BigInt>> C(static_cast<std::size_t>(n + 1));
    for (std::int64_t i = 0; i <= n; ++i) {
        C[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(n + 1), 0);
        C[static_cast<std::size_t>(i)][0] = 1;
        for (std::int64_t j = 1; j <= i; ++j)
            C[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                C[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] +
                C[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
    }
    std::vector<BigInt> qm1pow(static_cast<std::size_t>(n + 1));
    qm1pow[0] = 1;
    for (std::int64_t i = 1; i <= n; ++i) qm1pow[static_cast<std::size_t>(i)] = qm1pow[static_cast<std::size_t>(i - 1)] * (q - 1);

    WeightDistribution out;
    out.n = n;
    out.q = q;
    out.counts.assign(static_cast<std::size_t>(n + 1), 0);
    for (std::int64_t w = 0; w <= n; ++w) {
        BigInt acc = 0;
        for (std::int64_t i = 0; i <= n; ++i) {
            if (dist.counts[static_cast<std::size_t>(i)] == 0) continue;
            // Krawtchouk K_w(i) = sum_h (-1)^h (q-1)^{w-h} C(i,h) C(n-i,w-h)
            BigInt kr = 0;
            for (std::int64_t h = 0; h <= w && h <= i; ++h) {
                if (w - h > n - i) continue;
                const BigInt term = C[static_cast<std::size_t>(i)][static_cast<std::size_t>(h)] *
                                    C[static_cast<std::size_t>(n - i)][static_cast<std::size_t>(w - h)] *
                                    qm1pow[static_cast<std::size_t>(w - h)];
                kr += (h % 2 == 0) ? term : -term;
            }
            acc += dist.counts[static_cast<std::size_t>(i)] * kr;
        }
        if (acc % size != 0 || acc < 0) throw InvalidDistribution("transform is not a weight distribution");
        out.counts[static_cast<std::size_t>(w)] = acc / size;
    }
    return out;
}

DistanceResult min_distance(const ConstacyclicCode& code, const MinDistanceOptions& opts) {
    DistanceResult res;
    if (code.k() == 0) {
        res.kind = DistanceResult::Kind::None;
        res.source = "zero-code";
        return res;
    }
    res.bch = bch_lower_bound(code, opts.bch_e_cap);
    res.lo = std::max<std::int64_t>(1, res.bch);
    if (opts.upper_hint) {
        res.witness = *opts.upper_hint;
        res.hi = res.witness;
    }
    if (res.hi >= 0 && res.lo == res.hi) {
        res.kind = DistanceResult::Kind::Exact;
        res.value = res.lo;
        res.source = "certificates";
        return res;
    }
    // fall back to exhaustive enumeration of the smaller side
    try {
        const WeightDistribution wd = weight_distribution(code, opts.cap, opts.threads);
        const auto d = wd.min_weight();
        res.kind = DistanceResult::Kind::Exact;
        res.value = d.value();
        res.enumerated = true;
        res.source = "enumeration";
        return res;
    } catch (const TooLargeToEnumerate&) {
    }
    // sample random codewords for a non-certified empirical upper bound
    if (opts.sample_count > 0) {
        std::mt19937_64 rng(opts.seed);
        std::uniform_int_distribution<std::int64_t> sym(0, code.q() - 1);
        Word msg(static_cast<std::size_t>(code.k()));
        std::int64_t best = code.n() + 1;
        for (std::int64_t s = 0; s < opts.sample_count; ++s) {
            bool all_zero = true;
            for (auto& x : msg) {
                x = static_cast<std::uint8_t>(sym(rng));
                all_zero &= x == 0;
            }
            if (all_zero) continue;
            const Word cw = encode(code, msg);
            std::int64_t w = 0;
            for (auto x : cw) w += x != 0;
            best = std::min(best, w);
        }
        if (best <= code.n()) res.sampled_upper = best;
    }
    res.kind = DistanceResult::Kind::Range;
    res.source = "range";
    return res;
}

SpherePackingResult sphere_packing_check(std::int64_t n, std::int64_t k, std::int64_t d, std::int64_t q) {
    SpherePackingResult out;
    BigInt ball = 0;
    for (std::int64_t i = 0; i <= (d - 1) / 2; ++i) ball += binomial(n, i) * big_pow(q - 1, i);
    const BigInt rhs = big_pow(q, n - k);
    out.satisfies = ball <= rhs;
    out.is_perfect = ball == rhs;
    if (d >= 2 && d % 2 == 0) {
        BigInt ball2 = 0;
        for (std::int64_t i = 0; i <= (d - 2) / 2; ++i) ball2 += binomial(n - 1, i) * big_pow(q - 1, i);
        out.even_refinement = ball2 <= big_pow(q, n - 1 - k);
    }
    return out;
}

std::int64_t sphere_packing_optimal_d(std::int64_t n, std::int64_t k, std::int64_t q) {
    std::int64_t best = 1;
    for (std::int64_t d = 1; d <= n; ++d) {
        const SpherePackingResult r = sphere_packing_check(n, k, d, q);
        if (!r.satisfies || (r.even_refinement && !*r.even_refinement)) break;
        best = d;
    }
    return best;
}

bool self_dual_check(const ConstacyclicCode& code) {
    if (2 * code.k() != code.n()) return false;
    const ConstacyclicCode d = dual(code);
    return d.lambda() == code.lambda() && d.generator().monic() == code.generator().monic();
}

WeightDistribution table12_closed_form(std::int64_t q, std::int64_t m) {
    bool prime = q >= 2;
    for (std::int64_t t = 2; t * t <= q; ++t)
        if (q % t == 0) prime = false;
    if (!prime || q % 2 == 0 || (q - 1) / 2 <= 1) throw HypothesisViolated("need q an odd prime with (q-1)/2 > 1");
    if (m < 2) throw HypothesisViolated("need m >= 2");
    WeightDistribution wd;
    wd.q = q;
    wd.n = 2 * (ipow(q, m) - 1) / (q - 1);
    wd.counts.assign(static_cast<std::size_t>(wd.n + 1), 0);
    wd.counts[0] = 1;
    const BigInt qm1 = big_pow(q, m) - 1;
    const std::int64_t base = 2 * ipow(q, m - 1);
    // rows with count 0 may name a weight beyond n (m = 2 degenerates); skip them
    const auto add = [&](std::int64_t w, const BigInt& c) {
        if (c == 0) return;
        if (w < 0 || w > wd.n) throw Error("table weight outside [0, n]");
        wd.counts[static_cast<std::size_t>(w)] += c;
    };
    if (m % 2 == 1) {
        const std::int64_t h = ipow(q, (m - 1) / 2);
        add(base - h, BigInt(h) * (h + 1) * qm1);
        add(base, qm1 * (big_pow(q, m) - 2 * big_pow(q, m - 1) + 1));
        add(base + h, BigInt(h) * (h - 1) * qm1);
    } else {
        const std::int64_t h = ipow(q, (m - 2) / 2);   // q^{(m-2)/2}
        const std::int64_t g = ipow(q, m / 2);         // q^{m/2}
        add(base - (q - 1) * h, BigInt(h + 1) * (g - 1) * qm1 / ((q * q) - 1));
        add(base - 2 * h, BigInt(g + 1) * (g + 1) * (q - 1) * qm1 / (4 * (q + 1)));
        add(base - h, BigInt(h) * (g + 1) * qm1);
        add(base, (big_pow(q, m + 1) - 3 * big_pow(q, m) + q + 1) * qm1 / (2 * (q - 1)));
        add(base + h, BigInt(h) * (g - 1) * qm1);
        add(base + 2 * h, BigInt(g - 1) * (g - 1) * (q - 1) * qm1 / (4 * (q + 1)));
        add(base + (q - 1) * h, BigInt(h - 1) * (g + 1) * qm1 / ((q * q) - 1));
    }
    return wd;
}

Table12Report table1_table2_check(std::int64_t q, std::int64_t m, std::int64_t cap, int threads) {
    Table12Report rep;
    rep.closed_form = table12_closed_form(q, m);
    const ConstacyclicCode c = cprime(q, m, (q - 1) / 2, 1);
    rep.enumerated = weight_distribution(dual(c), cap, threads);
    rep.match = rep.closed_form == rep.enumerated;
    return rep;
}

}  // namespace constacode

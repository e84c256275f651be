#include "constacode/enumeration.hpp"

#include <bit>
#include <thread>

#include "constacode/errors.hpp"

namespace constacode {

std::int64_t enumerable_size(std::int64_t q, std::int64_t k) {
    std::int64_t v = 1;
    for (std::int64_t i = 0; i < k; ++i) {
        if (v > (std::int64_t(1) << 62) / q) return -1;
        v *= q;
    }
    return v;
}

namespace {

// Reflected mixed-radix Gray walk over digits [t, k): calls step(j, old, nxt)
// for every single-digit change, visit() after each (and once up front).
template <class Visit, class Step>
void gray_walk(int t, int k, int q, Visit&& visit, Step&& step) {
    const int nd = k - t;
    std::vector<int> a(static_cast<std::size_t>(nd), 0);
    std::vector<int> f(static_cast<std::size_t>(nd) + 1);
    std::vector<int> o(static_cast<std::size_t>(nd), 1);
    for (int j = 0; j <= nd; ++j) f[static_cast<std::size_t>(j)] = j;
    visit();
    if (nd == 0 || q < 2) return;
    for (;;) {
        const int j = f[0];
        f[0] = 0;
        if (j == nd) return;
        const int old = a[static_cast<std::size_t>(j)];
        const int nxt = old + o[static_cast<std::size_t>(j)];
        a[static_cast<std::size_t>(j)] = nxt;
        step(t + j, old, nxt);
        visit();
        if (nxt == 0 || nxt == q - 1) {
            o[static_cast<std::size_t>(j)] = -o[static_cast<std::size_t>(j)];
            f[static_cast<std::size_t>(j)] = f[static_cast<std::size_t>(j) + 1];
            f[static_cast<std::size_t>(j) + 1] = j + 1;
        }
    }
}

struct Job {
    const GeneratorMatrix* G;
    int k, t, q, threads;
    std::int64_t n;
};

// generic path: one byte per symbol, table-driven addition
void run_generic(const Job& job, int tid, std::vector<std::uint64_t>& counts) {
    const SymbolTables& tb = job.G->tables();
    const auto& rows = job.G->rref();
    const std::int64_t n = job.n;
    const int q = job.q, k = job.k, t = job.t;
    // scaled[j][s-1] = s * row_j
    std::vector<std::vector<Word>> scaled(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j)
        for (int s = 1; s < q; ++s) {
            Word w(static_cast<std::size_t>(n));
            for (std::int64_t i = 0; i < n; ++i)
                w[static_cast<std::size_t>(i)] = tb.m(static_cast<std::uint8_t>(s), rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]);
            scaled[static_cast<std::size_t>(j)].push_back(std::move(w));
        }

    std::int64_t prefixes = 1;
    for (int i = 0; i < t; ++i) prefixes *= q;
    std::vector<int> digit(static_cast<std::size_t>(t));
    Word cur(static_cast<std::size_t>(n));
    for (std::int64_t P = 0; P < prefixes; ++P) {
        if (P % job.threads != tid) continue;
        std::int64_t v = P;
        for (int i = 0; i < t; ++i) {
            digit[static_cast<std::size_t>(i)] = static_cast<int>(v % q);
            v /= q;
        }
        std::fill(cur.begin(), cur.end(), 0);
        std::int64_t wt = 0;
        for (int i = 0; i < t; ++i) {
            if (digit[static_cast<std::size_t>(i)] == 0) continue;
            const Word& row = scaled[static_cast<std::size_t>(i)][static_cast<std::size_t>(digit[static_cast<std::size_t>(i)] - 1)];
            for (std::int64_t x = 0; x < n; ++x)
                cur[static_cast<std::size_t>(x)] = tb.a(cur[static_cast<std::size_t>(x)], row[static_cast<std::size_t>(x)]);
        }
        for (std::int64_t x = 0; x < n; ++x) wt += cur[static_cast<std::size_t>(x)] != 0;

        gray_walk(
            t, k, q, [&] { ++counts[static_cast<std::size_t>(wt)]; },
            [&](int j, int old, int nxt) {
                const std::uint8_t ds = tb.s(static_cast<std::uint8_t>(nxt), static_cast<std::uint8_t>(old));
                const Word& row = scaled[static_cast<std::size_t>(j)][ds - 1];
                for (std::int64_t x = 0; x < n; ++x) {
                    const std::uint8_t o = cur[static_cast<std::size_t>(x)];
                    const std::uint8_t nw = tb.a(o, row[static_cast<std::size_t>(x)]);
                    wt += (nw != 0) - (o != 0);
                    cur[static_cast<std::size_t>(x)] = nw;
                }
            });
    }
}

// characteristic-2 path for q in {2, 4}: codeword as e bit planes, addition
// is plane-wise XOR, weight is popcount of the OR of the planes
void run_packed(const Job& job, int tid, std::vector<std::uint64_t>& counts) {
    const SymbolTables& tb = job.G->tables();
    const auto& rows = job.G->rref();
    const std::int64_t n = job.n;
    const int q = job.q, k = job.k, t = job.t;
    const int e = (q == 2) ? 1 : 2;
    const std::size_t W = static_cast<std::size_t>((n + 63) / 64);

    // GF(2)-coordinates of each symbol in the basis {1, w}
    std::vector<int> bits(static_cast<std::size_t>(q));
    {
        const Subfield& sf = tb.sf;
        for (int s = 0; s < q; ++s) {
            const FieldElement x = sf.element(s);
            for (int b = 0; b < q; ++b) {
                FieldElement y = sf.field->zero();
                if (b & 1) y = y + sf.field->one();
                if (e == 2 && (b & 2)) y = y + sf.omega();
                if (y == x) {
                    bits[static_cast<std::size_t>(s)] = b;
                    break;
                }
            }
        }
    }
    const auto pack = [&](const Word& w, std::vector<std::uint64_t>& planes) {
        planes.assign(W * static_cast<std::size_t>(e), 0);
        for (std::int64_t i = 0; i < n; ++i) {
            const int b = bits[w[static_cast<std::size_t>(i)]];
            for (int pl = 0; pl < e; ++pl)
                if (b >> pl & 1)
                    planes[static_cast<std::size_t>(pl) * W + static_cast<std::size_t>(i) / 64] |=
                        std::uint64_t(1) << (i % 64);
        }
    };

    // scaled[j][s-1] = packed s * row_j
    std::vector<std::vector<std::vector<std::uint64_t>>> scaled(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j)
        for (int s = 1; s < q; ++s) {
            Word w(static_cast<std::size_t>(n));
            for (std::int64_t i = 0; i < n; ++i)
                w[static_cast<std::size_t>(i)] = tb.m(static_cast<std::uint8_t>(s), rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]);
            std::vector<std::uint64_t> planes;
            pack(w, planes);
            scaled[static_cast<std::size_t>(j)].push_back(std::move(planes));
        }

    std::int64_t prefixes = 1;
    for (int i = 0; i < t; ++i) prefixes *= q;
    std::vector<std::uint64_t> cur(W * static_cast<std::size_t>(e));
    for (std::int64_t P = 0; P < prefixes; ++P) {
        if (P % job.threads != tid) continue;
        std::fill(cur.begin(), cur.end(), 0);
        std::int64_t v = P;
        for (int i = 0; i < t; ++i) {
            const int d = static_cast<int>(v % q);
            v /= q;
            if (d == 0) continue;
            const auto& row = scaled[static_cast<std::size_t>(i)][static_cast<std::size_t>(d - 1)];
            for (std::size_t x = 0; x < cur.size(); ++x) cur[x] ^= row[x];
        }
        const auto weigh = [&] {
            std::int64_t wt = 0;
            if (e == 1)
                for (std::size_t x = 0; x < W; ++x) wt += std::popcount(cur[x]);
            else
                for (std::size_t x = 0; x < W; ++x) wt += std::popcount(cur[x] | cur[W + x]);
            return wt;
        };
        std::int64_t wt = weigh();
        gray_walk(
            t, k, q, [&] { ++counts[static_cast<std::size_t>(wt)]; },
            [&](int j, int old, int nxt) {
                const std::uint8_t ds = tb.s(static_cast<std::uint8_t>(nxt), static_cast<std::uint8_t>(old));
                const auto& row = scaled[static_cast<std::size_t>(j)][ds - 1];
                for (std::size_t x = 0; x < cur.size(); ++x) cur[x] ^= row[x];
                wt = weigh();
            });
    }
}

}  // namespace

std::vector<std::uint64_t> enumerate_weights(const GeneratorMatrix& G, std::int64_t cap, int threads) {
    const std::int64_t k = G.rank();
    const std::int64_t q = G.q();
    const std::int64_t total = enumerable_size(q, k);
    if (total < 0 || total > cap)
        throw TooLargeToEnumerate("q^k = " + (total < 0 ? std::string(">2^62") : std::to_string(total)) +
                                  " exceeds cap " + std::to_string(cap));
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;

    // split on a message prefix long enough to keep all threads busy
    int t = 0;
    std::int64_t pref = 1;
    while (t < k && pref < 4 * threads) {
        pref *= q;
        ++t;
    }
    if (total <= 4096) {
        threads = 1;
        t = 0;
    }

    Job job{&G, static_cast<int>(k), t, static_cast<int>(q), threads, G.n()};
    std::vector<std::vector<std::uint64_t>> parts(static_cast<std::size_t>(threads),
                                                  std::vector<std::uint64_t>(static_cast<std::size_t>(G.n() + 1), 0));
    const bool packed = (q == 2 || q == 4);
    if (threads == 1) {
        packed ? run_packed(job, 0, parts[0]) : run_generic(job, 0, parts[0]);
    } else {
        std::vector<std::thread> pool;
        for (int tid = 0; tid < threads; ++tid)
            pool.emplace_back([&, tid] { packed ? run_packed(job, tid, parts[static_cast<std::size_t>(tid)])
                                                : run_generic(job, tid, parts[static_cast<std::size_t>(tid)]); });
        for (auto& th : pool) th.join();
    }
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(G.n() + 1), 0);
    for (const auto& p : parts)
        for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += p[i];
    return counts;
}

}  // namespace constacode

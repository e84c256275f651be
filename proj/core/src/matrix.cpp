#include "constacode/matrix.hpp"

#include <map>
#include <mutex>

namespace constacode {

std::shared_ptr<const SymbolTables> SymbolTables::get(const Subfield& sf) {
    static std::mutex mu;
    static std::map<std::pair<const FiniteField*, int>, std::shared_ptr<const SymbolTables>> cache;
    std::lock_guard<std::mutex> lock(mu);
    const auto key = std::make_pair(sf.field, sf.e);
    if (auto it = cache.find(key); it != cache.end()) return it->second;

    auto t = std::make_shared<SymbolTables>();
    t->sf = sf;
    t->q = static_cast<int>(sf.q);
    const int q = t->q;
    std::vector<FieldElement> el(static_cast<std::size_t>(q));
    for (int i = 0; i < q; ++i) el[static_cast<std::size_t>(i)] = sf.element(i);
    t->add.resize(static_cast<std::size_t>(q) * q);
    t->sub.resize(static_cast<std::size_t>(q) * q);
    t->mul.resize(static_cast<std::size_t>(q) * q);
    t->pw.resize(static_cast<std::size_t>(q) * q);
    t->neg.resize(static_cast<std::size_t>(q));
    t->inv.resize(static_cast<std::size_t>(q));
    for (int i = 0; i < q; ++i) {
        t->neg[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(sf.index_of(-el[static_cast<std::size_t>(i)]));
        if (i > 0)
            t->inv[static_cast<std::size_t>(i)] =
                static_cast<std::uint8_t>(sf.index_of(el[static_cast<std::size_t>(i)].inverse()));
        for (int j = 0; j < q; ++j) {
            const auto at = [&](std::vector<std::uint8_t>& v) -> std::uint8_t& {
                return v[static_cast<std::size_t>(i) * q + j];
            };
            at(t->add) = static_cast<std::uint8_t>(
                sf.index_of(el[static_cast<std::size_t>(i)] + el[static_cast<std::size_t>(j)]));
            at(t->sub) = static_cast<std::uint8_t>(
                sf.index_of(el[static_cast<std::size_t>(i)] - el[static_cast<std::size_t>(j)]));
            at(t->mul) = static_cast<std::uint8_t>(
                sf.index_of(el[static_cast<std::size_t>(i)] * el[static_cast<std::size_t>(j)]));
            at(t->pw) = static_cast<std::uint8_t>(sf.index_of(el[static_cast<std::size_t>(i)].pow(j)));
        }
    }
    cache[key] = t;
    return t;
}

std::vector<Word> rref(std::vector<Word> rows, const SymbolTables& t) {
    if (rows.empty()) return rows;
    const std::size_t n = rows[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        const std::uint8_t inv = t.inv[rows[rank][col]];
        if (inv != 1)
            for (std::size_t j = col; j < n; ++j) rows[rank][j] = t.m(rows[rank][j], inv);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rank) continue;
            const std::uint8_t c = rows[i][col];
            if (c == 0) continue;
            for (std::size_t j = col; j < n; ++j) rows[i][j] = t.s(rows[i][j], t.m(c, rows[rank][j]));
        }
        ++rank;
    }
    rows.resize(rank);
    return rows;
}

GeneratorMatrix::GeneratorMatrix(std::shared_ptr<const SymbolTables> tabs, std::int64_t n, std::vector<Word> rows)
    : tabs_(std::move(tabs)), n_(n), rows_(std::move(rows)) {
    for (const auto& r : rows_)
        if (static_cast<std::int64_t>(r.size()) != n_) throw ShapeMismatch("row length differs from n");
}

const std::vector<Word>& GeneratorMatrix::rref() const {
    if (!rref_) rref_ = constacode::rref(rows_, *tabs_);
    return *rref_;
}

std::int64_t GeneratorMatrix::rank() const { return static_cast<std::int64_t>(rref().size()); }

GeneratorMatrix GeneratorMatrix::null_space() const {
    const auto& R = rref();
    const std::size_t n = static_cast<std::size_t>(n_);
    std::vector<std::int64_t> pivot_col(R.size());
    std::vector<bool> is_pivot(n, false);
    for (std::size_t i = 0; i < R.size(); ++i) {
        std::size_t c = 0;
        while (R[i][c] == 0) ++c;
        pivot_col[i] = static_cast<std::int64_t>(c);
        is_pivot[c] = true;
    }
    std::vector<Word> basis;
    for (std::size_t freec = 0; freec < n; ++freec) {
        if (is_pivot[freec]) continue;
        Word v(n, 0);
        v[freec] = 1;
        for (std::size_t i = 0; i < R.size(); ++i)
            v[static_cast<std::size_t>(pivot_col[i])] = tabs_->neg[R[i][freec]];
        basis.push_back(std::move(v));
    }
    return GeneratorMatrix(tabs_, n_, std::move(basis));
}

bool code_equal(const GeneratorMatrix& a, const GeneratorMatrix& b) {
    if (a.q() != b.q() || a.n_ != b.n_) throw ShapeMismatch("codes over different (q, n)");
    return a.rref() == b.rref();
}

}  // namespace constacode

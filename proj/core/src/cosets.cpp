#include "constacode/cosets.hpp"

#include <algorithm>
#include <numeric>

namespace constacode {

std::vector<std::int64_t> cyclotomic_coset(std::int64_t i, std::int64_t q, std::int64_t M) {
    if (M < 1) throw OutOfRange("modulus must be positive");
    if (std::gcd(q % M, M) != 1) throw NotCoprime("gcd(q, M) != 1");
    i = ((i % M) + M) % M;
    std::vector<std::int64_t> c{i};
    std::int64_t j = i * q % M;
    while (j != i) {
        c.push_back(j);
        j = j * q % M;
    }
    std::sort(c.begin(), c.end());
    return c;
}

CosetTable CosetTable::build(std::int64_t q, std::int64_t M) {
    if (M < 1) throw OutOfRange("modulus must be positive");
    if (std::gcd(q % M, M) != 1) throw NotCoprime("gcd(q, M) != 1");
    CosetTable t;
    t.q_ = q;
    t.M_ = M;
    t.leader_.assign(static_cast<std::size_t>(M), -1);
    for (std::int64_t i = 0; i < M; ++i) {
        if (t.leader_[static_cast<std::size_t>(i)] >= 0) continue;
        // i is the smallest unseen member, hence the leader of its orbit
        std::int64_t j = i;
        do {
            t.leader_[static_cast<std::size_t>(j)] = i;
            j = j * q % M;
        } while (j != i);
        t.leaders_.push_back(i);
    }
    return t;
}

std::int64_t CosetTable::coset_size(std::int64_t i) const {
    std::int64_t j = i * q_ % M_, size = 1;
    while (j != ((i % M_) + M_) % M_) {
        ++size;
        j = j * q_ % M_;
    }
    return size;
}

std::vector<std::int64_t> gamma_one(std::int64_t q, std::int64_t N, std::int64_t r) {
    if (r < 1 || (q - 1) % r != 0) throw BadDivisor("r must divide q-1");
    const CosetTable t = CosetTable::build(q, N);
    std::vector<std::int64_t> out;
    for (std::int64_t i : t.leaders())
        if (i % r == 1 % r) out.push_back(i);
    return out;
}

namespace {

std::int64_t checked_qm(std::int64_t q, std::int64_t m) {
    std::int64_t v = 1;
    for (std::int64_t i = 0; i < m; ++i) v *= q;
    return v;
}

}  // namespace

std::int64_t wt(std::int64_t i, std::int64_t q, std::int64_t m) {
    if (i < 0 || i > checked_qm(q, m) - 1) throw OutOfRange("i outside [0, q^m - 1]");
    std::int64_t w = 0;
    for (std::int64_t j = 0; j < m; ++j) {
        w += (i % q) != 0;
        i /= q;
    }
    return w;
}

std::int64_t wt_q(std::int64_t i, std::int64_t q, std::int64_t m) {
    if (i < 0 || i > checked_qm(q, m) - 1) throw OutOfRange("i outside [0, q^m - 1]");
    std::int64_t w = 0;
    for (std::int64_t j = 0; j < m; ++j) {
        w += i % q;
        i /= q;
    }
    return w;
}

DefiningSet DefiningSet::custom(std::int64_t N, std::vector<std::int64_t> indices) {
    DefiningSet d;
    d.modulus = N;
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    d.member.assign(static_cast<std::size_t>(N), false);
    for (auto i : indices) {
        if (i < 0 || i >= N) throw OutOfRange("defining-set index outside Z_N");
        d.member[static_cast<std::size_t>(i)] = true;
    }
    d.indices = std::move(indices);
    return d;
}

DefiningSet defining_set_cprime(std::int64_t q, std::int64_t m, std::int64_t r, std::int64_t ell) {
    if (r <= 1 || (q - 1) % r != 0) throw BadDivisor("need r | q-1 and r > 1");
    if (ell < 1 || ell > m) throw EllOutOfRange("need 1 <= ell <= m");
    const std::int64_t N = checked_qm(q, m) - 1;
    DefiningSet d;
    d.family = DefiningSet::Family::Cprime;
    d.q = q;
    d.m = m;
    d.r = r;
    d.ell = ell;
    d.modulus = N;
    d.member.assign(static_cast<std::size_t>(N), false);
    for (std::int64_t i = 1; i < N; ++i) {
        if (i % r != 1) continue;
        const std::int64_t w = wt(i, q, m);
        if (w >= 1 && w <= ell) {
            d.member[static_cast<std::size_t>(i)] = true;
            d.indices.push_back(i);
        }
    }
    return d;
}

DefiningSet defining_set_c(std::int64_t q, std::int64_t m, std::int64_t r, std::int64_t ell) {
    if (r <= 1 || (q - 1) % r != 0) throw BadDivisor("need r | q-1 and r > 1");
    if (ell < 0 || ell >= (q - 1) * m - 1) throw EllOutOfRange("need 0 <= ell < (q-1)m - 1");
    const std::int64_t N = checked_qm(q, m) - 1;
    DefiningSet d;
    d.family = DefiningSet::Family::Cfamily;
    d.q = q;
    d.m = m;
    d.r = r;
    d.ell = ell;
    d.modulus = N;
    d.member.assign(static_cast<std::size_t>(N), false);
    const std::int64_t bound = (q - 1) * m - ell;
    for (std::int64_t i = 0; i < N; ++i) {
        const std::int64_t w = wt_q(i, q, m);
        if (w < bound && w % r == 1 % r) {
            d.member[static_cast<std::size_t>(i)] = true;
            d.indices.push_back(i);
        }
    }
    return d;
}

std::int64_t order_mod(std::int64_t q, std::int64_t M) {
    if (M == 1) return 1;
    if (std::gcd(q % M, M) != 1) throw NotCoprime("gcd(q, M) != 1");
    std::int64_t x = q % M, ord = 1;
    while (x != 1) {
        x = x * q % M;
        ++ord;
    }
    return ord;
}

}  // namespace constacode

#include "constacode/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace constacode {

namespace {

constexpr std::int64_t kMaxFieldSize = std::int64_t(1) << 20;

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::int64_t> prime_divisors(std::int64_t n) {
    std::vector<std::int64_t> ps;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            ps.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

// --- dense polynomial arithmetic over Z_p, used only for validating and
// --- bootstrapping a field (tables take over afterwards)

using ZpPoly = std::vector<std::int64_t>;  // ascending, may carry trailing zeros

void zp_trim(ZpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

ZpPoly zp_mulmod(const ZpPoly& a, const ZpPoly& b, const ZpPoly& f, std::int64_t p) {
    ZpPoly r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    // reduce mod f (monic)
    const std::size_t df = f.size() - 1;
    for (std::size_t i = r.size(); i-- > df;) {
        const std::int64_t c = r[i];
        if (c == 0) continue;
        r[i] = 0;
        for (std::size_t j = 0; j < df; ++j) r[i - df + j] = ((r[i - df + j] - c * f[j]) % p + p) % p;
    }
    r.resize(df);
    return r;
}

ZpPoly zp_powmod(ZpPoly base, std::int64_t e, const ZpPoly& f, std::int64_t p) {
    ZpPoly r{1};
    r.resize(f.size() - 1, 0);
    base.resize(f.size() - 1, 0);
    while (e > 0) {
        if (e & 1) r = zp_mulmod(r, base, f, p);
        base = zp_mulmod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

ZpPoly zp_gcd(ZpPoly a, ZpPoly b, std::int64_t p) {
    zp_trim(a);
    zp_trim(b);
    while (!b.empty()) {
        // a mod b
        const std::int64_t lead_inv = [&] {
            std::int64_t x = b.back(), r = 1, e = p - 2;  // Fermat
            while (e > 0) {
                if (e & 1) r = r * x % p;
                x = x * x % p;
                e >>= 1;
            }
            return r;
        }();
        while (a.size() >= b.size()) {
            const std::int64_t c = a.back() * lead_inv % p;
            if (c != 0) {
                const std::size_t off = a.size() - b.size();
                for (std::size_t j = 0; j < b.size(); ++j) a[off + j] = ((a[off + j] - c * b[j]) % p + p) % p;
            }
            zp_trim(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return a;
}

bool zp_is_irreducible(const ZpPoly& f, std::int64_t p) {
    const int K = static_cast<int>(f.size()) - 1;
    if (K < 1) return false;
    // x^(p^K) == x (mod f), and gcd(x^(p^(K/t)) - x, f) = 1 for prime t | K
    ZpPoly x{0, 1};
    ZpPoly xq = x;
    xq.resize(std::max<std::size_t>(f.size() - 1, 2), 0);
    std::vector<ZpPoly> powers;  // powers[i] = x^(p^(i+1)) mod f
    ZpPoly cur = x;
    cur.resize(f.size() - 1, 0);
    for (int i = 0; i < K; ++i) {
        cur = zp_powmod(cur, p, f, p);
        powers.push_back(cur);
    }
    ZpPoly diff = powers.back();
    diff.resize(std::max(diff.size(), std::size_t(2)), 0);
    diff[1] = ((diff[1] - 1) % p + p) % p;
    zp_trim(diff);
    if (!diff.empty()) return false;
    for (std::int64_t t : prime_divisors(K)) {
        ZpPoly g = powers[static_cast<std::size_t>(K / t) - 1];
        g.resize(std::max(g.size(), std::size_t(2)), 0);
        g[1] = ((g[1] - 1) % p + p) % p;
        ZpPoly d = zp_gcd(g, f, p);
        if (!(d.size() == 1 && d[0] != 0)) return false;
    }
    return true;
}

bool zp_is_primitive(const ZpPoly& f, std::int64_t p, std::int64_t Q) {
    // order of x mod f must be exactly Q-1 (f assumed irreducible)
    if (f[0] == 0) return false;
    for (std::int64_t s : prime_divisors(Q - 1)) {
        ZpPoly r = zp_powmod(ZpPoly{0, 1}, (Q - 1) / s, f, p);
        zp_trim(r);
        if (r.size() == 1 && r[0] == 1) return false;
    }
    return true;
}

}  // namespace

bool prime_power(std::int64_t q, std::int64_t& p, int& e) {
    if (q < 2) return false;
    for (std::int64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            e = 0;
            while (q > 1) {
                if (q % d != 0) return false;
                q /= d;
                ++e;
            }
            return true;
        }
    }
    p = q;
    e = 1;
    return true;
}

std::shared_ptr<const FiniteField> FiniteField::build(std::int64_t p, int K, std::vector<std::int64_t> modulus) {
    if (!is_prime(p)) throw NotPrime("p = " + std::to_string(p) + " is not prime");
    if (K < 1) throw Error("extension degree must be >= 1");
    if (static_cast<int>(modulus.size()) != K + 1)
        throw NotMonic("modulus must have degree " + std::to_string(K));
    for (auto& c : modulus) c = ((c % p) + p) % p;
    if (modulus.back() != 1) throw NotMonic("modulus is not monic");

    // fields are interned for the process lifetime: elements and codes hold
    // plain pointers, and one (p, K, modulus) always means one instance
    static std::mutex intern_mu;
    static std::map<std::tuple<std::int64_t, int, std::vector<std::int64_t>>, std::shared_ptr<const FiniteField>>
        interned;
    {
        std::lock_guard<std::mutex> lock(intern_mu);
        if (auto it = interned.find(std::tie(p, K, modulus)); it != interned.end()) return it->second;
    }

    std::int64_t Q = 1;
    for (int i = 0; i < K; ++i) {
        Q *= p;
        if (Q > kMaxFieldSize) throw FieldTooLarge("p^K exceeds 2^20");
    }

    if (K == 1) {
        // degree-1 moduli are always irreducible; x (c0 = 0) has root 0, which
        // generates nothing
        if (modulus[0] == 0) throw NotPrimitive("root of modulus is 0");
    } else {
        if (!zp_is_irreducible(modulus, p)) throw NotIrreducible("modulus is reducible over GF(p)");
    }
    if (!zp_is_primitive(modulus, p, Q)) throw NotPrimitive("root of modulus does not generate GF(p^K)^*");

    auto f = std::shared_ptr<FiniteField>(new FiniteField());
    f->p_ = p;
    f->K_ = K;
    f->size_ = Q;
    f->modulus_ = modulus;

    // walk b^0, b^1, ... as digit vectors; enc = sum digit_i * p^i
    f->exp_enc_.assign(static_cast<std::size_t>(Q - 1), 0);
    f->log_.assign(static_cast<std::size_t>(Q), -1);
    std::vector<std::int64_t> v(static_cast<std::size_t>(K), 0);
    v[0] = 1 % p;
    for (std::int64_t i = 0; i < Q - 1; ++i) {
        std::int64_t enc = 0;
        for (int j = K - 1; j >= 0; --j) enc = enc * p + v[static_cast<std::size_t>(j)];
        f->exp_enc_[static_cast<std::size_t>(i)] = enc;
        f->log_[static_cast<std::size_t>(enc)] = i;
        // v *= x mod modulus
        const std::int64_t top = v[static_cast<std::size_t>(K - 1)];
        for (int j = K - 1; j > 0; --j) v[static_cast<std::size_t>(j)] = v[static_cast<std::size_t>(j - 1)];
        v[0] = 0;
        if (top != 0)
            for (int j = 0; j < K; ++j)
                v[static_cast<std::size_t>(j)] =
                    ((v[static_cast<std::size_t>(j)] - top * modulus[static_cast<std::size_t>(j)]) % p + p) % p;
    }

    // Zech logs: zech[z] = log(1 + b^z)
    f->zech_.assign(static_cast<std::size_t>(Q - 1), -1);
    for (std::int64_t z = 0; z < Q - 1; ++z) {
        const std::int64_t enc = f->exp_enc_[static_cast<std::size_t>(z)];
        const std::int64_t low = enc % p;
        const std::int64_t enc1 = enc - low + (low + 1) % p;
        f->zech_[static_cast<std::size_t>(z)] = f->log_[static_cast<std::size_t>(enc1)];  // -1 iff enc1 == 0
    }
    f->neg_log_ = (p == 2) ? 0 : (Q - 1) / 2;
    {
        std::lock_guard<std::mutex> lock(intern_mu);
        auto [it, inserted] = interned.emplace(std::make_tuple(p, K, modulus), f);
        return it->second;  // someone may have raced us; either instance is fine
    }
}

FieldElement FiniteField::zero() const { return FieldElement(this, -1); }
FieldElement FiniteField::one() const { return FieldElement(this, 0); }
FieldElement FiniteField::generator() const { return FieldElement(this, K_ == 1 && size_ == 2 ? 0 : 1 % order()); }

FieldElement FiniteField::from_log(std::int64_t log) const {
    const std::int64_t N = order();
    return FieldElement(this, ((log % N) + N) % N);
}

FieldElement FiniteField::from_prime_int(std::int64_t c) const {
    c = ((c % p_) + p_) % p_;
    if (c == 0) return zero();
    return FieldElement(this, log_[static_cast<std::size_t>(c)]);
}

Subfield FiniteField::subfield(int e) const {
    if (e < 1 || K_ % e != 0) throw NotADivisor("subfield degree must divide K");
    std::int64_t q = 1;
    for (int i = 0; i < e; ++i) q *= p_;
    Subfield s;
    s.field = this;
    s.e = e;
    s.q = q;
    s.step = order() / (q - 1);
    return s;
}

std::string FiniteField::spec_string() const {
    std::ostringstream os;
    os << p_ << '^' << K_ << ':';
    for (std::size_t i = 0; i < modulus_.size(); ++i) {
        if (i) os << ',';
        os << modulus_[i];
    }
    return os.str();
}

std::int64_t FieldElement::log() const {
    if (is_zero()) throw Error("log of zero");
    return log_;
}

void FieldElement::check_same(FieldElement rhs) const {
    if (f_ != rhs.f_) throw FieldMismatch("elements of different fields");
}

FieldElement FieldElement::operator+(FieldElement rhs) const {
    check_same(rhs);
    if (is_zero()) return rhs;
    if (rhs.is_zero()) return *this;
    const std::int64_t N = f_->order();
    const std::int64_t d = ((rhs.log_ - log_) % N + N) % N;
    const std::int64_t z = f_->zech_[static_cast<std::size_t>(d)];
    if (z < 0) return FieldElement(f_, -1);
    return FieldElement(f_, (log_ + z) % N);
}

FieldElement FieldElement::operator-() const {
    if (is_zero()) return *this;
    return FieldElement(f_, (log_ + f_->neg_log_) % f_->order());
}

FieldElement FieldElement::operator-(FieldElement rhs) const { return *this + (-rhs); }

FieldElement FieldElement::operator*(FieldElement rhs) const {
    check_same(rhs);
    if (is_zero() || rhs.is_zero()) return FieldElement(f_, -1);
    return FieldElement(f_, (log_ + rhs.log_) % f_->order());
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw Error("inverse of zero");
    const std::int64_t N = f_->order();
    return FieldElement(f_, (N - log_) % N);
}

FieldElement FieldElement::operator/(FieldElement rhs) const { return *this * rhs.inverse(); }

FieldElement FieldElement::pow(std::int64_t e) const {
    if (is_zero()) {
        if (e < 0) throw Error("inverse of zero");
        return e == 0 ? f_->one() : *this;
    }
    const std::int64_t N = f_->order();
    const std::int64_t le = ((log_ % N) * (e % N)) % N;  // log < 2^20, no overflow
    return FieldElement(f_, ((le % N) + N) % N);
}

bool FieldElement::operator==(FieldElement rhs) const {
    return f_ == rhs.f_ && log_ == rhs.log_;
}

std::int64_t FieldElement::multiplicative_order() const {
    if (is_zero()) throw Error("order of zero");
    const std::int64_t N = f_->order();
    return N / std::gcd(N, log_);
}

bool FieldElement::in_subfield(int e) const {
    if (is_zero()) return true;
    if (f_->K() % e != 0) return false;
    std::int64_t q = 1;
    for (int i = 0; i < e; ++i) q *= f_->p();
    const std::int64_t step = f_->order() / (q - 1);
    return log_ % step == 0;
}

std::string FieldElement::str() const {
    if (is_zero()) return "0";
    return "b^" + std::to_string(log_);
}

bool Subfield::contains(FieldElement x) const {
    if (x.field() != field) return false;
    return x.is_zero() || x.log() % step == 0;
}

FieldElement Subfield::element(std::int64_t symbol) const {
    if (symbol < 0 || symbol >= q) throw OutOfRange("symbol index out of range");
    if (symbol == 0) return field->zero();
    return field->from_log((symbol - 1) * step);
}

std::int64_t Subfield::index_of(FieldElement x) const {
    if (x.field() != field) throw FieldMismatch("element of another field");
    if (x.is_zero()) return 0;
    if (x.log() % step != 0) throw WrongSubfield("element not in GF(" + std::to_string(q) + ")");
    return x.log() / step + 1;
}

std::string Subfield::symbol_str(std::int64_t symbol) const {
    if (symbol == 0) return "0";
    return "w^" + std::to_string(symbol - 1);
}

std::shared_ptr<const FiniteField> parse_field_spec(const std::string& spec) {
    const auto caret = spec.find('^');
    const auto colon = spec.find(':');
    if (caret == std::string::npos || colon == std::string::npos || caret > colon)
        throw ParseError("field spec must look like p^K:c0,c1,...,cK");
    try {
        const std::int64_t p = std::stoll(spec.substr(0, caret));
        const int K = std::stoi(spec.substr(caret + 1, colon - caret - 1));
        std::vector<std::int64_t> coeffs;
        std::string rest = spec.substr(colon + 1);
        std::istringstream is(rest);
        std::string tok;
        while (std::getline(is, tok, ',')) coeffs.push_back(std::stoll(tok));
        return FiniteField::build(p, K, coeffs);
    } catch (const std::invalid_argument&) {
        throw ParseError("bad number in field spec: " + spec);
    } catch (const std::out_of_range&) {
        throw ParseError("number out of range in field spec: " + spec);
    }
}

namespace {

// Reference moduli used for all reproducible outputs (weight enumerators are
// basis-dependent).  Keyed by (p, K), coefficients ascending.
const std::map<std::pair<std::int64_t, int>, std::vector<std::int64_t>> kRegistry = {
    {{3, 3}, {1, 2, 0, 1}},                      // x^3+2x+1
    {{3, 4}, {2, 0, 0, 2, 1}},                   // x^4+2x^3+2
    {{5, 2}, {2, 4, 1}},                         // x^2+4x+2
    {{5, 3}, {3, 3, 0, 1}},                      // x^3+3x+3
    {{7, 2}, {3, 6, 1}},                         // x^2+6x+3
    {{2, 4}, {1, 1, 0, 0, 1}},                   // x^4+x+1
    {{2, 6}, {1, 1, 0, 1, 1, 0, 1}},             // x^6+x^4+x^3+x+1
    {{2, 8}, {1, 0, 1, 1, 1, 0, 0, 0, 1}},       // x^8+x^4+x^3+x^2+1
    {{2, 10}, {1, 1, 1, 1, 0, 1, 1, 0, 0, 0, 1}} // x^10+x^6+x^5+x^3+x^2+x+1
};

std::shared_ptr<const FiniteField> search_primitive_field(std::int64_t p, int K) {
    // smallest modulus in lexicographic order of (c_{K-1},...,c_0)
    std::int64_t total = 1;
    for (int i = 0; i < K; ++i) total *= p;
    for (std::int64_t code = 0; code < total; ++code) {
        std::vector<std::int64_t> c(static_cast<std::size_t>(K + 1), 0);
        c[static_cast<std::size_t>(K)] = 1;
        std::int64_t t = code;
        for (int i = K - 1; i >= 0; --i) {
            c[static_cast<std::size_t>(i)] = t % p;
            t /= p;
        }
        if (c[0] == 0) continue;
        try {
            return FiniteField::build(p, K, c);
        } catch (const NotIrreducible&) {
        } catch (const NotPrimitive&) {
        }
    }
    throw Error("no primitive modulus found");  // unreachable for valid (p, K)
}

}  // namespace

std::shared_ptr<const FiniteField> default_field(std::int64_t p, int K) {
    static std::mutex mu;
    static std::map<std::pair<std::int64_t, int>, std::shared_ptr<const FiniteField>> cache;
    std::lock_guard<std::mutex> lock(mu);
    const auto key = std::make_pair(p, K);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    std::shared_ptr<const FiniteField> f;
    if (auto it = kRegistry.find(key); it != kRegistry.end())
        f = FiniteField::build(p, K, it->second);
    else
        f = search_primitive_field(p, K);
    cache[key] = f;
    return f;
}

std::shared_ptr<const FiniteField> field_for_alphabet(std::int64_t q, int m) {
    std::int64_t p;
    int e;
    if (!prime_power(q, p, e)) throw NotPrime("alphabet size " + std::to_string(q) + " is not a prime power");
    return default_field(p, e * m);
}

}  // namespace constacode

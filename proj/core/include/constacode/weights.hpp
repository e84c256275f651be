#ifndef CONSTACODE_WEIGHTS_HPP
#define CONSTACODE_WEIGHTS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "constacode/bigint.hpp"

namespace constacode {

/// Exact codeword counts A_0..A_n by Hamming weight.
struct WeightDistribution {
    std::int64_t n = 0;
    std::int64_t q = 0;
    std::vector<BigInt> counts;  // size n + 1

    BigInt total() const {
        BigInt t = 0;
        for (const auto& c : counts) t += c;
        return t;
    }

    /// Smallest positive weight with A_w > 0; nullopt for the zero code.
    std::optional<std::int64_t> min_weight() const {
        for (std::size_t w = 1; w < counts.size(); ++w)
            if (counts[w] > 0) return static_cast<std::int64_t>(w);
        return std::nullopt;
    }

    /// "1 + 8z^6 + 144z^8 + ..." with ascending exponents.
    std::string enumerator_str() const {
        std::string s;
        for (std::size_t w = 0; w < counts.size(); ++w) {
            if (counts[w] == 0) continue;
            if (!s.empty()) s += " + ";
            if (w == 0) {
                s += counts[w].str();
                continue;
            }
            if (counts[w] != 1) s += counts[w].str();
            s += "z^" + std::to_string(w);
        }
        return s.empty() ? "0" : s;
    }

    bool operator==(const WeightDistribution& rhs) const { return n == rhs.n && q == rhs.q && counts == rhs.counts; }
};

}  // namespace constacode

#endif

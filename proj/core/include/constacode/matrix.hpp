#ifndef CONSTACODE_MATRIX_HPP
#define CONSTACODE_MATRIX_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "constacode/field.hpp"

namespace constacode {

/// Small q x q arithmetic tables over the canonical symbol enumeration of a
/// subfield (0 <-> zero, s <-> w^(s-1)).  Codewords are flat sequences of
/// these symbols; the big field is only touched when building the tables.
struct SymbolTables {
    Subfield sf;
    int q = 0;
    std::vector<std::uint8_t> add, sub, mul;  // q*q, row-major
    std::vector<std::uint8_t> neg, inv;       // q (inv[0] unused)
    std::vector<std::uint8_t> pw;             // q*q, pw(s, e) = s^e with 0^0 = 1

    static std::shared_ptr<const SymbolTables> get(const Subfield& sf);  // cached per subfield

    std::uint8_t a(std::uint8_t x, std::uint8_t y) const { return add[static_cast<std::size_t>(x) * q + y]; }
    std::uint8_t s(std::uint8_t x, std::uint8_t y) const { return sub[static_cast<std::size_t>(x) * q + y]; }
    std::uint8_t m(std::uint8_t x, std::uint8_t y) const { return mul[static_cast<std::size_t>(x) * q + y]; }
    std::uint8_t p(std::uint8_t x, std::int64_t e) const { return pw[static_cast<std::size_t>(x) * q + e]; }
};

using Word = std::vector<std::uint8_t>;  // one symbol per coordinate

/// Matrix of codeword rows over GF(q) with a cached reduced row echelon
/// form.  Rank, row-space comparison and null space all go through the RREF.
class GeneratorMatrix {
   public:
    GeneratorMatrix(std::shared_ptr<const SymbolTables> tabs, std::int64_t n, std::vector<Word> rows);

    std::int64_t n() const { return n_; }
    std::int64_t q() const { return tabs_->q; }
    std::int64_t rank() const;
    const std::vector<Word>& rows() const { return rows_; }
    const std::vector<Word>& rref() const;  // rank rows, leftmost pivots, computed once
    const SymbolTables& tables() const { return *tabs_; }
    std::shared_ptr<const SymbolTables> tables_ptr() const { return tabs_; }

    /// Basis of {x : G x^T = 0}, i.e. the dual code's generator rows.
    GeneratorMatrix null_space() const;

    /// Row-space equality via RREF; throws ShapeMismatch on different (q, n).
    friend bool code_equal(const GeneratorMatrix& a, const GeneratorMatrix& b);

   private:
    std::shared_ptr<const SymbolTables> tabs_;
    std::int64_t n_;
    std::vector<Word> rows_;
    mutable std::optional<std::vector<Word>> rref_;
};

/// In-place Gauss-Jordan reduction; returns the nonzero rows.
std::vector<Word> rref(std::vector<Word> rows, const SymbolTables& t);

}  // namespace constacode

#endif

#ifndef CONSTACODE_FIELD_HPP
#define CONSTACODE_FIELD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "constacode/errors.hpp"

namespace constacode {

class FiniteField;
class FieldElement;
struct Subfield;

/// GF(p^K) with discrete-log tables for the full multiplicative group.
///
/// The modulus must be a primitive polynomial over GF(p); its root b
/// generates GF(p^K)^*.  Nonzero elements are handled through their
/// discrete logs, addition goes through a Zech-log table, so every field
/// operation is O(1) table lookups.  Instances are immutable after
/// construction and safe to share across threads.
class FiniteField {
   public:
    /// Validates p/modulus and builds all tables.  Throws NotPrime, NotMonic,
    /// NotIrreducible, NotPrimitive or FieldTooLarge (cap p^K <= 2^20).
    /// Instances are interned per (p, K, modulus) and live for the process,
    /// so elements and codes can reference their field by plain pointer.
    static std::shared_ptr<const FiniteField> build(std::int64_t p, int K, std::vector<std::int64_t> modulus);

    std::int64_t p() const { return p_; }
    int K() const { return K_; }
    std::int64_t size() const { return size_; }
    std::int64_t order() const { return size_ - 1; }  // |GF(p^K)^*|
    const std::vector<std::int64_t>& modulus() const { return modulus_; }

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement generator() const;                    // b
    FieldElement from_log(std::int64_t log) const;     // b^log
    FieldElement from_prime_int(std::int64_t c) const; // c * 1, c taken mod p

    /// Subfield GF(p^e); e must divide K.
    Subfield subfield(int e) const;

    /// Format as "p^K:c0,c1,...,cK" (ascending modulus coefficients).
    std::string spec_string() const;

    // internal representation helpers (exposed for the symbol layer)
    std::int64_t log_of_enc(std::int64_t enc) const { return log_[static_cast<std::size_t>(enc)]; }
    std::int64_t enc_of_log(std::int64_t log) const { return exp_enc_[static_cast<std::size_t>(log)]; }

   private:
    friend class FieldElement;
    FiniteField() = default;

    std::int64_t p_ = 0;
    int K_ = 0;
    std::int64_t size_ = 0;
    std::vector<std::int64_t> modulus_;
    std::vector<std::int64_t> exp_enc_;  // log -> digit-packed vector encoding
    std::vector<std::int64_t> log_;      // encoding -> log (-1 for zero)
    std::vector<std::int64_t> zech_;     // zech[z] = log(1 + b^z), -1 when 1 + b^z = 0
    std::int64_t neg_log_ = 0;           // log(-1); 0 in characteristic 2
};

/// One element of a FiniteField, stored as ZERO or a discrete-log index.
class FieldElement {
   public:
    FieldElement() = default;

    bool is_zero() const { return log_ < 0; }
    std::int64_t log() const;  // throws on zero
    const FiniteField* field() const { return f_; }

    FieldElement operator+(FieldElement rhs) const;
    FieldElement operator-(FieldElement rhs) const;
    FieldElement operator-() const;
    FieldElement operator*(FieldElement rhs) const;
    FieldElement operator/(FieldElement rhs) const;
    FieldElement inverse() const;
    FieldElement pow(std::int64_t e) const;

    bool operator==(FieldElement rhs) const;
    bool operator!=(FieldElement rhs) const { return !(*this == rhs); }

    /// Multiplicative order; throws on zero.
    std::int64_t multiplicative_order() const;

    /// Membership in GF(p^e): zero, or (p^K-1)/(p^e-1) divides log.
    bool in_subfield(int e) const;

    /// "0" or "b^i".
    std::string str() const;

   private:
    friend class FiniteField;
    friend struct Subfield;
    FieldElement(const FiniteField* f, std::int64_t log) : f_(f), log_(log) {}

    void check_same(FieldElement rhs) const;

    const FiniteField* f_ = nullptr;
    std::int64_t log_ = -1;
};

/// View of an embedded subfield GF(q) = GF(p^e) of a FiniteField, with the
/// canonical enumeration {0} u {w^j}, w = b^((p^K-1)/(q-1)).
///
/// Symbol indices: 0 <-> zero, s in [1, q-1] <-> w^(s-1).
struct Subfield {
    const FiniteField* field = nullptr;
    int e = 0;
    std::int64_t q = 0;     // p^e
    std::int64_t step = 0;  // (p^K-1)/(q-1)

    bool contains(FieldElement x) const;
    FieldElement omega() const { return field->from_log(step); }
    FieldElement element(std::int64_t symbol) const;
    std::int64_t index_of(FieldElement x) const;  // throws WrongSubfield
    std::int64_t extension_degree() const { return field->K() / e; }  // m with q^m = p^K

    /// "0" or "w^j".
    std::string symbol_str(std::int64_t symbol) const;

    bool operator==(const Subfield& rhs) const { return field == rhs.field && e == rhs.e; }
    bool operator!=(const Subfield& rhs) const { return !(*this == rhs); }
};

/// Parse "p^K:c0,c1,...,cK" and build the field.
std::shared_ptr<const FiniteField> parse_field_spec(const std::string& spec);

/// Field for (p, K) from the built-in registry of reference moduli, falling
/// back to the lexicographically smallest primitive polynomial.  Results are
/// cached for the lifetime of the process.
std::shared_ptr<const FiniteField> default_field(std::int64_t p, int K);

/// Ambient field GF(q^m) for an alphabet of prime-power size q.  Throws
/// NotPrime if q is not a prime power.
std::shared_ptr<const FiniteField> field_for_alphabet(std::int64_t q, int m);

/// Decompose a prime power q = p^e; returns false if q is not a prime power.
bool prime_power(std::int64_t q, std::int64_t& p, int& e);

}  // namespace constacode

#endif

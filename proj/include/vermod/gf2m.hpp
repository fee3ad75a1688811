#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vermod/errors.hpp"

namespace vermod {

class Fe;

// A binary field GF(2^m), 1 <= m <= 32, defined by an irreducible modulus
// polynomial over F2. Instances are interned: FieldSpec::get returns a
// reference that stays valid for the lifetime of the process, and two
// specs with the same (m, modulus) are the same object.
//
// Bit convention: bit i of `modulus` is the coefficient of x^i, so the
// modulus of GF(4) (x^2+x+1) is 0b111 = 0x7. Elements use the same
// convention for the residue polynomial, truncated to m bits.
class FieldSpec {
public:
    static constexpr unsigned kMaxDegree = 32;
    // Fields small enough for full multiplication/inverse tables.
    static constexpr unsigned kTableDegree = 8;

    // Default modulus: the lexicographically smallest irreducible of
    // degree m (frozen table; m=1 uses x+1).
    static const FieldSpec& get(unsigned m);
    static const FieldSpec& get(unsigned m, uint64_t modulus);
    // Parses "m=<int>,mod=<hex>".
    static const FieldSpec& parse(std::string_view text);

    unsigned degree() const { return m_; }
    uint64_t modulus() const { return modulus_; }
    uint64_t order() const { return uint64_t(1) << m_; }
    std::string to_string() const;

    bool operator==(const FieldSpec& o) const { return this == &o; }
    bool operator!=(const FieldSpec& o) const { return this != &o; }

    Fe zero() const;
    Fe one() const;
    Fe gen() const; // residue class of x
    Fe element(uint64_t bits) const;
    Fe parse_element(std::string_view hex) const;

private:
    FieldSpec(unsigned m, uint64_t modulus);
    FieldSpec(const FieldSpec&) = delete;
    FieldSpec& operator=(const FieldSpec&) = delete;

    uint64_t mul_raw(uint64_t a, uint64_t b) const;

    unsigned m_;
    uint64_t modulus_;
    uint64_t mask_;
    // m <= kTableDegree only: flat q*q product table and q-entry inverses.
    std::vector<uint8_t> mul_table_;
    std::vector<uint8_t> inv_table_;

    friend class Fe;
};

// An element of a FieldSpec. Immutable value type; mixing elements of
// different specs is a FieldMismatch error, never a silent coercion.
class Fe {
public:
    Fe(const FieldSpec& field, uint64_t bits);

    uint64_t bits() const { return bits_; }
    const FieldSpec& field() const { return *field_; }
    bool is_zero() const { return bits_ == 0; }
    bool is_one() const { return bits_ == 1; }

    std::string to_hex() const;

    friend Fe operator+(const Fe& a, const Fe& b);
    friend Fe operator*(const Fe& a, const Fe& b);
    friend bool operator==(const Fe& a, const Fe& b);
    friend bool operator!=(const Fe& a, const Fe& b) { return !(a == b); }
    // Order by bit pattern; used for all deterministic sorts. Requires
    // matching fields.
    friend bool operator<(const Fe& a, const Fe& b);

private:
    uint64_t bits_;
    const FieldSpec* field_;
};

Fe fe_inv(const Fe& x);                 // DivisionByZero on 0
Fe fe_pow(const Fe& x, uint64_t e);
Fe fe_sqrt(const Fe& x);                // unique square root, x^(2^(m-1))
int fe_trace(const Fe& x);              // absolute trace, in {0,1}

// Roots of u^2 + u = b. Present iff trace(b) = 0; first root has bit 0
// clear, second is first+1.
std::optional<std::pair<Fe, Fe>> artin_schreier(const Fe& b);

// Image of x under the fixed embedding GF(2^m) -> GF(2^(km)): the source
// generator maps to the smallest-bits root of the source modulus in the
// target. NoEmbedding if degrees do not divide.
Fe fe_embed(const Fe& x, const FieldSpec& target);

} // namespace vermod

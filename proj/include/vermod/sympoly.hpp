#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "vermod/errors.hpp"
#include "vermod/gf2m.hpp"

namespace vermod {

// The fixed variable alphabet for the symbolic layer. sa, sb, sc are the
// square roots of the curve coefficients: a, b, c are always written as
// sa^2, sb^2, sc^2, so the coefficients sqrt(a), sqrt(b), sqrt(c),
// sqrt(abc) stay polynomial.
enum class Var : uint8_t { x00, x01, x10, x11, r, s, sa, sb, sc, u };

constexpr size_t kNumVars = 10;
const char* var_name(Var v);

// Exponent vector over the alphabet; coefficient is implicitly 1 (F2).
using Monomial = std::array<uint16_t, kNumVars>;

// An exact multivariate polynomial over F2. Terms are kept sorted in
// descending graded lexicographic order; the zero polynomial is the
// empty term list.
class SymPoly {
public:
    SymPoly() = default;

    static SymPoly zero() { return SymPoly(); }
    static SymPoly one();
    static SymPoly var(Var v);

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::vector<Monomial>& terms() const { return terms_; }

    // Largest exponent of v across all terms.
    unsigned degree_in(Var v) const;

    SymPoly pow(unsigned e) const;

    // Simultaneous substitution; variables absent from the map stay put.
    SymPoly subst(const std::map<Var, SymPoly>& images) const;

    // Exact evaluation; every variable that occurs must be assigned.
    Fe eval(const std::map<Var, Fe>& assignment) const;

    std::string to_string() const;

    friend SymPoly operator+(const SymPoly& a, const SymPoly& b);
    friend SymPoly operator*(const SymPoly& a, const SymPoly& b);
    friend bool operator==(const SymPoly& a, const SymPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const SymPoly& a, const SymPoly& b) { return !(a == b); }
    friend SymPoly reduce_artin_schreier(const SymPoly& p);

private:
    static SymPoly from_terms(std::vector<Monomial> terms); // sorts, cancels pairs
    std::vector<Monomial> terms_;
};

// Canonical residue modulo the relation u^2 = u + sb^2: rewrites until
// every term has u-exponent <= 1.
SymPoly reduce_artin_schreier(const SymPoly& p);

} // namespace vermod

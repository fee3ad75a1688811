#include "vermod/sympoly.hpp"

#include <algorithm>

namespace vermod {

namespace {

constexpr std::array<const char*, kNumVars> kVarNames = {
    "x00", "x01", "x10", "x11", "r", "s", "sa", "sb", "sc", "u",
};

unsigned total_degree(const Monomial& m) {
    unsigned d = 0;
    for (uint16_t e : m)
        d += e;
    return d;
}

// Descending graded lexicographic: higher total degree first, ties broken
// by exponents in alphabet order, larger first.
bool grlex_before(const Monomial& a, const Monomial& b) {
    unsigned da = total_degree(a), db = total_degree(b);
    if (da != db)
        return da > db;
    return a > b;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (size_t i = 0; i < kNumVars; ++i) {
        uint32_t e = uint32_t(a[i]) + uint32_t(b[i]);
        if (e > 0xffff)
            throw ExponentOverflow("monomial exponent exceeds 2^16 in variable " +
                                   std::string(kVarNames[i]));
        r[i] = uint16_t(e);
    }
    return r;
}

} // namespace

const char* var_name(Var v) { return kVarNames[size_t(v)]; }

SymPoly SymPoly::from_terms(std::vector<Monomial> terms) {
    std::sort(terms.begin(), terms.end(), grlex_before);
    // Equal monomials cancel in pairs (coefficients live in F2).
    std::vector<Monomial> out;
    out.reserve(terms.size());
    for (size_t i = 0; i < terms.size();) {
        size_t j = i;
        while (j < terms.size() && terms[j] == terms[i])
            ++j;
        if ((j - i) % 2 == 1)
            out.push_back(terms[i]);
        i = j;
    }
    SymPoly p;
    p.terms_ = std::move(out);
    return p;
}

SymPoly SymPoly::one() {
    SymPoly p;
    p.terms_.push_back(Monomial{});
    return p;
}

SymPoly SymPoly::var(Var v) {
    Monomial m{};
    m[size_t(v)] = 1;
    SymPoly p;
    p.terms_.push_back(m);
    return p;
}

unsigned SymPoly::degree_in(Var v) const {
    unsigned d = 0;
    for (const Monomial& m : terms_)
        d = std::max(d, unsigned(m[size_t(v)]));
    return d;
}

SymPoly operator+(const SymPoly& a, const SymPoly& b) {
    // Symmetric difference of the two sorted term lists.
    std::vector<Monomial> merged;
    merged.reserve(a.terms_.size() + b.terms_.size());
    merged.insert(merged.end(), a.terms_.begin(), a.terms_.end());
    merged.insert(merged.end(), b.terms_.begin(), b.terms_.end());
    return SymPoly::from_terms(std::move(merged));
}

SymPoly operator*(const SymPoly& a, const SymPoly& b) {
    std::vector<Monomial> products;
    products.reserve(a.terms_.size() * b.terms_.size());
    for (const Monomial& ma : a.terms_)
        for (const Monomial& mb : b.terms_)
            products.push_back(mono_mul(ma, mb));
    return SymPoly::from_terms(std::move(products));
}

SymPoly SymPoly::pow(unsigned e) const {
    SymPoly result = SymPoly::one();
    SymPoly base = *this;
    while (e != 0) {
        if (e & 1)
            result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

SymPoly SymPoly::subst(const std::map<Var, SymPoly>& images) const {
    SymPoly acc;
    for (const Monomial& m : terms_) {
        SymPoly term = SymPoly::one();
        for (size_t i = 0; i < kNumVars; ++i) {
            if (m[i] == 0)
                continue;
            auto it = images.find(Var(i));
            if (it != images.end()) {
                term = term * it->second.pow(m[i]);
            } else {
                Monomial mono{};
                mono[i] = m[i];
                SymPoly v;
                v.terms_.push_back(mono);
                term = term * v;
            }
        }
        acc = acc + term;
    }
    return acc;
}

Fe SymPoly::eval(const std::map<Var, Fe>& assignment) const {
    const FieldSpec* field = nullptr;
    for (const auto& [v, value] : assignment) {
        if (field == nullptr)
            field = &value.field();
        else if (field != &value.field())
            throw FieldMismatch("assignment mixes " + field->to_string() + " and " +
                                value.field().to_string());
    }
    if (field == nullptr)
        throw MissingAssignment("empty assignment");
    Fe acc = field->zero();
    for (const Monomial& m : terms_) {
        Fe term = field->one();
        for (size_t i = 0; i < kNumVars; ++i) {
            if (m[i] == 0)
                continue;
            auto it = assignment.find(Var(i));
            if (it == assignment.end())
                throw MissingAssignment(std::string("variable ") + kVarNames[i] +
                                        " occurs but is not assigned");
            term = term * fe_pow(it->second, m[i]);
        }
        acc = acc + term;
    }
    return acc;
}

std::string SymPoly::to_string() const {
    if (terms_.empty())
        return "0";
    std::string out;
    for (size_t t = 0; t < terms_.size(); ++t) {
        if (t > 0)
            out += " + ";
        const Monomial& m = terms_[t];
        bool any = false;
        for (size_t i = 0; i < kNumVars; ++i) {
            if (m[i] == 0)
                continue;
            if (any)
                out += "*";
            out += kVarNames[i];
            if (m[i] > 1)
                out += "^" + std::to_string(m[i]);
            any = true;
        }
        if (!any)
            out += "1";
    }
    return out;
}

SymPoly reduce_artin_schreier(const SymPoly& p) {
    // u^2 = u + sb^2; each pass strictly lowers the total u-degree of the
    // terms it touches, so iteration terminates.
    SymPoly current = p;
    const SymPoly rewrite = SymPoly::var(Var::u) + SymPoly::var(Var::sb) * SymPoly::var(Var::sb);
    while (current.degree_in(Var::u) >= 2) {
        std::vector<Monomial> done;
        SymPoly pending;
        for (const Monomial& m : current.terms()) {
            uint16_t eu = m[size_t(Var::u)];
            if (eu < 2) {
                done.push_back(m);
                continue;
            }
            // m = rest * u^eu -> rest * u^(eu-2) * (u + sb^2)
            Monomial rest = m;
            rest[size_t(Var::u)] = uint16_t(eu - 2);
            SymPoly restpoly;
            restpoly.terms_.push_back(rest);
            pending = pending + restpoly * rewrite;
        }
        current = SymPoly::from_terms(std::move(done)) + pending;
    }
    return current;
}

} // namespace vermod

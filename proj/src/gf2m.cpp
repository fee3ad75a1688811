#include "vermod/gf2m.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <map>
#include <memory>
#include <mutex>

namespace vermod {

namespace {

// Lexicographically smallest irreducible polynomial of each degree 1..32,
// low bit = constant term. Frozen so every run resolves the same fields.
constexpr std::array<uint64_t, 32> kDefaultModuli = {
    0x3,        0x7,        0xb,        0x13,       0x25,
    0x43,       0x83,       0x11b,      0x203,      0x409,
    0x805,      0x1009,     0x201b,     0x4021,     0x8003,
    0x1002b,    0x20009,    0x40009,    0x80027,    0x100009,
    0x200005,   0x400003,   0x800021,   0x100001b,  0x2000009,
    0x400001b,  0x8000027,  0x10000003, 0x20000005, 0x40000003,
    0x80000009, 0x10000008d,
};

int poly_degree(uint64_t p) {
    return p == 0 ? -1 : 63 - __builtin_clzll(p);
}

uint64_t poly_mod(uint64_t a, uint64_t b) {
    int db = poly_degree(b);
    while (a != 0 && poly_degree(a) >= db)
        a ^= b << (poly_degree(a) - db);
    return a;
}

// Trial division by every candidate divisor of degree 1..m/2 with
// constant term 1 (divisors without one cannot divide an odd modulus).
bool poly_irreducible(uint64_t p) {
    int m = poly_degree(p);
    if (m < 1)
        return false;
    for (int d = 1; d <= m / 2; ++d) {
        uint64_t lo_count = uint64_t(1) << (d - 1);
        for (uint64_t lo = 0; lo < lo_count; ++lo) {
            uint64_t q = (uint64_t(1) << d) | (lo << 1) | 1;
            if (poly_mod(p, q) == 0)
                return false;
        }
    }
    return true;
}

std::string bits_to_hex(uint64_t v) {
    if (v == 0)
        return "0";
    char buf[17];
    int i = 16;
    buf[16] = '\0';
    while (v != 0) {
        buf[--i] = "0123456789abcdef"[v & 0xf];
        v >>= 4;
    }
    return std::string(buf + i);
}

uint64_t hex_to_bits(std::string_view s) {
    if (s.empty())
        throw ParseError("empty hex literal");
    uint64_t v = 0;
    if (s.size() > 16)
        throw ParseError("hex literal too long: " + std::string(s));
    for (char c : s) {
        int d;
        if (c >= '0' && c <= '9')
            d = c - '0';
        else if (c >= 'a' && c <= 'f')
            d = c - 'a' + 10;
        else
            throw ParseError(std::string("bad hex digit '") + c + "' in " + std::string(s));
        v = (v << 4) | uint64_t(d);
    }
    return v;
}

struct Registry {
    std::mutex mu;
    std::map<std::pair<unsigned, uint64_t>, std::unique_ptr<FieldSpec>> specs;
};

Registry& registry() {
    static Registry r;
    return r;
}

} // namespace

FieldSpec::FieldSpec(unsigned m, uint64_t modulus)
    : m_(m), modulus_(modulus), mask_((uint64_t(1) << m) - 1) {
    if (m_ <= kTableDegree) {
        uint64_t q = order();
        mul_table_.assign(q * q, 0);
        inv_table_.assign(q, 0);
        for (uint64_t a = 0; a < q; ++a) {
            for (uint64_t b = a; b < q; ++b) {
                uint8_t p = uint8_t(mul_raw(a, b));
                mul_table_[a * q + b] = p;
                mul_table_[b * q + a] = p;
                if (p == 1) {
                    inv_table_[a] = uint8_t(b);
                    inv_table_[b] = uint8_t(a);
                }
            }
        }
    }
}

uint64_t FieldSpec::mul_raw(uint64_t a, uint64_t b) const {
    uint64_t r = 0;
    uint64_t top = uint64_t(1) << m_;
    while (b != 0) {
        if (b & 1)
            r ^= a;
        b >>= 1;
        a <<= 1;
        if (a & top)
            a ^= modulus_;
    }
    return r;
}

const FieldSpec& FieldSpec::get(unsigned m) {
    if (m < 1 || m > kMaxDegree)
        throw UnsupportedDegree("field degree must be in [1,32], got " + std::to_string(m));
    return get(m, kDefaultModuli[m - 1]);
}

const FieldSpec& FieldSpec::get(unsigned m, uint64_t modulus) {
    if (m < 1 || m > kMaxDegree)
        throw UnsupportedDegree("field degree must be in [1,32], got " + std::to_string(m));
    if (poly_degree(modulus) != int(m))
        throw UnsupportedDegree("modulus 0x" + bits_to_hex(modulus) + " does not have degree " +
                                std::to_string(m));
    if ((modulus & 1) == 0)
        throw ReducibleModulus("modulus 0x" + bits_to_hex(modulus) +
                               " has constant term 0 (divisible by x)");
    if (!poly_irreducible(modulus))
        throw ReducibleModulus("modulus 0x" + bits_to_hex(modulus) + " factors over F2");
    Registry& r = registry();
    std::lock_guard<std::mutex> lock(r.mu);
    auto key = std::make_pair(m, modulus);
    auto it = r.specs.find(key);
    if (it == r.specs.end())
        it = r.specs.emplace(key, std::unique_ptr<FieldSpec>(new FieldSpec(m, modulus))).first;
    return *it->second;
}

const FieldSpec& FieldSpec::parse(std::string_view text) {
    // "m=<int>,mod=<hex>"; the mod part is optional.
    auto comma = text.find(',');
    std::string_view mpart = text.substr(0, comma);
    if (mpart.substr(0, 2) != "m=")
        throw ParseError("field spec must start with 'm=': " + std::string(text));
    unsigned m = 0;
    auto digits = mpart.substr(2);
    auto res = std::from_chars(digits.data(), digits.data() + digits.size(), m);
    if (res.ec != std::errc() || res.ptr != digits.data() + digits.size())
        throw ParseError("bad field degree in '" + std::string(text) + "'");
    if (comma == std::string_view::npos)
        return get(m);
    std::string_view modpart = text.substr(comma + 1);
    if (modpart.substr(0, 4) != "mod=")
        throw ParseError("expected 'mod=<hex>' in '" + std::string(text) + "'");
    return get(m, hex_to_bits(modpart.substr(4)));
}

std::string FieldSpec::to_string() const {
    return "m=" + std::to_string(m_) + ",mod=" + bits_to_hex(modulus_);
}

Fe FieldSpec::zero() const { return Fe(*this, 0); }
Fe FieldSpec::one() const { return Fe(*this, 1); }

Fe FieldSpec::gen() const {
    // For m=1 the residue of x is 1 (modulus x+1).
    return Fe(*this, m_ == 1 ? 1 : 2);
}

Fe FieldSpec::element(uint64_t bits) const { return Fe(*this, bits); }

Fe FieldSpec::parse_element(std::string_view hex) const {
    return Fe(*this, hex_to_bits(hex));
}

Fe::Fe(const FieldSpec& field, uint64_t bits) : bits_(bits), field_(&field) {
    if (bits & ~field.mask_)
        throw ParseError("element 0x" + bits_to_hex(bits) + " out of range for " +
                         field.to_string());
}

std::string Fe::to_hex() const { return bits_to_hex(bits_); }

namespace {
void require_same_field(const Fe& a, const Fe& b) {
    if (&a.field() != &b.field())
        throw FieldMismatch("mixing elements of " + a.field().to_string() + " and " +
                            b.field().to_string());
}
} // namespace

Fe operator+(const Fe& a, const Fe& b) {
    require_same_field(a, b);
    return Fe(a.field(), a.bits() ^ b.bits());
}

Fe operator*(const Fe& a, const Fe& b) {
    require_same_field(a, b);
    const FieldSpec& f = a.field();
    if (!f.mul_table_.empty())
        return Fe(f, f.mul_table_[a.bits() * f.order() + b.bits()]);
    return Fe(f, f.mul_raw(a.bits(), b.bits()));
}

bool operator==(const Fe& a, const Fe& b) {
    require_same_field(a, b);
    return a.bits() == b.bits();
}

bool operator<(const Fe& a, const Fe& b) {
    require_same_field(a, b);
    return a.bits() < b.bits();
}

Fe fe_inv(const Fe& x) {
    if (x.is_zero())
        throw DivisionByZero("inverse of 0 in " + x.field().to_string());
    const FieldSpec& f = x.field();
    if (!f.inv_table_.empty())
        return Fe(f, f.inv_table_[x.bits()]);
    uint64_t e = f.order() - 2; // x^(q-2)
    return fe_pow(x, e);
}

Fe fe_pow(const Fe& x, uint64_t e) {
    Fe result = x.field().one();
    Fe base = x;
    while (e != 0) {
        if (e & 1)
            result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

Fe fe_sqrt(const Fe& x) {
    // Squaring is a bijection; the inverse is x -> x^(2^(m-1)).
    Fe r = x;
    for (unsigned i = 0; i + 1 < x.field().degree(); ++i)
        r = r * r;
    return r;
}

int fe_trace(const Fe& x) {
    Fe acc = x;
    Fe p = x;
    for (unsigned i = 0; i + 1 < x.field().degree(); ++i) {
        p = p * p;
        acc = acc + p;
    }
    if (!acc.is_zero() && !acc.is_one())
        throw InternalError("trace of " + x.to_hex() + " not in {0,1}");
    return int(acc.bits());
}

std::optional<std::pair<Fe, Fe>> artin_schreier(const Fe& b) {
    const FieldSpec& f = b.field();
    unsigned m = f.degree();
    // Solve the F2-linear system T(u) = b where T(u) = u^2 + u.
    // Rows of the augmented system live in a uint64: columns 0..m-1 hold
    // the matrix of T against the basis 1, x, ..., x^(m-1), column m the
    // right-hand side.
    std::vector<uint64_t> rows(m, 0);
    for (unsigned j = 0; j < m; ++j) {
        Fe e = f.element(uint64_t(1) << j);
        Fe t = e * e + e;
        for (unsigned i = 0; i < m; ++i)
            if (t.bits() >> i & 1)
                rows[i] |= uint64_t(1) << j;
    }
    for (unsigned i = 0; i < m; ++i)
        rows[i] |= (b.bits() >> i & 1) << m;

    // Gaussian elimination; T has a one-dimensional kernel {0,1}, so one
    // column stays free and b is in the image iff no row reduces to 0=1.
    unsigned rank = 0;
    std::vector<int> pivot_of_row;
    for (unsigned col = 0; col < m && rank < m; ++col) {
        unsigned sel = rank;
        while (sel < m && !(rows[sel] >> col & 1))
            ++sel;
        if (sel == m)
            continue;
        std::swap(rows[rank], rows[sel]);
        for (unsigned i = 0; i < m; ++i)
            if (i != rank && (rows[i] >> col & 1))
                rows[i] ^= rows[rank];
        pivot_of_row.push_back(int(col));
        ++rank;
    }
    for (unsigned i = rank; i < m; ++i)
        if (rows[i] >> m & 1)
            return std::nullopt; // trace(b) = 1, roots live in an extension

    uint64_t u = 0;
    for (unsigned i = 0; i < rank; ++i)
        if (rows[i] >> m & 1)
            u |= uint64_t(1) << pivot_of_row[i];
    Fe u0 = f.element(u);
    Fe u1 = u0 + f.one();
    if (u0.bits() & 1)
        std::swap(u0, u1); // deterministic order: even-bit root first
    if (u0 * u0 + u0 != b)
        throw InternalError("artin_schreier solver produced a non-root");
    return std::make_pair(u0, u1);
}

namespace {

struct EmbedCache {
    std::mutex mu;
    // (source, target) -> bits of the chosen root of the source modulus.
    std::map<std::pair<const FieldSpec*, const FieldSpec*>, uint64_t> roots;
};

EmbedCache& embed_cache() {
    static EmbedCache c;
    return c;
}

Fe eval_poly_at(uint64_t poly, const Fe& at) {
    // Horner evaluation of an F2[x] polynomial at a field element.
    const FieldSpec& f = at.field();
    Fe acc = f.zero();
    for (int i = poly_degree(poly); i >= 0; --i) {
        acc = acc * at;
        if (poly >> i & 1)
            acc = acc + f.one();
    }
    return acc;
}

// Bits of the F2-subfield of `target` of degree m: kernel of x -> x^(2^m) + x.
std::vector<uint64_t> subfield_basis(const FieldSpec& target, unsigned m) {
    unsigned n = target.degree();
    std::vector<uint64_t> rows(n, 0);
    for (unsigned j = 0; j < n; ++j) {
        Fe e = target.element(uint64_t(1) << j);
        Fe p = e;
        for (unsigned k = 0; k < m; ++k)
            p = p * p;
        uint64_t t = p.bits() ^ e.bits();
        for (unsigned i = 0; i < n; ++i)
            if (t >> i & 1)
                rows[i] |= uint64_t(1) << j;
    }
    // Kernel via Gaussian elimination on the n x n matrix.
    std::vector<int> pivot_col(n, -1);
    unsigned rank = 0;
    for (unsigned col = 0; col < n && rank < n; ++col) {
        unsigned sel = rank;
        while (sel < n && !(rows[sel] >> col & 1))
            ++sel;
        if (sel == n)
            continue;
        std::swap(rows[rank], rows[sel]);
        for (unsigned i = 0; i < n; ++i)
            if (i != rank && (rows[i] >> col & 1))
                rows[i] ^= rows[rank];
        pivot_col[rank] = int(col);
        ++rank;
    }
    std::vector<uint64_t> basis;
    std::vector<bool> is_pivot(n, false);
    for (unsigned i = 0; i < rank; ++i)
        is_pivot[pivot_col[i]] = true;
    for (unsigned free = 0; free < n; ++free) {
        if (is_pivot[free])
            continue;
        uint64_t v = uint64_t(1) << free;
        for (unsigned i = 0; i < rank; ++i)
            if (rows[i] >> free & 1)
                v |= uint64_t(1) << pivot_col[i];
        basis.push_back(v);
    }
    return basis;
}

uint64_t find_embedding_root(const FieldSpec& source, const FieldSpec& target) {
    unsigned m = source.degree(), n = target.degree();
    uint64_t best = UINT64_MAX;
    if (n <= 16) {
        for (uint64_t c = 0; c < target.order(); ++c)
            if (eval_poly_at(source.modulus(), target.element(c)).is_zero()) {
                best = c;
                break; // ascending scan: first hit is smallest
            }
    } else {
        if (m > 16)
            throw TooLarge("embedding from degree " + std::to_string(m) +
                           " into degree " + std::to_string(n) + " exceeds the search bound");
        std::vector<uint64_t> basis = subfield_basis(target, m);
        if (basis.size() != m)
            throw InternalError("subfield of degree " + std::to_string(m) + " in " +
                                target.to_string() + " has wrong dimension");
        uint64_t count = uint64_t(1) << m;
        for (uint64_t sel = 0; sel < count; ++sel) {
            uint64_t c = 0;
            for (unsigned j = 0; j < m; ++j)
                if (sel >> j & 1)
                    c ^= basis[j];
            if (eval_poly_at(source.modulus(), target.element(c)).is_zero())
                best = std::min(best, c);
        }
    }
    if (best == UINT64_MAX)
        throw InternalError("no root of " + source.to_string() + " in " + target.to_string());
    return best;
}

} // namespace

Fe fe_embed(const Fe& x, const FieldSpec& target) {
    const FieldSpec& source = x.field();
    if (&source == &target)
        return x;
    unsigned m = source.degree(), n = target.degree();
    if (n % m != 0)
        throw NoEmbedding("no embedding of " + source.to_string() + " into " +
                          target.to_string() + ": degree " + std::to_string(m) +
                          " does not divide " + std::to_string(n));
    uint64_t root;
    {
        EmbedCache& c = embed_cache();
        std::lock_guard<std::mutex> lock(c.mu);
        auto key = std::make_pair(&source, &target);
        auto it = c.roots.find(key);
        if (it == c.roots.end())
            it = c.roots.emplace(key, find_embedding_root(source, target)).first;
        root = it->second;
    }
    // x = sum bits_i * g^i maps to sum bits_i * root^i.
    Fe r = target.element(root);
    Fe acc = target.zero();
    for (int i = int(m) - 1; i >= 0; --i) {
        acc = acc * r;
        if (x.bits() >> i & 1)
            acc = acc + target.one();
    }
    return acc;
}

} // namespace vermod

#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vermod/gf2m.hpp"
#include "vermod/projgeom.hpp"
#include "vermod/sympoly.hpp"

namespace vermod {

// --- The defining forms, shared between numeric and symbolic use -----------
//
// T is any commutative ring value type with + and * (Fe or SymPoly).
// Coordinate order everywhere: (x00, x01, x10, x11).

template <class T>
std::array<T, 4> p_forms(const std::array<T, 4>& x) {
    T p00 = x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3];
    T p01 = x[0] * x[1] + x[2] * x[3];
    T p10 = x[0] * x[2] + x[1] * x[3];
    T p11 = x[0] * x[3] + x[2] * x[1];
    return {p00, p01, p10, p11};
}

// Numerator components of the Frobenius-pullback map on P^3:
// (sqrt(abc) P00^2 : sqrt(b) P01^2 : sqrt(c) P10^2 : sqrt(a) P11^2).
template <class T>
std::array<T, 4> v_components(const T& sqrt_abc, const T& sqrt_b, const T& sqrt_c,
                              const T& sqrt_a, const std::array<T, 4>& x) {
    auto p = p_forms(x);
    return {sqrt_abc * (p[0] * p[0]), sqrt_b * (p[1] * p[1]), sqrt_c * (p[2] * p[2]),
            sqrt_a * (p[3] * p[3])};
}

template <class T>
T kummer_value(const T& a, const T& b, const T& c, const std::array<T, 4>& x) {
    return c * (x[0] * x[0] * x[2] * x[2] + x[1] * x[1] * x[3] * x[3]) +
           b * (x[0] * x[0] * x[1] * x[1] + x[2] * x[2] * x[3] * x[3]) +
           a * (x[0] * x[0] * x[3] * x[3] + x[2] * x[2] * x[1] * x[1]) +
           x[0] * x[1] * x[2] * x[3];
}

// The image of the hyperplane x00 = 0 under the pullback map.
template <class T>
T quartic_image_value(const T& a, const T& b, const T& c, const std::array<T, 4>& x) {
    return b * (x[3] * x[3] * x[2] * x[2]) + c * (x[3] * x[3] * x[1] * x[1]) +
           a * (x[2] * x[2] * x[1] * x[1]) + x[0] * x[2] * x[1] * x[3];
}

// One condition polynomial per choice of the 2-torsion point the ladder
// starts from: variant 1 <-> (0:1:0:0), 2 <-> (0:0:1:0), 3 <-> (0:0:0:1).
enum class ConditionVariant : int { V1 = 1, V2 = 2, V3 = 3 };

ConditionVariant condition_variant_from_int(int v);

template <class T>
T condition_value(const T& a, const T& b, const T& c, ConditionVariant variant) {
    T common = a * a + b * b + c * c;
    switch (variant) {
    case ConditionVariant::V1: return common + a + c;
    case ConditionVariant::V2: return common + a + b;
    case ConditionVariant::V3: return common + b + c;
    }
    throw InternalError("bad condition variant");
}

// --- Curve parameters -------------------------------------------------------

// The coefficient triple (a, b, c) of the genus-2 curve model, with the
// square roots the pullback map needs cached. b = 0 is rejected outright
// (the curve would be singular); abc = 0 is recorded and only blocks the
// ladder, not plain evaluation.
class CurveParams {
public:
    CurveParams(Fe a, Fe b, Fe c);

    const Fe& a() const { return a_; }
    const Fe& b() const { return b_; }
    const Fe& c() const { return c_; }
    const Fe& sqrt_a() const { return sqrt_a_; }
    const Fe& sqrt_b() const { return sqrt_b_; }
    const Fe& sqrt_c() const { return sqrt_c_; }
    const Fe& sqrt_abc() const { return sqrt_abc_; }
    bool abc_nonzero() const { return abc_nonzero_; }
    const FieldSpec& field() const { return a_.field(); }

    CurveParams embed(const FieldSpec& target) const;

    std::string to_string() const; // "a=<hex>,b=<hex>,c=<hex>"
    static CurveParams parse(const FieldSpec& field, std::string_view text);

private:
    Fe a_, b_, c_;
    Fe sqrt_a_, sqrt_b_, sqrt_c_, sqrt_abc_;
    bool abc_nonzero_;
};

enum class SurfaceKind { Kummer, QuarticImage };

bool surface_contains(SurfaceKind kind, const CurveParams& params, const ProjPoint& p);

bool condition_check(const CurveParams& params, ConditionVariant variant);

// Image of a point under the pullback map; nullopt when all four
// components vanish (p is in the base locus, where the map is undefined).
std::optional<ProjPoint> v_eval(const CurveParams& params, const ProjPoint& p);

// --- Brute-force fibers -----------------------------------------------------

struct FiberResult {
    std::vector<ProjPoint> fiber;       // non-base points mapping to the target, sorted
    std::vector<ProjPoint> base_points; // base-locus points encountered, sorted
};

// Scans all of P^3(F_q) with `workers` threads (0 = hardware default).
// Output is deterministic and independent of the worker count.
FiberResult v_preimage_bruteforce(const CurveParams& params, const ProjPoint& target,
                                  unsigned workers = 0);

// --- Symbolic verification --------------------------------------------------

struct IdentityCheck {
    std::string name;
    bool pass;
};

struct IdentityReport {
    std::vector<IdentityCheck> checks;
    bool all_pass() const;
};

// The five exact polynomial identities behind the torsion ladder:
// line_collapse, kummer_line_restriction, hyperplane_image,
// a2_membership, product_identity.
IdentityReport verify_identities();

} // namespace vermod

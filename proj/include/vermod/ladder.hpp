#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vermod/moduli.hpp"

namespace vermod {

// Which nontrivial 2-torsion point the ladder starts from. Each choice
// has its own condition polynomial variant.
enum class A1Choice : int { X01 = 1, X10 = 2, X11 = 3 };

ProjPoint a1_point(const FieldSpec& field, A1Choice choice);
ConditionVariant variant_for(A1Choice choice);
A1Choice a1_choice_from_point(const ProjPoint& p); // ParseError if not 2-torsion

// The two 4-torsion candidates (u:u:sqrt(b):sqrt(b)) for the (0:1:0:0)
// start, from the closed-form parametrization. nullopt when u^2 + u = b
// has no root in the params' field.
struct FourTorsion {
    ProjPoint point;
    Fe u_root;
};
std::optional<std::array<FourTorsion, 2>> four_torsion_candidates(const CurveParams& params);

struct A2Candidate {
    ProjPoint point;
    std::optional<Fe> u_root; // set when the closed form applies
    bool on_kummer;
    bool on_quartic_image; // iff some square root lies in x00 = 0 over the closure
};

// A fiber together with the line it spans (if collinear). `full` means
// fiber plus the base points on the line account for all q+1 points.
struct LineFit {
    std::optional<ProjLine> line;
    bool full = false;
    std::vector<ProjPoint> fiber;
    std::vector<ProjPoint> base_on_line;
};

struct A3Entry {
    ProjPoint point;
    size_t a2_index;
    bool x00_is_zero;
    bool verified_image; // v_eval(point) re-checked against its parent
};

struct DeltaEntry {
    size_t a3_index;
    LineFit fit;
    std::vector<ProjPoint> stable_points; // on the line, off the Kummer surface
};

// The full outcome of one ladder run. Each stage records the field degree
// it concluded in; points belong to the field of their stage.
struct LadderReport {
    CurveParams base_params;
    A1Choice a1_choice;
    bool condition_holds; // for the variant matching a1_choice
    std::vector<unsigned> degrees_searched;

    std::vector<ProjPoint> fiber_a0;
    bool fiber_a0_is_two_torsion = false;
    unsigned fiber_a0_degree = 0;

    LineFit line_l;
    unsigned line_l_degree = 0;

    std::vector<A2Candidate> a2_candidates;
    unsigned a2_degree = 0;

    std::vector<A3Entry> a3_points;
    unsigned a3_degree = 0;

    std::vector<DeltaEntry> deltas;
    unsigned delta_degree = 0;
};

// Runs the chain A0 -> A1 -> A2 -> A3 -> Delta over the params' field,
// doubling the field degree (up to max_extension_degree, itself capped
// at 8) whenever a stage comes up empty. Requires abc != 0.
LadderReport run_ladder(const CurveParams& params, A1Choice a1_choice,
                        unsigned max_extension_degree, unsigned workers = 0);

// Stages A1 -> L -> A2 only, with the same extension policy; used to test
// the condition/geometry equivalence without the A3 brute force.
std::vector<A2Candidate> ladder_a2_probe(const CurveParams& params, A1Choice a1_choice,
                                         unsigned max_extension_degree, unsigned workers = 0);

// --- Parameter-space scan ---------------------------------------------------

struct ScanResult {
    const FieldSpec* field;
    ConditionVariant variant;
    bool require_abc_nonzero;
    std::vector<std::array<Fe, 3>> triples; // sorted by (a,b,c) bit patterns
};

// All (a,b,c) with b != 0 (and abc != 0 when flagged) satisfying the
// variant's condition polynomial.
ScanResult scan_curves(const FieldSpec& field, ConditionVariant variant,
                       bool require_abc_nonzero);

} // namespace vermod

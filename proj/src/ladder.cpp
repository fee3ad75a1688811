#include "vermod/ladder.hpp"

#include <algorithm>

namespace vermod {

namespace {

constexpr unsigned kEnumerationCap = 8;

ProjPoint coordinate_point(const FieldSpec& f, int index) {
    std::array<Fe, 4> c = {f.zero(), f.zero(), f.zero(), f.zero()};
    c[size_t(index)] = f.one();
    return ProjPoint(c);
}

std::vector<ProjPoint> two_torsion_points(const FieldSpec& f) {
    std::vector<ProjPoint> pts;
    for (int i = 0; i < 4; ++i)
        pts.push_back(coordinate_point(f, i));
    std::sort(pts.begin(), pts.end());
    return pts;
}

} // namespace

ProjPoint a1_point(const FieldSpec& field, A1Choice choice) {
    switch (choice) {
    case A1Choice::X01: return coordinate_point(field, 1);
    case A1Choice::X10: return coordinate_point(field, 2);
    case A1Choice::X11: return coordinate_point(field, 3);
    }
    throw InternalError("bad A1 choice");
}

ConditionVariant variant_for(A1Choice choice) {
    return condition_variant_from_int(int(choice));
}

A1Choice a1_choice_from_point(const ProjPoint& p) {
    const FieldSpec& f = p.field();
    for (A1Choice c : {A1Choice::X01, A1Choice::X10, A1Choice::X11})
        if (p == a1_point(f, c))
            return c;
    throw ParseError("a1 must be one of 0:1:0:0, 0:0:1:0, 0:0:0:1, got " + p.to_string());
}

std::optional<std::array<FourTorsion, 2>> four_torsion_candidates(const CurveParams& params) {
    auto roots = artin_schreier(params.b());
    if (!roots.has_value())
        return std::nullopt;
    auto make = [&](const Fe& u) {
        return FourTorsion{ProjPoint({u, u, params.sqrt_b(), params.sqrt_b()}), u};
    };
    return std::array<FourTorsion, 2>{make(roots->first), make(roots->second)};
}

namespace {

// Mutable pipeline state: the field the ladder currently works in and
// the params embedded into it.
struct Ctx {
    const FieldSpec* field;
    CurveParams params;
    unsigned max_extension;
    unsigned workers;
    std::vector<unsigned> degrees;

    bool can_extend() const {
        unsigned next = field->degree() * 2;
        return next <= max_extension && next <= kEnumerationCap;
    }
    void extend() {
        const FieldSpec& next = FieldSpec::get(field->degree() * 2);
        params = params.embed(next);
        field = &next;
        degrees.push_back(next.degree());
    }
};

LineFit fit_fiber_line(const Ctx& ctx, const FiberResult& fiber_result) {
    LineFit fit;
    fit.fiber = fiber_result.fiber;
    auto line = fit_line(fit.fiber, /*subset_mode=*/true);
    if (!line.has_value())
        return fit;
    fit.line = line;
    for (const ProjPoint& bp : fiber_result.base_points)
        if (line->contains(bp))
            fit.base_on_line.push_back(bp);
    fit.full = fit.fiber.size() + fit.base_on_line.size() == size_t(ctx.field->order() + 1);
    return fit;
}

LineFit line_stage(Ctx& ctx, A1Choice choice) {
    // The fiber over the chosen 2-torsion point, and the line it spans.
    while (true) {
        ProjPoint a1 = a1_point(*ctx.field, choice);
        FiberResult fr = v_preimage_bruteforce(ctx.params, a1, ctx.workers);
        LineFit fit = fit_fiber_line(ctx, fr);
        if (fit.line.has_value() || !ctx.can_extend())
            return fit;
        ctx.extend();
    }
}

std::vector<A2Candidate> a2_stage(Ctx& ctx, A1Choice choice, LineFit& line_l) {
    while (true) {
        std::vector<A2Candidate> found;
        if (line_l.line.has_value()) {
            for (const ProjPoint& p : line_points(*line_l.line)) {
                if (!surface_contains(SurfaceKind::Kummer, ctx.params, p))
                    continue;
                bool on_qi = surface_contains(SurfaceKind::QuarticImage, ctx.params, p);
                found.push_back(A2Candidate{p, std::nullopt, true, on_qi});
            }
        }
        if (choice == A1Choice::X01) {
            // Closed form available: attach u-roots and cross-check the scan.
            auto closed = four_torsion_candidates(ctx.params);
            if (closed.has_value()) {
                for (const FourTorsion& ft : *closed) {
                    bool matched = false;
                    for (A2Candidate& cand : found)
                        if (cand.point == ft.point) {
                            cand.u_root = ft.u_root;
                            matched = true;
                        }
                    if (!matched)
                        throw InternalError("closed-form 4-torsion point " +
                                            ft.point.to_string() +
                                            " missed by the line/Kummer scan");
                }
                if (found.size() != 2)
                    throw InternalError("line/Kummer scan found " +
                                        std::to_string(found.size()) +
                                        " points, closed form predicts 2");
            } else if (!found.empty()) {
                throw InternalError("line/Kummer scan found points although u^2+u=b "
                                    "has no root in " + ctx.field->to_string());
            }
        }
        if (!found.empty() || !ctx.can_extend())
            return found;
        ctx.extend();
        if (line_l.line.has_value()) {
            FiberResult fr = v_preimage_bruteforce(
                ctx.params, a1_point(*ctx.field, choice), ctx.workers);
            line_l = fit_fiber_line(ctx, fr);
        }
    }
}

std::vector<A3Entry> a3_stage(Ctx& ctx, std::vector<A2Candidate>& a2) {
    while (true) {
        std::vector<A3Entry> entries;
        for (size_t i = 0; i < a2.size(); ++i) {
            FiberResult fr = v_preimage_bruteforce(ctx.params, a2[i].point, ctx.workers);
            for (const ProjPoint& p : fr.fiber) {
                auto image = v_eval(ctx.params, p);
                entries.push_back(A3Entry{p, i, p[0].is_zero(),
                                          image.has_value() && *image == a2[i].point});
            }
        }
        if (!entries.empty() || a2.empty() || !ctx.can_extend())
            return entries;
        ctx.extend();
        for (A2Candidate& cand : a2) {
            cand.point = cand.point.embed(*ctx.field);
            if (cand.u_root.has_value())
                cand.u_root = fe_embed(*cand.u_root, *ctx.field);
        }
    }
}

std::vector<DeltaEntry> delta_stage(const Ctx& ctx, const std::vector<A3Entry>& a3) {
    std::vector<DeltaEntry> deltas;
    for (size_t i = 0; i < a3.size(); ++i) {
        if (!a3[i].x00_is_zero)
            continue;
        FiberResult fr = v_preimage_bruteforce(ctx.params, a3[i].point, ctx.workers);
        DeltaEntry entry;
        entry.a3_index = i;
        entry.fit = fit_fiber_line(ctx, fr);
        if (entry.fit.line.has_value()) {
            for (const ProjPoint& p : line_points(*entry.fit.line)) {
                bool is_base = std::binary_search(fr.base_points.begin(),
                                                  fr.base_points.end(), p);
                if (!is_base && !surface_contains(SurfaceKind::Kummer, ctx.params, p))
                    entry.stable_points.push_back(p);
            }
        }
        deltas.push_back(std::move(entry));
    }
    return deltas;
}

// Internal consistency gate run before a report is returned: every edge
// of the ladder must re-verify.
void verify_report(const LadderReport& report) {
    const FieldSpec& a3_field = FieldSpec::get(report.a3_degree);
    CurveParams a3_params = report.base_params.embed(a3_field);
    for (const A3Entry& e : report.a3_points) {
        if (!e.verified_image)
            throw InternalError("a3 point " + e.point.to_string() +
                                " does not map to its a2 parent");
        auto image = v_eval(a3_params, e.point);
        ProjPoint parent = report.a2_candidates[e.a2_index].point.embed(a3_field);
        if (!image.has_value() || *image != parent)
            throw InternalError("a3 edge re-verification failed at " + e.point.to_string());
    }
    const FieldSpec& delta_field = FieldSpec::get(report.delta_degree);
    CurveParams delta_params = report.base_params.embed(delta_field);
    for (const DeltaEntry& d : report.deltas) {
        ProjPoint target = report.a3_points[d.a3_index].point;
        for (const ProjPoint& p : d.fit.fiber) {
            auto image = v_eval(delta_params, p);
            if (!image.has_value() || *image != target)
                throw InternalError("delta fiber point " + p.to_string() +
                                    " does not map to its a3");
        }
        for (const ProjPoint& p : d.stable_points) {
            if (!d.fit.line->contains(p))
                throw InternalError("stable point off its delta line");
            if (surface_contains(SurfaceKind::Kummer, delta_params, p))
                throw InternalError("stable point lies on the Kummer surface");
        }
    }
    if (!report.condition_holds) {
        for (const A2Candidate& cand : report.a2_candidates)
            if (cand.on_quartic_image)
                throw InternalError("condition fails but a2 candidate " +
                                    cand.point.to_string() + " is on the quartic image");
    }
}

Ctx make_ctx(const CurveParams& params, unsigned max_extension_degree, unsigned workers) {
    if (!params.abc_nonzero())
        throw InvalidParams("ladder requires abc != 0, got " + params.to_string());
    if (params.field().degree() > kEnumerationCap)
        throw TooLarge("ladder base field capped at m <= 8");
    unsigned max_ext = std::min(max_extension_degree, kEnumerationCap);
    return Ctx{&params.field(), params, max_ext, workers, {params.field().degree()}};
}

} // namespace

LadderReport run_ladder(const CurveParams& params, A1Choice a1_choice,
                        unsigned max_extension_degree, unsigned workers) {
    Ctx ctx = make_ctx(params, max_extension_degree, workers);
    LadderReport report{params,
                        a1_choice,
                        condition_check(params, variant_for(a1_choice)),
                        {},
                        {},
                        false,
                        0,
                        {},
                        0,
                        {},
                        0,
                        {},
                        0,
                        {},
                        0};

    // Fiber over (1:0:0:0): must be the four coordinate points.
    ProjPoint a0 = coordinate_point(*ctx.field, 0);
    report.fiber_a0 = v_preimage_bruteforce(ctx.params, a0, ctx.workers).fiber;
    report.fiber_a0_is_two_torsion = report.fiber_a0 == two_torsion_points(*ctx.field);
    report.fiber_a0_degree = ctx.field->degree();

    report.line_l = line_stage(ctx, a1_choice);
    report.line_l_degree = ctx.field->degree();

    report.a2_candidates = a2_stage(ctx, a1_choice, report.line_l);
    report.line_l_degree = ctx.field->degree(); // a2 retries refresh the line
    report.a2_degree = ctx.field->degree();

    // A3 fibers; then delta lines over every a3 in the hyperplane, with
    // the extension retry re-running the a3 fibers in the larger field.
    while (true) {
        report.a3_points = a3_stage(ctx, report.a2_candidates);
        report.a2_degree = ctx.field->degree();
        report.a3_degree = ctx.field->degree();
        report.deltas = delta_stage(ctx, report.a3_points);
        report.delta_degree = ctx.field->degree();
        bool any_delta_line = false;
        for (const DeltaEntry& d : report.deltas)
            if (d.fit.line.has_value())
                any_delta_line = true;
        if (any_delta_line || report.a3_points.empty() || !ctx.can_extend())
            break;
        ctx.extend();
        for (A2Candidate& cand : report.a2_candidates) {
            cand.point = cand.point.embed(*ctx.field);
            if (cand.u_root.has_value())
                cand.u_root = fe_embed(*cand.u_root, *ctx.field);
        }
    }

    report.degrees_searched = ctx.degrees;
    verify_report(report);
    return report;
}

std::vector<A2Candidate> ladder_a2_probe(const CurveParams& params, A1Choice a1_choice,
                                         unsigned max_extension_degree, unsigned workers) {
    Ctx ctx = make_ctx(params, max_extension_degree, workers);
    LineFit line_l = line_stage(ctx, a1_choice);
    return a2_stage(ctx, a1_choice, line_l);
}

ScanResult scan_curves(const FieldSpec& field, ConditionVariant variant,
                       bool require_abc_nonzero) {
    if (field.degree() > kEnumerationCap)
        throw TooLarge("curve scan capped at m <= 8, got m=" +
                       std::to_string(field.degree()));
    ScanResult result{&field, variant, require_abc_nonzero, {}};
    uint64_t q = field.order();
    for (uint64_t ab = 0; ab < q; ++ab) {
        Fe a = field.element(ab);
        for (uint64_t bb = 1; bb < q; ++bb) {
            Fe b = field.element(bb);
            for (uint64_t cb = 0; cb < q; ++cb) {
                Fe c = field.element(cb);
                if (require_abc_nonzero && (ab == 0 || cb == 0))
                    continue;
                if (condition_value(a, b, c, variant).is_zero())
                    result.triples.push_back({a, b, c});
            }
        }
    }
    return result;
}

} // namespace vermod

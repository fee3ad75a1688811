#include "vermod/projgeom.hpp"

#include <algorithm>

namespace vermod {

namespace {

void require_field(const Fe& x, const FieldSpec& f, const char* what) {
    if (&x.field() != &f)
        throw FieldMismatch(std::string(what) + ": expected " + f.to_string() + ", got " +
                            x.field().to_string());
}

std::array<Fe, 4> normalize_coords(std::array<Fe, 4> c) {
    const FieldSpec& f = c[0].field();
    for (int i = 1; i < 4; ++i)
        require_field(c[size_t(i)], f, "point coordinate");
    int lead = -1;
    for (int i = 0; i < 4; ++i)
        if (!c[size_t(i)].is_zero()) {
            lead = i;
            break;
        }
    if (lead < 0)
        throw ZeroVector("all four coordinates vanish");
    if (c[size_t(lead)].is_one())
        return c;
    Fe scale = fe_inv(c[size_t(lead)]);
    for (int i = lead; i < 4; ++i)
        c[size_t(i)] = c[size_t(i)] * scale;
    return c;
}

} // namespace

ProjPoint::ProjPoint(std::array<Fe, 4> raw) : c_(normalize_coords(std::move(raw))) {}

std::string ProjPoint::to_string() const {
    return c_[0].to_hex() + ":" + c_[1].to_hex() + ":" + c_[2].to_hex() + ":" + c_[3].to_hex();
}

ProjPoint ProjPoint::parse(const FieldSpec& field, std::string_view text) {
    std::array<std::string_view, 4> parts;
    size_t start = 0;
    for (int i = 0; i < 4; ++i) {
        size_t colon = text.find(':', start);
        bool last = (i == 3);
        if (!last && colon == std::string_view::npos)
            throw ParseError("point needs 4 ':'-separated coordinates: " + std::string(text));
        if (last && colon != std::string_view::npos)
            throw ParseError("too many coordinates in point: " + std::string(text));
        parts[size_t(i)] = last ? text.substr(start) : text.substr(start, colon - start);
        start = colon + 1;
    }
    return ProjPoint({field.parse_element(parts[0]), field.parse_element(parts[1]),
                      field.parse_element(parts[2]), field.parse_element(parts[3])});
}

ProjPoint ProjPoint::embed(const FieldSpec& target) const {
    return ProjPoint({fe_embed(c_[0], target), fe_embed(c_[1], target), fe_embed(c_[2], target),
                      fe_embed(c_[3], target)});
}

bool operator==(const ProjPoint& a, const ProjPoint& b) {
    return a.c_ == b.c_;
}

bool operator<(const ProjPoint& a, const ProjPoint& b) {
    for (int i = 0; i < 4; ++i) {
        if (a[i].bits() != b[i].bits())
            return a[i].bits() < b[i].bits();
    }
    return false;
}

namespace {

// Reduced row echelon form of the span of two coordinate vectors.
// Returns the two echelon rows; DegenerateSpan if the rank is below 2.
std::array<std::array<Fe, 4>, 2> echelon2(std::array<Fe, 4> r0, std::array<Fe, 4> r1) {
    int lead0 = -1;
    for (int i = 0; i < 4 && lead0 < 0; ++i)
        if (!r0[size_t(i)].is_zero())
            lead0 = i;
    // r0 is normalized (leading 1) because it comes from a ProjPoint.
    // Eliminate r0's leading coordinate from r1.
    Fe factor = r1[size_t(lead0)];
    for (int i = 0; i < 4; ++i)
        r1[size_t(i)] = r1[size_t(i)] + factor * r0[size_t(i)];
    int lead1 = -1;
    for (int i = 0; i < 4 && lead1 < 0; ++i)
        if (!r1[size_t(i)].is_zero())
            lead1 = i;
    if (lead1 < 0)
        throw DegenerateSpan("span of a point with itself");
    Fe inv = fe_inv(r1[size_t(lead1)]);
    for (int i = 0; i < 4; ++i)
        r1[size_t(i)] = r1[size_t(i)] * inv;
    // Back-substitute to clear r1's pivot column in r0.
    Fe f0 = r0[size_t(lead1)];
    if (!f0.is_zero())
        for (int i = 0; i < 4; ++i)
            r0[size_t(i)] = r0[size_t(i)] + f0 * r1[size_t(i)];
    if (lead1 < lead0)
        std::swap(r0, r1);
    return {r0, r1};
}

} // namespace

ProjLine line_span(const ProjPoint& p, const ProjPoint& q) {
    if (&p.field() != &q.field())
        throw FieldMismatch("line through points of different fields");
    auto rows = echelon2(p.coords(), q.coords());
    return ProjLine(ProjPoint(rows[0]), ProjPoint(rows[1]));
}

bool ProjLine::contains(const ProjPoint& p) const {
    if (&p.field() != &field())
        throw FieldMismatch("membership test across fields");
    // Reduce p against the echelon rows; in the span iff the residue is 0.
    std::array<Fe, 4> v = p.coords();
    for (const ProjPoint& row : rows_) {
        int lead = -1;
        for (int i = 0; i < 4 && lead < 0; ++i)
            if (!row[i].is_zero())
                lead = i;
        Fe factor = v[size_t(lead)];
        if (!factor.is_zero())
            for (int i = 0; i < 4; ++i)
                v[size_t(i)] = v[size_t(i)] + factor * row[i];
    }
    for (int i = 0; i < 4; ++i)
        if (!v[size_t(i)].is_zero())
            return false;
    return true;
}

std::string ProjLine::to_string() const {
    return rows_[0].to_string() + "|" + rows_[1].to_string();
}

ProjLine ProjLine::embed(const FieldSpec& target) const {
    return line_span(rows_[0].embed(target), rows_[1].embed(target));
}

bool operator==(const ProjLine& a, const ProjLine& b) {
    return a.rows_[0] == b.rows_[0] && a.rows_[1] == b.rows_[1];
}

std::vector<ProjPoint> line_points(const ProjLine& line) {
    const FieldSpec& f = line.field();
    std::vector<ProjPoint> pts;
    pts.reserve(size_t(f.order() + 1));
    pts.push_back(line.row1());
    for (uint64_t t = 0; t < f.order(); ++t) {
        Fe lambda = f.element(t);
        std::array<Fe, 4> v{
            line.row0()[0] + lambda * line.row1()[0],
            line.row0()[1] + lambda * line.row1()[1],
            line.row0()[2] + lambda * line.row1()[2],
            line.row0()[3] + lambda * line.row1()[3],
        };
        pts.push_back(ProjPoint(v));
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

std::optional<ProjLine> fit_line(const std::vector<ProjPoint>& points, bool subset_mode) {
    if (points.size() < 2)
        return std::nullopt;
    const ProjPoint& p0 = points[0];
    size_t second = 1;
    while (second < points.size() && points[second] == p0)
        ++second;
    if (second == points.size())
        return std::nullopt;
    ProjLine line = line_span(p0, points[second]);
    for (const ProjPoint& p : points)
        if (!line.contains(p))
            return std::nullopt;
    if (!subset_mode) {
        std::vector<ProjPoint> dedup = points;
        std::sort(dedup.begin(), dedup.end());
        dedup.erase(std::unique(dedup.begin(), dedup.end()), dedup.end());
        if (dedup.size() != size_t(p0.field().order() + 1))
            return std::nullopt;
    }
    return line;
}

uint64_t p3_point_count(const FieldSpec& field) {
    if (field.degree() > 8)
        throw TooLarge("P^3 enumeration capped at m <= 8, got m=" +
                       std::to_string(field.degree()));
    uint64_t q = field.order();
    return q * q * q + q * q + q + 1;
}

ProjPoint p3_point_at(const FieldSpec& field, uint64_t index) {
    uint64_t q = field.order();
    uint64_t total = p3_point_count(field);
    if (index >= total)
        throw TooLarge("P^3 index " + std::to_string(index) + " out of range");
    Fe zero = field.zero(), one = field.one();
    if (index == 0)
        return ProjPoint({zero, zero, zero, one});
    index -= 1;
    if (index < q)
        return ProjPoint({zero, zero, one, field.element(index)});
    index -= q;
    if (index < q * q)
        return ProjPoint({zero, one, field.element(index / q), field.element(index % q)});
    index -= q * q;
    return ProjPoint({one, field.element(index / (q * q)), field.element(index / q % q),
                      field.element(index % q)});
}

void for_each_p3(const FieldSpec& field, uint64_t begin, uint64_t end,
                 const std::function<void(const ProjPoint&)>& fn) {
    for (uint64_t i = begin; i < end; ++i)
        fn(p3_point_at(field, i));
}

std::vector<ProjPoint> enumerate_p3(const FieldSpec& field) {
    uint64_t n = p3_point_count(field);
    std::vector<ProjPoint> pts;
    pts.reserve(n);
    for (uint64_t i = 0; i < n; ++i)
        pts.push_back(p3_point_at(field, i));
    return pts;
}

} // namespace vermod

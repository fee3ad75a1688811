#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vermod/gf2m.hpp"

namespace vermod {

// A point of P^3 over a binary field, stored normalized: the first
// nonzero coordinate equals 1, so equality is coordinate-wise equality.
// Coordinate order is (x00, x01, x10, x11).
class ProjPoint {
public:
    explicit ProjPoint(std::array<Fe, 4> raw); // normalizes; ZeroVector if all zero

    const Fe& operator[](int i) const { return c_[size_t(i)]; }
    const std::array<Fe, 4>& coords() const { return c_; }
    const FieldSpec& field() const { return c_[0].field(); }

    std::string to_string() const; // "x00:x01:x10:x11" in element hex
    static ProjPoint parse(const FieldSpec& field, std::string_view text);

    ProjPoint embed(const FieldSpec& target) const;

    friend bool operator==(const ProjPoint& a, const ProjPoint& b);
    friend bool operator!=(const ProjPoint& a, const ProjPoint& b) { return !(a == b); }
    friend bool operator<(const ProjPoint& a, const ProjPoint& b); // enumeration order

private:
    std::array<Fe, 4> c_;
};

// A line of P^3 held in canonical form: the reduced row echelon basis of
// its 2-dimensional span. Lines are equal iff their echelon rows match.
class ProjLine {
public:
    const ProjPoint& row0() const { return rows_[0]; }
    const ProjPoint& row1() const { return rows_[1]; }
    const FieldSpec& field() const { return rows_[0].field(); }

    bool contains(const ProjPoint& p) const;
    std::string to_string() const; // echelon rows joined by "|"

    ProjLine embed(const FieldSpec& target) const;

    friend bool operator==(const ProjLine& a, const ProjLine& b);
    friend bool operator!=(const ProjLine& a, const ProjLine& b) { return !(a == b); }

    friend ProjLine line_span(const ProjPoint& p, const ProjPoint& q);

private:
    ProjLine(ProjPoint r0, ProjPoint r1) : rows_{std::move(r0), std::move(r1)} {}
    std::array<ProjPoint, 2> rows_;
};

// Line through two projectively distinct points; DegenerateSpan if p = q.
ProjLine line_span(const ProjPoint& p, const ProjPoint& q);

// The q+1 rational points of a line, in enumeration order.
std::vector<ProjPoint> line_points(const ProjLine& line);

// Span of the first two distinct points, provided every input lies on it.
// Full mode additionally requires exactly q+1 distinct input points;
// subset mode checks collinearity only.
std::optional<ProjLine> fit_line(const std::vector<ProjPoint>& points, bool subset_mode = false);

// --- P^3 enumeration -------------------------------------------------------
//
// Deterministic order: ascending lexicographic on the normalized
// coordinate bit patterns (x00 first). Index ranges partition cleanly
// across workers. Fields with m > 8 are rejected (TooLarge).

uint64_t p3_point_count(const FieldSpec& field); // q^3 + q^2 + q + 1
ProjPoint p3_point_at(const FieldSpec& field, uint64_t index);
void for_each_p3(const FieldSpec& field, uint64_t begin, uint64_t end,
                 const std::function<void(const ProjPoint&)>& fn);
std::vector<ProjPoint> enumerate_p3(const FieldSpec& field);

} // namespace vermod

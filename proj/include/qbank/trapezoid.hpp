#pragma once

/// Lattice trapezoids: four integer vertices, exact shoelace area, and a
/// perimeter kept as a RadicalSum so values like 13 + sqrt(13) survive intact
/// into option rendering.

#include <array>
#include <cstdint>

#include "qbank/radical.hpp"
#include "qbank/rational.hpp"

namespace qbank {

struct Point {
    std::int64_t x = 0;
    std::int64_t y = 0;

    bool operator==(const Point&) const = default;
};

struct LatticeTrapezoid {
    std::array<Point, 4> vertices; // counterclockwise
    Rational area;
    RadicalSum perimeter;
    // Parallel (horizontal) sides and their separation, for the b1*h style
    // area distractor: base1 is the bottom side.
    std::int64_t base1 = 0;
    std::int64_t base2 = 0;
    std::int64_t height = 0;
};

/// Exact polygon area from the shoelace sum; vertices in order, either
/// orientation.
Rational shoelace_area(const std::array<Point, 4>& vertices);

/// Sum of the four edge lengths as an exact radical sum.
RadicalSum perimeter_of(const std::array<Point, 4>& vertices);

/// Exact length of one edge, vertices[i] to vertices[(i+1) % 4].
RadicalSum edge_length(const std::array<Point, 4>& vertices, int i);

/// Validates and packages a counterclockwise lattice trapezoid. Throws
/// std::invalid_argument when the quadrilateral is degenerate, not simple,
/// clockwise, a parallelogram, or lacks a horizontal parallel pair.
LatticeTrapezoid make_lattice_trapezoid(const std::array<Point, 4>& vertices);

} // namespace qbank

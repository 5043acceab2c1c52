#include "qbank/trapezoid.hpp"

#include <stdexcept>

#include "qbank/checked_int.hpp"

namespace qbank {

namespace {

std::int64_t cross(Point a, Point b) {
    return checked_sub(checked_mul(a.x, b.y), checked_mul(a.y, b.x));
}

Point edge_vector(const std::array<Point, 4>& v, int i) {
    const Point& p = v[static_cast<std::size_t>(i)];
    const Point& q = v[static_cast<std::size_t>((i + 1) % 4)];
    return {q.x - p.x, q.y - p.y};
}

// Strict segment intersection for the two diagonal edge pairs of a
// quadrilateral; touching endpoints do not count.
int orientation(Point a, Point b, Point c) {
    const std::int64_t v = cross({b.x - a.x, b.y - a.y}, {c.x - a.x, c.y - a.y});
    return v > 0 ? 1 : v < 0 ? -1 : 0;
}

bool segments_cross(Point a, Point b, Point c, Point d) {
    const int o1 = orientation(a, b, c);
    const int o2 = orientation(a, b, d);
    const int o3 = orientation(c, d, a);
    const int o4 = orientation(c, d, b);
    return o1 != o2 && o3 != o4 && o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0;
}

} // namespace

Rational shoelace_area(const std::array<Point, 4>& vertices) {
    std::int64_t doubled = 0;
    for (std::size_t i = 0; i < 4; ++i) {
        const Point& p = vertices[i];
        const Point& q = vertices[(i + 1) % 4];
        doubled = checked_add(doubled, cross(p, q));
    }
    if (doubled < 0) doubled = checked_negate(doubled);
    return rational_reduce(doubled, 2);
}

RadicalSum edge_length(const std::array<Point, 4>& vertices, int i) {
    const Point e = edge_vector(vertices, i);
    const std::int64_t squared = checked_add(checked_mul(e.x, e.x), checked_mul(e.y, e.y));
    return radical_sqrt(squared);
}

RadicalSum perimeter_of(const std::array<Point, 4>& vertices) {
    RadicalSum total;
    for (int i = 0; i < 4; ++i) total = total + edge_length(vertices, i);
    return total;
}

LatticeTrapezoid make_lattice_trapezoid(const std::array<Point, 4>& vertices) {
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            if (vertices[i] == vertices[j])
                throw std::invalid_argument("trapezoid: repeated vertex");

    // Counterclockwise orientation, checked on the signed shoelace sum.
    std::int64_t signed_doubled = 0;
    for (std::size_t i = 0; i < 4; ++i)
        signed_doubled = checked_add(signed_doubled, cross(vertices[i], vertices[(i + 1) % 4]));
    if (signed_doubled <= 0)
        throw std::invalid_argument("trapezoid: vertices must be counterclockwise");

    if (segments_cross(vertices[0], vertices[1], vertices[2], vertices[3]) ||
        segments_cross(vertices[1], vertices[2], vertices[3], vertices[0]))
        throw std::invalid_argument("trapezoid: self-intersecting outline");

    const Point e0 = edge_vector(vertices, 0);
    const Point e1 = edge_vector(vertices, 1);
    const Point e2 = edge_vector(vertices, 2);
    const Point e3 = edge_vector(vertices, 3);
    const bool pair02 = cross(e0, e2) == 0;
    const bool pair13 = cross(e1, e3) == 0;
    if (pair02 == pair13)
        throw std::invalid_argument(pair02 ? "trapezoid: parallelogram excluded"
                                           : "trapezoid: no parallel sides");

    // The generators draw the parallel pair horizontal; base/height extraction
    // relies on that, so enforce it here.
    const int bottom = pair02 ? 0 : 1;
    const Point base_edge = pair02 ? e0 : e1;
    const Point top_edge = pair02 ? e2 : e3;
    if (base_edge.y != 0 || top_edge.y != 0)
        throw std::invalid_argument("trapezoid: parallel sides must be horizontal");

    LatticeTrapezoid t;
    t.vertices = vertices;
    t.area = shoelace_area(vertices);
    t.perimeter = perimeter_of(vertices);
    t.base1 = base_edge.x < 0 ? -base_edge.x : base_edge.x;
    t.base2 = top_edge.x < 0 ? -top_edge.x : top_edge.x;
    const std::int64_t y_base = vertices[static_cast<std::size_t>(bottom)].y;
    const std::int64_t y_top = vertices[static_cast<std::size_t>((bottom + 2) % 4)].y;
    t.height = y_top > y_base ? y_top - y_base : y_base - y_top;
    return t;
}

} // namespace qbank

#pragma once

#include <cstdint>
#include <vector>

#include "quasiadj/bipoly.hpp"

namespace quasiadj {

struct NewtonEdge {
    Exp from;  // endpoint with the larger x-exponent
    Exp to;
    /// (from.x - to.x) / (to.y - from.y)
    Rat inclination;
    /// Primitive (nx, ny) with nx*a + ny*b constant along the edge.
    std::uint32_t normal_x = 0;
    std::uint32_t normal_y = 0;
    /// Sum of c * t^j over edge terms, j = lattice steps from `to`.
    UniPoly edge_poly;
};

/// Compact faces of the local Newton polygon (convex hull of support + R^2_+).
struct NewtonPolygon {
    std::vector<Exp> vertices;  // by decreasing x-exponent
    std::vector<NewtonEdge> edges;
};

/// Throws DomainError for the zero polynomial.
NewtonPolygon newton_polygon(const BiPoly& p);

}  // namespace quasiadj

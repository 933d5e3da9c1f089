// Complete enumeration of Heronian triangles.
//
// All searches run in Ravi coordinates (x <= y <= z) and every result list is
// sorted lexicographically by (a, b, c).

#pragma once

#include <vector>

#include "heron/core.hpp"

namespace heron {

/// Perimeter bound for area queries. Every triangle of area A has
/// s(s-2) <= s*x*y*z = A^2, which caps the perimeter at 2A + 2 (and a
/// fortiori at 2A^2).
struct AreaQueryBound {
  Int area;
  Int perimeter_bound;
};

AreaQueryBound area_query_bound(Int area);

/// Heronian triangles of perimeter p; empty for odd p.
std::vector<Triangle> triangles_with_perimeter(Int p);

/// Heronian triangles of the given area, by divisor-triple search.
std::vector<Triangle> triangles_with_area(Int area);

/// Solutions of xyz = 4(x+y+z) over the region that equation forces.
std::vector<Triangle> equable_triangles();

/// Heronian triangles with perimeter <= p_max and perimeter > area.
std::vector<Triangle> deficient_triangles(Int p_max);

/// Every Heronian triangle with perimeter <= p_max. Splits the semiperimeter
/// range across worker threads; output order does not depend on scheduling.
std::vector<Triangle> triangles_up_to_perimeter(Int p_max, unsigned workers = 0);

/// Heronian triangles with perimeter <= p_max and area <= area_max, pruned on
/// s*x*y*z <= area_max^2 so that large perimeters cost nothing.
std::vector<Triangle> triangles_within(Int p_max, Int area_max);

}  // namespace heron

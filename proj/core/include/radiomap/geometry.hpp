// SPDX-License-Identifier: Apache-2.0
#ifndef RADIOMAP_GEOMETRY_HPP
#define RADIOMAP_GEOMETRY_HPP

#include <functional>

#include "radiomap/grid.hpp"
#include "radiomap/scenario.hpp"

namespace radiomap {

// Fraction of the straight segment between the centers of p and q that lies
// outside building cells. Exactly symmetric in (p, q); 1.0 on a clear path,
// 0.0 when the whole segment is inside buildings.
double los_fraction(const UrbanScenario& sc, GridIndex p, GridIndex q);

// True iff at least one building cell intersects the segment between p and q.
bool obstruction_exists(const UrbanScenario& sc, GridIndex p, GridIndex q);

// True iff p, q and transmitter m are collinear within `tol_grids` (perpendicular
// point-to-line distance in grid units) and p, q lie on the same ray from the
// transmitter. Symmetric in (p, q).
bool collinear_with_transmitter(const UrbanScenario& sc, GridIndex p, GridIndex q,
                                int transmitter, double tol_grids);

// Supercover traversal of the segment between the centers of p and q, in grid
// units. Invokes fn(cell, t0, t1) for every cell the segment crosses, where
// [t0, t1] is the parameter interval spent inside that cell; intervals
// partition [0, 1]. Exposed for tests and diagnostics.
void for_each_segment_span(const UrbanScenario& sc, GridIndex p, GridIndex q,
                           const std::function<void(GridIndex, double, double)>& fn);

}  // namespace radiomap

#endif  // RADIOMAP_GEOMETRY_HPP

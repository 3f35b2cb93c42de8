#pragma once

#include <utility>
#include <vector>

#include "turaev/diagram.hpp"
#include "turaev/polynomial.hpp"

namespace turaev::test {

// Circle count of a Kauffman state by union-find over arc labels: each
// smoothing channel splices two arcs into the same circle.  Independent of
// the port-walking implementation in Diagram.
int circle_count_dsu(const Diagram& d, StateMask s);

// Fraction-free Gaussian elimination (Bareiss); exact over Z.
Int determinant(std::vector<std::vector<Int>> m);

// Number of spanning trees of a multigraph on n vertices via the
// matrix-tree theorem (self-loops ignored).
Int matrix_tree_count(int n, const std::vector<std::pair<int, int>>& edges);

}  // namespace turaev::test

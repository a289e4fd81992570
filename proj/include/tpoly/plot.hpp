#pragma once

#include <string>
#include <vector>

#include "tpoly/polytope2.hpp"

namespace tpoly {

struct PlotLayer {
    std::string name;
    Polytope2 polytope;
    std::string color;  // any SVG color
};

/// Deterministic SVG: axes, integer lattice dots over the common bounding box,
/// each layer's hull with its vertices marked, and a legend.
std::string render_polytopes(const std::vector<PlotLayer>& layers);

}  // namespace tpoly

#pragma once
#include <array>
#include <vector>

#include "gslab/surface.hpp"
#include "gslab/vec.hpp"

// Point-construction helpers shared between the chart evaluators and the
// grid builders. Internal to the library.
namespace gslab::detail {

// d-1 orthonormal vectors spanning the complement of the unit vector nrm
std::vector<Vec> complement_frame(const Vec& nrm);

CurvaturePoint ellipse_point(double a, double b, double th);

// 3-d ellipsoid in the u = cos(polar) chart
CurvaturePoint ellipsoid3_point(double a, double b, double c, double u, double th);

// centered-difference data at node i of a cyclic polyline
CurvaturePoint curve_node_data(const std::vector<std::array<double, 2>>& nd, int i);

CurvaturePoint revolution_point(const std::vector<std::array<double, 2>>& prof,
                                int i, double th);

}  // namespace gslab::detail

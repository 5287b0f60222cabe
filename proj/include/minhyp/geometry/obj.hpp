#pragma once

#include <array>
#include <filesystem>
#include <iosfwd>

#include "minhyp/geometry/patch.hpp"

namespace minhyp::geometry {

/// Projects a model point to R^3: stereographic from (0,0,0,0,1/sqrt c) for
/// c > 0, Poincare ball for c < 0, and the first three coordinates for c = 0.
std::array<double, 3> project_to_r3(const SpaceFormModel& model, const std::vector<double>& x);

/// Wavefront OBJ of the patch: an n1 x n2 quad mesh on each of n3 slices of
/// constant u3, one object named after the patch.
void write_obj(std::ostream& os, const HypersurfacePatch& patch, int n1, int n2, int n3);
void write_obj(const std::filesystem::path& path, const HypersurfacePatch& patch, int n1, int n2, int n3);

}  // namespace minhyp::geometry

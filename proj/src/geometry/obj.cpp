#include "minhyp/geometry/obj.hpp"

#include <cmath>
#include <fstream>
#include <ostream>

namespace minhyp::geometry {

std::array<double, 3> project_to_r3(const SpaceFormModel& model, const std::vector<double>& x) {
  const double c = model.c();
  if (c == 0) return {x[0], x[1], x[2]};
  const double R = 1 / std::sqrt(std::fabs(c));
  if (c > 0) {
    double d = 1 - x[4] / R;
    return {x[0] / d, x[1] / d, x[2] / d};
  }
  double d = 1 + x[model.time_axis()] / R;
  return {x[0] / d, x[1] / d, x[2] / d};
}

void write_obj(std::ostream& os, const HypersurfacePatch& patch, int n1, int n2, int n3) {
  if (n1 < 2 || n2 < 2 || n3 < 1) throw GeometryError("OBJ export needs at least a 2 x 2 x 1 grid");
  auto node = [&](int axis, int i, int n) {
    if (n == 1) return 0.5 * (patch.lo[axis] + patch.hi[axis]);
    return patch.lo[axis] + i * (patch.hi[axis] - patch.lo[axis]) / (n - 1);
  };
  os.precision(9);
  os << "o " << patch.name << '\n';
  for (int k = 0; k < n3; ++k)
    for (int i = 0; i < n1; ++i)
      for (int j = 0; j < n2; ++j) {
        auto p = project_to_r3(patch.model, patch.point({node(0, i, n1), node(1, j, n2), node(2, k, n3)}));
        os << "v " << p[0] << ' ' << p[1] << ' ' << p[2] << '\n';
      }
  for (int k = 0; k < n3; ++k)
    for (int i = 0; i + 1 < n1; ++i)
      for (int j = 0; j + 1 < n2; ++j) {
        long base = long(k) * n1 * n2 + 1;
        long a = base + long(i) * n2 + j;
        long b = a + n2;
        os << "f " << a << ' ' << b << ' ' << b + 1 << ' ' << a + 1 << '\n';
      }
}

void write_obj(const std::filesystem::path& path, const HypersurfacePatch& patch, int n1, int n2, int n3) {
  std::ofstream os(path);
  if (!os) throw GeometryError("cannot write " + path.string());
  write_obj(os, patch, n1, n2, n3);
}

}  // namespace minhyp::geometry

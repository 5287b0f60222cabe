#include <fstream>
#include <iomanip>
#include <ostream>

#include "minhyp/profile/profile.hpp"

namespace minhyp::profile {

void write_profile_csv(std::ostream& os, const ProfileCurve& curve, const HeightFunction& h) {
  os << "s,gamma,dgamma,beta1,beta2,beta3\n";
  os << std::setprecision(17);
  for (std::size_t i = 0; i < curve.samples.size() && i < h.samples.size(); ++i) {
    const auto& c = curve.samples[i];
    os << c.s << ',' << h.samples[i].g << ',' << h.samples[i].dg << ',' << c.p[0] << ',' << c.p[1] << ','
       << c.p[2] << '\n';
  }
}

void write_profile_csv(const std::filesystem::path& path, const ProfileCurve& curve, const HeightFunction& h) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write " + path.string());
  write_profile_csv(os, curve, h);
}

}  // namespace minhyp::profile

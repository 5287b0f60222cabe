#include "minhyp/algebra/registry.hpp"

#include <stdexcept>

namespace minhyp::algebra {

VarRegistry::VarRegistry(std::initializer_list<std::string_view> names) {
  for (auto n : names) add(n);
}

VarId VarRegistry::add(std::string_view name) {
  if (name.empty()) throw std::invalid_argument("empty generator name");
  if (find(name)) throw std::invalid_argument("duplicate generator: " + std::string(name));
  if (names_.size() >= kMaxVars) throw std::length_error("generator registry is full");
  names_.emplace_back(name);
  return VarId{static_cast<std::uint8_t>(names_.size() - 1)};
}

std::optional<VarId> VarRegistry::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return VarId{static_cast<std::uint8_t>(i)};
  return std::nullopt;
}

VarId VarRegistry::at(std::string_view name) const {
  if (auto id = find(name)) return *id;
  throw std::out_of_range("unknown generator: " + std::string(name));
}

}  // namespace minhyp::algebra

#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace minhyp::algebra {

/// Maximum number of generators a registry may hold. Exponent vectors are
/// dense and fixed-width, so this bounds every monomial in the engine.
inline constexpr std::size_t kMaxVars = 12;

/// Index of a named generator inside a VarRegistry.
struct VarId {
  std::uint8_t index = 0;

  friend constexpr bool operator==(VarId, VarId) = default;
  friend constexpr auto operator<=>(VarId, VarId) = default;
};

/// Append-only table of generator names. The registration order is the
/// variable order used by the canonical term ordering.
class VarRegistry {
 public:
  VarRegistry() = default;
  VarRegistry(std::initializer_list<std::string_view> names);

  /// Registers a new generator; throws if the name already exists or the
  /// registry is full.
  VarId add(std::string_view name);

  std::optional<VarId> find(std::string_view name) const;
  /// Like find() but throws std::out_of_range for unknown names.
  VarId at(std::string_view name) const;

  const std::string& name(VarId id) const { return names_.at(id.index); }
  std::size_t size() const { return names_.size(); }

 private:
  std::vector<std::string> names_;
};

}  // namespace minhyp::algebra

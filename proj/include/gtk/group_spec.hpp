#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "gtk/guards.hpp"
#include "gtk/perm_group.hpp"

namespace gtk {

// Named constructors. All have deterministic generator lists.
PermGroup cyclic_group(std::uint64_t n, const Guards& guards = {});               // n >= 1
PermGroup elementary_abelian_group(std::uint64_t p, std::uint32_t r, const Guards& guards = {});
PermGroup dihedral_group(std::uint64_t n, const Guards& guards = {});             // n >= 3, order 2n
PermGroup symmetric_group(std::uint32_t n, const Guards& guards = {});
PermGroup alternating_group(std::uint32_t n, const Guards& guards = {});

bool is_prime(std::uint64_t n);

/// A parsed group description: either a named constructor ("cyclic:6"), an
/// explicit generator list, or a semidirect product of two nested specs.
class GroupSpec {
 public:
  /// Accepts a constructor string ("dihedral:4") or a JSON document.
  static GroupSpec parse(const std::string& text);
  static GroupSpec from_json(const nlohmann::json& j);

  PermGroup build(const Guards& guards = {}) const;
  const std::string& label() const { return label_; }

  GroupSpec(const GroupSpec&);
  GroupSpec& operator=(const GroupSpec&);
  GroupSpec(GroupSpec&&) noexcept;
  GroupSpec& operator=(GroupSpec&&) noexcept;
  ~GroupSpec();

 private:
  GroupSpec();

  struct Impl;
  std::unique_ptr<Impl> impl_;
  std::string label_;
};

/// Parses `text` (constructor string or JSON document) and builds the group.
PermGroup group_from_spec(const std::string& text, const Guards& guards = {});

}  // namespace gtk

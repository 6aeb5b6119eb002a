#pragma once

#include <cstdint>

namespace gtk {

// Resource guards. Configuration, not constants: every entry point that can
// blow up takes a Guards value, and callers may tighten or relax any field.
struct Guards {
  std::uint64_t max_order = 1'000'000;         // group order cap
  std::uint32_t max_degree = 10'000;           // permutation degree cap
  std::uint64_t max_subgroups = 100'000;       // subgroup lattice size cap
  std::uint64_t subgroup_enum_order = 2'000;   // |G| cap for lattice enumeration
  std::uint64_t element_enum_cap = 1'000'000;  // cap for element iteration
  std::uint32_t heisenberg_scan_max_n = 6;     // abelian-index subgroup scan cap
};

}  // namespace gtk

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "gtk/guards.hpp"
#include "gtk/perm_group.hpp"

namespace gtk {

// ---- element-level structural operations (no lattice required) ----

PermGroup center(const PermGroup& g, const Guards& guards = {});
PermGroup derived_subgroup(const PermGroup& g, const Guards& guards = {});

/// [a, g]: the normal closure in g of the commutators of generator pairs.
/// Precondition: a is normal in g.
PermGroup commutator_with_group(const PermGroup& a, const PermGroup& g, const Guards& guards = {});

/// G = gamma_1 >= gamma_2 >= ..., stopping when the series stabilizes.
std::vector<PermGroup> lower_central_series(const PermGroup& g, const Guards& guards = {});
std::vector<PermGroup> derived_series(const PermGroup& g, const Guards& guards = {});

/// Number of steps of the lower central series when it reaches the trivial
/// group; nullopt for non-nilpotent groups.
std::optional<unsigned> nilpotency_class(const PermGroup& g, const Guards& guards = {});
bool is_nilpotent(const PermGroup& g, const Guards& guards = {});
bool is_solvable(const PermGroup& g, const Guards& guards = {});
/// Steps of the derived series until it stabilizes (the classical derived
/// length for solvable groups).
unsigned derived_length(const PermGroup& g, const Guards& guards = {});

/// True when |g| is a power of the prime written to *p_out (order > 1).
bool is_p_group(const PermGroup& g, std::uint64_t* p_out = nullptr);
/// Abelian with every generator of order dividing a single prime; the
/// trivial group counts (rank 0).
bool is_elementary_abelian_group(const PermGroup& g);

std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// A Sylow p-subgroup (the trivial group when p does not divide |g|).
/// p must be prime.
PermGroup sylow_subgroup(const PermGroup& g, std::uint64_t p, const Guards& guards = {});
/// O_p(g): the intersection of all conjugates of a Sylow p-subgroup.
PermGroup p_core(const PermGroup& g, std::uint64_t p, const Guards& guards = {});
/// The largest nilpotent normal subgroup, as the product of the p-cores.
PermGroup fitting_subgroup(const PermGroup& g, const Guards& guards = {});

/// Smallest size of a generating set. p-groups go through the Frattini
/// quotient; other groups run a search over representatives of the cyclic
/// subgroups. The trivial group has min_generators 0 by convention.
unsigned min_generators(const PermGroup& g, const Guards& guards = {});

// ---- subgroup lattice ----

struct SubgroupInfo {
  PermGroup group;                      // reduced generators, BSGS built
  std::vector<std::uint32_t> elements;  // sorted indices into the parent table
  std::vector<std::uint32_t> gen_indices;
  bool is_normal = false;
  bool is_abelian = false;
  bool is_elementary_abelian = false;
  bool is_solvable = false;
  std::optional<unsigned> nilpotency_class;
  unsigned min_generators = 0;
  std::uint64_t order() const { return group.order(); }
};

/// The full subgroup lattice of a small group, enumerated by layered cyclic
/// closure: all cyclic subgroups are repeatedly joined with the known
/// subgroups until nothing new appears.
class SubgroupSet {
 public:
  static SubgroupSet enumerate(const PermGroup& parent, const Guards& guards = {});

  const PermGroup& parent() const { return parent_; }
  const Guards& guards() const { return guards_; }
  std::size_t size() const { return subgroups_.size(); }
  const std::vector<SubgroupInfo>& subgroups() const { return subgroups_; }
  const SubgroupInfo& operator[](std::size_t i) const { return subgroups_[i]; }

  const std::vector<Permutation>& elements() const { return elems_; }
  std::uint32_t element_index(const Permutation& p) const;
  std::uint32_t mul(std::uint32_t x, std::uint32_t y) const;
  std::uint32_t inverse_of(std::uint32_t x) const;
  std::uint64_t element_order(std::uint32_t x) const;
  std::uint32_t conjugate_of(std::uint32_t x, std::uint32_t by) const;

  std::size_t trivial_index() const { return trivial_index_; }
  std::size_t full_index() const { return full_index_; }

  std::optional<std::size_t> find(const std::vector<std::uint32_t>& sorted_elems) const;
  /// inner subgroup's elements all contained in outer subgroup's elements.
  bool contains_subgroup(std::size_t outer, std::size_t inner) const;
  std::vector<std::size_t> members_within(std::size_t idx) const;
  /// inner normalized by every generator of outer (inner <= outer assumed).
  bool is_normal_within(std::size_t inner, std::size_t outer) const;

  /// Subgroup closure of a set of element indices; returns sorted indices.
  std::vector<std::uint32_t> closure(std::vector<std::uint32_t> seed) const;
  std::size_t centralizer_order(std::size_t idx) const;  // |C_G(subgroup)|

  PermGroup materialize(const std::vector<std::uint32_t>& sorted_elems) const;

 private:
  SubgroupSet() = default;
  void build_column(std::uint32_t g) const;

  PermGroup parent_;
  Guards guards_;
  std::vector<Permutation> elems_;
  std::unordered_map<Permutation, std::uint32_t, PermutationHash> index_;
  std::vector<std::uint32_t> inverse_;
  mutable std::vector<std::vector<std::uint32_t>> right_mul_;  // lazy columns
  std::vector<SubgroupInfo> subgroups_;
  std::size_t trivial_index_ = 0;
  std::size_t full_index_ = 0;
};

// ---- lattice-based operations ----

/// Intersection of all maximal subgroups (the whole group when there are
/// none, i.e. for the trivial group). The result is checked to be nilpotent.
PermGroup frattini_subgroup(const SubgroupSet& lattice);
PermGroup frattini_subgroup(const PermGroup& g, const Guards& guards = {});

/// max over all subgroups of min_generators.
unsigned rank(const SubgroupSet& lattice);
unsigned rank(const PermGroup& g, const Guards& guards = {});

struct SpecialPGroupWitness {
  bool is_special = false;
  // "elementary_abelian", "frattini=center=derived", or "" when not special.
  std::string branch;
  std::uint64_t p = 0;
  std::uint64_t frattini_order = 0;
  std::uint64_t center_order = 0;
  std::uint64_t derived_order = 0;
};

/// Elementary abelian, or Phi(P) = Z(P) = P' with P' elementary abelian.
/// Throws NotAPGroup unless |P| is a prime power > 1.
SpecialPGroupWitness is_special_p_group(const PermGroup& p_group, const Guards& guards = {});

/// The minimal member of the Chermak-Delgado lattice: the intersection of
/// all subgroups maximizing |H| * |C_G(H)|. Postconditions (abelian, normal,
/// contains the center, |G:N| <= |G:A|^2 for every abelian A) are verified.
PermGroup chermak_delgado_subgroup(const SubgroupSet& lattice);
PermGroup chermak_delgado_subgroup(const PermGroup& g, const Guards& guards = {});

struct StructureReport {
  std::uint64_t order = 1;
  std::uint64_t center_order = 1;
  unsigned derived_length = 0;
  std::optional<unsigned> nilpotency_class;
  std::uint64_t fitting_order = 1;
  std::uint64_t frattini_order = 1;
  std::optional<std::uint64_t> omega1_center_order;  // p-groups only
  unsigned rank = 0;
  unsigned min_generators = 0;
  bool solvable = true;
};

StructureReport structure_report(const PermGroup& g, const Guards& guards = {});
StructureReport structure_report(const SubgroupSet& lattice);

}  // namespace gtk

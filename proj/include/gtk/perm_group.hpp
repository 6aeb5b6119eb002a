#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "gtk/guards.hpp"
#include "gtk/permutation.hpp"

namespace gtk {

/// One level of a stabilizer chain: a base point, the strong generators that
/// fix all earlier base points, and the fundamental orbit with a transversal.
struct BsgsLevel {
  std::uint32_t base = 0;
  std::vector<Permutation> gens;
  std::vector<std::uint32_t> orbit;       // discovery order; orbit[0] == base
  std::vector<Permutation> transversal;   // transversal[i] maps base to orbit[i]
  std::vector<std::int32_t> position;     // point -> index into orbit, or -1
};

/// An immutable permutation group given by generators, with a base and strong
/// generating set computed eagerly by a deterministic Schreier-Sims run
/// (base points are always the smallest moved points).
class PermGroup {
 public:
  static PermGroup trivial(std::uint32_t degree);
  static PermGroup from_generators(std::uint32_t degree, std::vector<Permutation> gens,
                                   const Guards& guards = {});
  /// Group generated by `elems`, keeping a greedily reduced generating set.
  static PermGroup from_elements(std::uint32_t degree, const std::vector<Permutation>& elems,
                                 const Guards& guards = {});

  std::uint32_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<BsgsLevel>& chain() const { return chain_; }
  std::uint64_t order() const { return order_; }
  bool is_trivial() const { return order_ == 1; }

  bool contains(const Permutation& g) const;
  bool contains_group(const PermGroup& h) const;  // every generator of h
  bool is_abelian() const;                        // pairwise commuting generators

  /// All elements in a deterministic order (outermost coordinate is the
  /// level-0 base image, ascending). Guarded by guards.element_enum_cap.
  std::vector<Permutation> elements(const Guards& guards = {}) const;
  void for_each_element(const std::function<void(const Permutation&)>& fn,
                        const Guards& guards = {}) const;

 private:
  PermGroup() = default;

  std::uint32_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<BsgsLevel> chain_;
  std::uint64_t order_ = 1;
};

/// True when every generator of `n` lies in `g`.
bool is_subgroup(const PermGroup& n, const PermGroup& g);

/// True when n <= g and conjugation by every generator of g fixes n setwise.
/// Precondition: n is a subgroup of g.
bool is_normal_in(const PermGroup& n, const PermGroup& g);

bool same_group(const PermGroup& a, const PermGroup& b);

/// Split extension N x| H. The action maps the i-th generator of H to an
/// automorphism of N, given by the images of N's generators (as elements of
/// N). Each map is verified to extend to an automorphism, and the product is
/// realized faithfully on the pair set N x H; its generator list is the
/// embedded N-generators followed by the embedded H-generators.
PermGroup semidirect_product(const PermGroup& n, const PermGroup& h,
                             const std::vector<std::vector<Permutation>>& action,
                             const Guards& guards = {});

/// Direct product on the pair set (trivial action).
PermGroup direct_product(const PermGroup& n, const PermGroup& h, const Guards& guards = {});

/// Faithful action of G/N on the cosets of N. Throws NotSubgroup / NotNormal.
PermGroup quotient_group(const PermGroup& g, const PermGroup& n, const Guards& guards = {});

}  // namespace gtk

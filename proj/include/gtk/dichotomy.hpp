#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gtk/fp_matrix.hpp"
#include "gtk/guards.hpp"
#include "gtk/structure.hpp"

namespace gtk {

/// A section H/N of affine cyclic type: H/N = E x| C with E the (nontrivial)
/// elementary abelian normal Sylow p-subgroup, C cyclic of q-power order
/// acting faithfully, p != q.
struct AffineCyclicSection {
  std::size_t host_index = 0;    // H, as a lattice index
  std::size_t kernel_index = 0;  // N, as a lattice index
  std::uint64_t host_order = 0;
  std::uint64_t kernel_order = 0;
  std::uint64_t p = 0, q = 0;
  std::uint64_t e_order = 0;  // p^a
  std::uint64_t c_order = 0;  // q^t
  bool faithful = true;
};

/// All sections H/N of affine cyclic type with |C| >= min_c (and |C| >= 2),
/// one entry per (H, N) pair. An empty result is a certified negative: the
/// scan is exhaustive over the lattice.
std::vector<AffineCyclicSection> affine_cyclic_sections(const SubgroupSet& lattice,
                                                        std::uint64_t min_c);
std::vector<AffineCyclicSection> affine_cyclic_sections(const PermGroup& g, std::uint64_t min_c,
                                                        const Guards& guards = {});

/// A subgroup S = P x| C with P a special p-group and C cyclic of q-power
/// order, q != p, whose image in Aut(P) has order aut_image_order.
struct SpecialByCyclicWitness {
  std::size_t subgroup_index = 0;
  std::uint64_t subgroup_order = 0;
  std::uint64_t p_group_order = 0;
  std::uint64_t p = 0, q = 0;
  std::uint64_t cyclic_order = 0;     // |C|
  std::uint64_t aut_image_order = 0;  // |C : C_C(P)|
  std::string special_branch;         // which special-p-group branch P is
};

/// Best witness (largest automorphism image, deterministic tie-break) with
/// aut_image_order >= max(T, 2); nullopt iff the exhaustive scan finds none.
/// The image order is computed as the index of the centralizer of P in C.
std::optional<SpecialByCyclicWitness> special_by_cyclic_witness(const SubgroupSet& lattice,
                                                                std::uint64_t T);
std::optional<SpecialByCyclicWitness> special_by_cyclic_witness(const PermGroup& g, std::uint64_t T,
                                                                const Guards& guards = {});

/// |G : F(G)|, cross-checkable against a brute-force minimum over all
/// nilpotent normal subgroups.
std::uint64_t min_index_nilpotent_normal(const PermGroup& g, const Guards& guards = {});

struct DichotomyReport {
  std::string group_label;
  std::uint64_t T = 0;
  std::uint64_t order = 0;
  unsigned rank = 0;
  std::uint64_t nilpotent_index = 0;       // |G : F(G)|
  std::uint64_t max_affine_section_c = 1;  // max |C| over affine cyclic sections
  std::optional<SpecialByCyclicWitness> best_special_witness;
  // Branch (a): no affine cyclic section with |C| > T, so the nilpotent
  // normal index is bounded. Branch (b): a verified witness with image >= T.
  bool branch_a = false;
  bool branch_b = false;
  std::optional<bool> witness_p_bound_ok;  // |P| <= p^(2*rank), when a witness exists
  std::string branch_satisfied() const {
    if (branch_a && branch_b) return "both";
    return branch_a ? "a" : "b";
  }
};

/// Evaluates both branches exhaustively. Consistency assertions (throwing
/// InternalError on failure): at least one branch holds, the section bound
/// max |C| <= |G : F(G)| holds, and every returned witness re-verifies.
DichotomyReport verify_reduction_theorem(const SubgroupSet& lattice, std::uint64_t T,
                                         const std::string& label = {});
DichotomyReport verify_reduction_theorem(const PermGroup& g, std::uint64_t T,
                                         const Guards& guards = {}, const std::string& label = {});

struct ElementaryByCyclicWitness {
  std::size_t subgroup_index = 0;
  std::uint64_t subgroup_order = 0;
  std::uint64_t e_order = 0;
  std::uint64_t c_order = 0;
  std::uint64_t p = 0, q = 0;
  std::uint64_t aut_image_order = 0;
};

struct AbelianByCyclicWitness {
  std::size_t subgroup_index = 0;
  std::uint64_t subgroup_order = 0;
  std::uint64_t p = 0;
  std::uint64_t min_abelian_normal_index = 0;  // > T for a branch-(c) witness
};

struct TrichotomyReport {
  std::string group_label;
  std::uint64_t T = 0;
  std::uint64_t order = 0;
  // (a) an abelian normal subgroup of index <= T exists.
  bool branch_a = false;
  std::uint64_t min_abelian_normal_index = 0;
  // (b) a subgroup E x| C with elementary abelian E, cyclic C of q-power
  // order coprime to |E|, and image of C in Aut(E) of order >= max(T, 2).
  bool branch_b = false;
  std::optional<ElementaryByCyclicWitness> witness_b;
  // (c) an abelian-by-cyclic p-subgroup with no abelian normal subgroup of
  // index <= T.
  bool branch_c = false;
  std::optional<AbelianByCyclicWitness> witness_c;
  bool any_branch() const { return branch_a || branch_b || branch_c; }
};

/// Evaluates all three branches exhaustively. For T = 1 at least one branch
/// is guaranteed and asserted (InternalError otherwise); for larger T the
/// report simply records which branches hold.
TrichotomyReport verify_jordan_trichotomy(const SubgroupSet& lattice, std::uint64_t T,
                                          const std::string& label = {});
TrichotomyReport verify_jordan_trichotomy(const PermGroup& g, std::uint64_t T,
                                          const Guards& guards = {}, const std::string& label = {});

// ---- coprime module decomposition over F_p ----

/// An F_p vector space of row vectors with a linear action of a finite group
/// given by generator matrices. Construction closes the matrix group and
/// verifies invertibility and, when given, the expected group order.
class FpHModule {
 public:
  FpHModule(std::uint64_t p, std::vector<FpMatrix> generators,
            std::optional<std::uint64_t> expected_order = std::nullopt,
            std::uint64_t closure_cap = 65536);

  std::uint64_t p() const { return p_; }
  unsigned dimension() const { return dim_; }
  std::uint64_t group_order() const { return elements_.size(); }
  const std::vector<FpMatrix>& generators() const { return generators_; }
  const std::vector<FpMatrix>& group_elements() const { return elements_; }

 private:
  std::uint64_t p_;
  unsigned dim_;
  std::vector<FpMatrix> generators_;
  std::vector<FpMatrix> elements_;
};

struct MaschkeDecomposition {
  FpMatrix fixed_basis;       // rows span A', the common fixed space
  FpMatrix complement_basis;  // rows span A'', the invariant complement
  FpMatrix projector;         // averaging projector e; A'' = image of (I - e)
};

/// Splits A = A' + A'' with A'' invariant and fixed-point free, via the
/// averaging projector. Throws CoprimalityViolation when p divides |H|; all
/// postconditions are verified internally.
MaschkeDecomposition maschke_decomposition(const FpHModule& module);

}  // namespace gtk

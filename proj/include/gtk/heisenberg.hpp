#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gtk/guards.hpp"
#include "gtk/perm_group.hpp"

namespace gtk {

/// Element (a, b, c) of the Heisenberg-type group of modulus n, with
/// (a,b,c) * (a',b',c') = (a+a', b+b', c+c'+a*b') on residues mod n.
struct HeisenbergElement {
  std::int64_t a = 0, b = 0, c = 0;
  bool operator==(const HeisenbergElement&) const = default;
  bool is_identity() const { return a == 0 && b == 0 && c == 0; }
  std::string str() const;
};

/// The group (Z_n x Z_n) x| Z_n of order n^3, exposed both through the
/// element-level twisted multiplication and as a faithful permutation group
/// (right regular representation on the n^3 triples).
class HeisenbergGroup {
 public:
  explicit HeisenbergGroup(std::uint64_t n, const Guards& guards = {});

  std::uint64_t n() const { return n_; }
  std::uint64_t order() const { return n_ * n_ * n_; }

  HeisenbergElement reduce(std::int64_t a, std::int64_t b, std::int64_t c) const;
  HeisenbergElement mul(const HeisenbergElement& x, const HeisenbergElement& y) const;
  HeisenbergElement inverse(const HeisenbergElement& x) const;

  std::uint32_t index_of(const HeisenbergElement& e) const;
  HeisenbergElement element_at(std::uint32_t index) const;

  /// All n^3 elements in index order.
  std::vector<HeisenbergElement> elements() const;

  const PermGroup& perm_group() const { return perm_; }
  /// Right multiplication by e on the triple set.
  Permutation perm_of(const HeisenbergElement& e) const;
  /// Inverse of perm_of: the triple a permutation of the regular action
  /// corresponds to.
  HeisenbergElement element_of_perm(const Permutation& p) const;

 private:
  std::uint64_t n_;
  PermGroup perm_;
};

struct AbelianIndexResult {
  std::uint64_t n = 0;
  std::uint64_t min_index = 0;                    // min |G_n : A| over abelian A
  std::uint64_t witness_order = 0;                // |A| attaining it
  std::vector<HeisenbergElement> witness_gens;    // generators of a witness A
  std::uint64_t abelian_subgroup_count = 0;
};

/// Exhaustive subgroup scan of G_n for the smallest index of an abelian
/// subgroup. Guarded by guards.heisenberg_scan_max_n; throws InternalError
/// if the scan ever contradicted the lower bound min_index >= n.
AbelianIndexResult min_abelian_index(std::uint64_t n, const Guards& guards = {});

}  // namespace gtk

#include "gtk/heisenberg.hpp"

#include <sstream>

#include "gtk/errors.hpp"
#include "gtk/structure.hpp"

namespace gtk {

std::string HeisenbergElement::str() const {
  std::ostringstream out;
  out << '(' << a << ',' << b << ',' << c << ')';
  return out.str();
}

HeisenbergGroup::HeisenbergGroup(std::uint64_t n, const Guards& guards) : n_(n) {
  if (n < 2) throw RangeError("heisenberg:n requires n >= 2");
  const std::uint64_t ord = n * n * n;
  if (ord > guards.max_order) throw GuardExceeded("group order guard exceeded");
  if (ord > guards.max_degree) throw GuardExceeded("degree guard exceeded");
  const auto deg = static_cast<std::uint32_t>(ord);

  // Right multiplication by the generators (1,0,0) and (0,1,0); their
  // commutator is (0,0,1), so the two generate everything.
  auto right_mul_perm = [&](const HeisenbergElement& g) {
    std::vector<std::uint32_t> images(deg);
    for (std::uint32_t i = 0; i < deg; ++i) images[i] = index_of(mul(element_at(i), g));
    return Permutation::from_images(std::move(images));
  };
  std::vector<Permutation> gens{right_mul_perm(reduce(1, 0, 0)), right_mul_perm(reduce(0, 1, 0))};
  perm_ = PermGroup::from_generators(deg, std::move(gens), guards);
  if (perm_.order() != ord) throw InternalError("regular representation order mismatch");
}

HeisenbergElement HeisenbergGroup::reduce(std::int64_t a, std::int64_t b, std::int64_t c) const {
  const auto m = static_cast<std::int64_t>(n_);
  auto norm = [m](std::int64_t v) { return ((v % m) + m) % m; };
  return {norm(a), norm(b), norm(c)};
}

HeisenbergElement HeisenbergGroup::mul(const HeisenbergElement& x, const HeisenbergElement& y) const {
  return reduce(x.a + y.a, x.b + y.b, x.c + y.c + x.a * y.b);
}

HeisenbergElement HeisenbergGroup::inverse(const HeisenbergElement& x) const {
  return reduce(-x.a, -x.b, -x.c + x.a * x.b);
}

std::uint32_t HeisenbergGroup::index_of(const HeisenbergElement& e) const {
  return static_cast<std::uint32_t>((static_cast<std::uint64_t>(e.a) * n_ +
                                     static_cast<std::uint64_t>(e.b)) *
                                        n_ +
                                    static_cast<std::uint64_t>(e.c));
}

HeisenbergElement HeisenbergGroup::element_at(std::uint32_t index) const {
  const std::uint64_t c = index % n_;
  const std::uint64_t b = (index / n_) % n_;
  const std::uint64_t a = index / (n_ * n_);
  return {static_cast<std::int64_t>(a), static_cast<std::int64_t>(b), static_cast<std::int64_t>(c)};
}

std::vector<HeisenbergElement> HeisenbergGroup::elements() const {
  std::vector<HeisenbergElement> out;
  out.reserve(static_cast<std::size_t>(order()));
  for (std::uint32_t i = 0; i < order(); ++i) out.push_back(element_at(i));
  return out;
}

Permutation HeisenbergGroup::perm_of(const HeisenbergElement& e) const {
  const auto deg = static_cast<std::uint32_t>(order());
  std::vector<std::uint32_t> images(deg);
  for (std::uint32_t i = 0; i < deg; ++i) images[i] = index_of(mul(element_at(i), e));
  return Permutation::from_images(std::move(images));
}

HeisenbergElement HeisenbergGroup::element_of_perm(const Permutation& p) const {
  // The image of the identity's index under right multiplication is the
  // multiplier itself.
  return element_at(p[index_of({0, 0, 0})]);
}

AbelianIndexResult min_abelian_index(std::uint64_t n, const Guards& guards) {
  if (n < 2 || n > guards.heisenberg_scan_max_n)
    throw GuardExceeded("heisenberg abelian-index scan guard exceeded");
  HeisenbergGroup g(n, guards);
  Guards lattice_guards = guards;
  if (lattice_guards.subgroup_enum_order < g.order()) lattice_guards.subgroup_enum_order = g.order();
  SubgroupSet lattice = SubgroupSet::enumerate(g.perm_group(), lattice_guards);

  AbelianIndexResult result;
  result.n = n;
  result.min_index = g.order();
  for (const auto& sub : lattice.subgroups()) {
    if (!sub.is_abelian) continue;
    ++result.abelian_subgroup_count;
    const std::uint64_t index = g.order() / sub.group.order();
    if (index < result.min_index) {
      result.min_index = index;
      result.witness_order = sub.group.order();
      result.witness_gens.clear();
      for (const auto& gen : sub.group.generators())
        result.witness_gens.push_back(g.element_of_perm(gen));
    }
  }
  if (result.min_index < n)
    throw InternalError("abelian subgroup of index below n found; scan is inconsistent");
  return result;
}

}  // namespace gtk

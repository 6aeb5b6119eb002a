#include "gtk/perm_group.hpp"

#include <algorithm>
#include <unordered_map>
#include <utility>

#include "gtk/errors.hpp"

namespace gtk {

namespace {

class ChainBuilder {
 public:
  ChainBuilder(std::uint32_t degree, const Guards& guards) : degree_(degree), guards_(guards) {}

  void build(const std::vector<Permutation>& input) {
    for (const auto& g : input) {
      if (g.degree() != degree_) throw FormatError("generator degree mismatch");
      if (!g.is_identity()) add_strong_generator(g);
    }
    if (levels_.empty()) return;
    for (std::size_t i = 0; i < levels_.size(); ++i) update_orbit(i);

    // Deterministic Schreier-Sims: verify levels from the deepest up; a
    // non-trivial sift residue becomes a new strong generator and processing
    // restarts at the level where it first acts.
    std::size_t i = levels_.size() - 1;
    while (true) {
      update_orbit(i);
      bool added = false;
      auto& level = levels_[i];
      for (std::size_t oi = 0; oi < level.orbit.size() && !added; ++oi) {
        for (const auto& s : level.gens) {
          Permutation schreier = level.transversal[oi] * s;
          const std::uint32_t y = schreier[level.base];
          schreier = schreier * level.transversal[static_cast<std::size_t>(level.position[y])].inverse();
          if (schreier.is_identity()) continue;
          auto [residue, stuck] = sift(std::move(schreier), i + 1);
          (void)stuck;
          if (residue.is_identity()) continue;
          const std::size_t d = add_strong_generator(residue);
          i = d;
          added = true;
          break;
        }
      }
      if (!added) {
        if (i == 0) break;
        --i;
      }
    }
  }

  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t from) const {
    for (std::size_t i = from; i < levels_.size(); ++i) {
      if (g.is_identity()) return {std::move(g), levels_.size()};
      const std::uint32_t x = g[levels_[i].base];
      const std::int32_t pos = levels_[i].position[x];
      if (pos < 0) return {std::move(g), i};
      g = g * levels_[i].transversal[static_cast<std::size_t>(pos)].inverse();
    }
    return {std::move(g), levels_.size()};
  }

  std::vector<BsgsLevel> take_levels() { return std::move(levels_); }

  std::uint64_t order() const {
    std::uint64_t n = 1;
    for (const auto& level : levels_) n *= level.orbit.size();
    return n;
  }

 private:
  // Registers h as a strong generator at every level whose earlier base
  // points it fixes; appends a new level if h fixes all current bases.
  // Returns the deepest level at which h is active.
  std::size_t add_strong_generator(const Permutation& h) {
    std::size_t d = 0;
    while (d < levels_.size() && h[levels_[d].base] == levels_[d].base) ++d;
    if (d == levels_.size()) {
      BsgsLevel level;
      level.base = h.smallest_moved_point();
      levels_.push_back(std::move(level));
    }
    for (std::size_t j = 0; j <= d; ++j) levels_[j].gens.push_back(h);
    return d;
  }

  void update_orbit(std::size_t i) {
    auto& level = levels_[i];
    level.orbit.clear();
    level.transversal.clear();
    level.position.assign(degree_, -1);
    level.orbit.push_back(level.base);
    level.transversal.emplace_back(degree_);
    level.position[level.base] = 0;
    for (std::size_t qi = 0; qi < level.orbit.size(); ++qi) {
      for (const auto& s : level.gens) {
        const std::uint32_t y = s[level.orbit[qi]];
        if (level.position[y] < 0) {
          level.position[y] = static_cast<std::int32_t>(level.orbit.size());
          level.orbit.push_back(y);
          level.transversal.push_back(level.transversal[qi] * s);
        }
      }
    }
    // Orbits only grow, so the partial order product is a lower bound for
    // the final order; abort early once it exceeds the guard.
    if (order() > guards_.max_order) throw GuardExceeded("group order guard exceeded");
  }

  std::uint32_t degree_;
  Guards guards_;
  std::vector<BsgsLevel> levels_;
};

}  // namespace

PermGroup PermGroup::trivial(std::uint32_t degree) {
  PermGroup g;
  g.degree_ = degree;
  g.order_ = 1;
  return g;
}

PermGroup PermGroup::from_generators(std::uint32_t degree, std::vector<Permutation> gens,
                                     const Guards& guards) {
  if (degree > guards.max_degree) throw GuardExceeded("degree guard exceeded");
  ChainBuilder builder(degree, guards);
  builder.build(gens);
  PermGroup g;
  g.degree_ = degree;
  g.generators_ = std::move(gens);
  g.chain_ = builder.take_levels();
  g.order_ = 1;
  for (const auto& level : g.chain_) g.order_ *= level.orbit.size();
  return g;
}

PermGroup PermGroup::from_elements(std::uint32_t degree, const std::vector<Permutation>& elems,
                                   const Guards& guards) {
  std::vector<Permutation> gens;
  PermGroup current = trivial(degree);
  for (const auto& e : elems) {
    if (!current.contains(e)) {
      gens.push_back(e);
      current = from_generators(degree, gens, guards);
    }
  }
  return current;
}

bool PermGroup::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  Permutation residue = g;
  for (const auto& level : chain_) {
    if (residue.is_identity()) return true;
    const std::uint32_t x = residue[level.base];
    const std::int32_t pos = level.position[x];
    if (pos < 0) return false;
    residue = residue * level.transversal[static_cast<std::size_t>(pos)].inverse();
  }
  return residue.is_identity();
}

bool PermGroup::contains_group(const PermGroup& h) const {
  for (const auto& g : h.generators())
    if (!contains(g)) return false;
  return true;
}

bool PermGroup::is_abelian() const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    for (std::size_t j = i + 1; j < generators_.size(); ++j)
      if (!commute(generators_[i], generators_[j])) return false;
  return true;
}

void PermGroup::for_each_element(const std::function<void(const Permutation&)>& fn,
                                 const Guards& guards) const {
  if (order_ > guards.element_enum_cap) throw GuardExceeded("element enumeration guard exceeded");
  const std::size_t k = chain_.size();
  if (k == 0) {
    fn(Permutation(degree_));
    return;
  }
  // Per level, transversal indices sorted by orbit point, so iteration is
  // lexicographic in the base images.
  std::vector<std::vector<std::size_t>> sorted(k);
  for (std::size_t i = 0; i < k; ++i) {
    sorted[i].resize(chain_[i].orbit.size());
    for (std::size_t j = 0; j < sorted[i].size(); ++j) sorted[i][j] = j;
    std::sort(sorted[i].begin(), sorted[i].end(), [&](std::size_t a, std::size_t b) {
      return chain_[i].orbit[a] < chain_[i].orbit[b];
    });
  }
  // DFS over the chain; partial[j] = u_j * u_{j-1} * ... * u_0.
  std::vector<Permutation> partial(k);
  std::vector<std::size_t> idx(k, 0);
  std::size_t depth = 0;
  while (true) {
    if (idx[depth] < sorted[depth].size()) {
      const auto& u = chain_[depth].transversal[sorted[depth][idx[depth]]];
      partial[depth] = (depth == 0) ? u : u * partial[depth - 1];
      if (depth + 1 == k) {
        fn(partial[depth]);
        ++idx[depth];
      } else {
        ++depth;
        idx[depth] = 0;
      }
    } else {
      if (depth == 0) break;
      --depth;
      ++idx[depth];
    }
  }
}

std::vector<Permutation> PermGroup::elements(const Guards& guards) const {
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(order_));
  for_each_element([&](const Permutation& p) { out.push_back(p); }, guards);
  return out;
}

bool is_subgroup(const PermGroup& n, const PermGroup& g) {
  return n.degree() == g.degree() && g.contains_group(n);
}

bool is_normal_in(const PermGroup& n, const PermGroup& g) {
  // Conjugates of generators by generators suffice: conjugation by g maps a
  // generating set of n into n, hence n^g = n by finiteness.
  for (const auto& gg : g.generators())
    for (const auto& ng : n.generators())
      if (!n.contains(conjugate(ng, gg))) return false;
  return true;
}

bool same_group(const PermGroup& a, const PermGroup& b) {
  return a.order() == b.order() && a.contains_group(b) && b.contains_group(a);
}

namespace {

// Full value table of the automorphism of N determined by generator images,
// verified multiplicative on every (element, generator) pair and bijective.
std::vector<std::uint32_t> automorphism_table(
    const PermGroup& n, const std::vector<Permutation>& n_elems,
    const std::unordered_map<Permutation, std::uint32_t, PermutationHash>& index_of,
    const std::vector<Permutation>& gen_images) {
  const auto size = static_cast<std::uint32_t>(n_elems.size());
  if (gen_images.size() != n.generators().size())
    throw NotAnAutomorphism("wrong number of generator images");
  std::vector<std::uint32_t> image_idx;
  for (const auto& img : gen_images) {
    if (!n.contains(img)) throw NotAnAutomorphism("generator image does not lie in N");
    image_idx.push_back(index_of.at(img));
  }

  constexpr std::uint32_t kUnset = 0xffffffffu;
  std::vector<std::uint32_t> table(size, kUnset);
  const std::uint32_t id_idx = index_of.at(Permutation(n.degree()));
  table[id_idx] = id_idx;
  std::vector<std::uint32_t> queue{id_idx};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const std::uint32_t gi = queue[qi];
    for (std::size_t j = 0; j < gen_images.size(); ++j) {
      const Permutation prod = n_elems[gi] * n.generators()[j];
      const std::uint32_t hi = index_of.at(prod);
      const Permutation img = n_elems[table[gi]] * gen_images[j];
      const std::uint32_t img_hi = index_of.at(img);
      if (table[hi] == kUnset) {
        table[hi] = img_hi;
        queue.push_back(hi);
      } else if (table[hi] != img_hi) {
        throw NotAnAutomorphism("generator images do not extend to a homomorphism");
      }
    }
  }
  std::vector<bool> hit(size, false);
  for (std::uint32_t v : table) {
    if (v == kUnset || hit[v]) throw NotAnAutomorphism("generator images do not extend to a bijection");
    hit[v] = true;
  }
  return table;
}

}  // namespace

PermGroup semidirect_product(const PermGroup& n, const PermGroup& h,
                             const std::vector<std::vector<Permutation>>& action,
                             const Guards& guards) {
  if (action.size() != h.generators().size())
    throw NotAnAutomorphism("one automorphism per complement generator required");
  const std::uint64_t target = n.order() * h.order();
  if (target > guards.max_order) throw GuardExceeded("semidirect product order guard exceeded");
  if (target > guards.max_degree) throw GuardExceeded("semidirect product degree guard exceeded");

  const auto n_elems = n.elements(guards);
  const auto h_elems = h.elements(guards);
  std::unordered_map<Permutation, std::uint32_t, PermutationHash> n_index, h_index;
  for (std::uint32_t i = 0; i < n_elems.size(); ++i) n_index.emplace(n_elems[i], i);
  for (std::uint32_t i = 0; i < h_elems.size(); ++i) h_index.emplace(h_elems[i], i);

  std::vector<std::vector<std::uint32_t>> tables;
  tables.reserve(action.size());
  for (const auto& images : action)
    tables.push_back(automorphism_table(n, n_elems, n_index, images));

  const auto nn = static_cast<std::uint32_t>(n_elems.size());
  const auto hh = static_cast<std::uint32_t>(h_elems.size());
  const std::uint32_t deg = nn * hh;
  auto point = [hh](std::uint32_t ni, std::uint32_t hi) { return ni * hh + hi; };

  std::vector<Permutation> gens;
  // Left multiplication by (x, 1): (m, k) -> (x*m, k).
  for (const auto& x : n.generators()) {
    std::vector<std::uint32_t> images(deg);
    std::vector<std::uint32_t> left(nn);
    for (std::uint32_t ni = 0; ni < nn; ++ni) left[ni] = n_index.at(x * n_elems[ni]);
    for (std::uint32_t ni = 0; ni < nn; ++ni)
      for (std::uint32_t hi = 0; hi < hh; ++hi) images[point(ni, hi)] = point(left[ni], hi);
    gens.push_back(Permutation::from_images(std::move(images)));
  }
  // Left multiplication by (1, y): (m, k) -> (alpha_y(m), y*k).
  for (std::size_t j = 0; j < h.generators().size(); ++j) {
    std::vector<std::uint32_t> images(deg);
    std::vector<std::uint32_t> left(hh);
    for (std::uint32_t hi = 0; hi < hh; ++hi) left[hi] = h_index.at(h.generators()[j] * h_elems[hi]);
    for (std::uint32_t ni = 0; ni < nn; ++ni)
      for (std::uint32_t hi = 0; hi < hh; ++hi)
        images[point(ni, hi)] = point(tables[j][ni], left[hi]);
    gens.push_back(Permutation::from_images(std::move(images)));
  }

  PermGroup product = PermGroup::from_generators(deg, std::move(gens), guards);
  if (product.order() != target)
    throw NotAnAutomorphism("action does not respect the complement's relations");
  return product;
}

PermGroup direct_product(const PermGroup& n, const PermGroup& h, const Guards& guards) {
  std::vector<std::vector<Permutation>> trivial_action(
      h.generators().size(), n.generators());
  return semidirect_product(n, h, trivial_action, guards);
}

PermGroup quotient_group(const PermGroup& g, const PermGroup& n, const Guards& guards) {
  if (n.degree() != g.degree() || !g.contains_group(n))
    throw NotSubgroup("kernel is not a subgroup of the group");
  for (const auto& gg : g.generators())
    for (const auto& ng : n.generators())
      if (!n.contains(conjugate(ng, gg))) throw NotNormal("kernel is not normal");

  const auto n_elems = n.elements(guards);
  const std::uint64_t cosets64 = g.order() / n.order();
  if (cosets64 > guards.max_degree) throw GuardExceeded("quotient degree guard exceeded");
  const auto num_cosets = static_cast<std::uint32_t>(cosets64);

  // Enumerate cosets Ng by orbiting the identity coset under right
  // multiplication by generators; every element is tagged with its coset id.
  std::unordered_map<Permutation, std::uint32_t, PermutationHash> coset_of;
  std::vector<Permutation> reps;
  auto add_coset = [&](const Permutation& rep) {
    const auto id = static_cast<std::uint32_t>(reps.size());
    reps.push_back(rep);
    for (const auto& ne : n_elems) coset_of.emplace(ne * rep, id);
    return id;
  };
  add_coset(Permutation(g.degree()));
  for (std::size_t qi = 0; qi < reps.size(); ++qi) {
    const Permutation rep = reps[qi];
    for (const auto& gg : g.generators()) {
      const Permutation moved = rep * gg;
      if (!coset_of.contains(moved)) add_coset(moved);
    }
  }
  if (reps.size() != num_cosets) throw InternalError("coset enumeration mismatch");

  std::vector<Permutation> action_gens;
  for (const auto& gg : g.generators()) {
    std::vector<std::uint32_t> images(num_cosets);
    for (std::uint32_t c = 0; c < num_cosets; ++c) images[c] = coset_of.at(reps[c] * gg);
    action_gens.push_back(Permutation::from_images(std::move(images)));
  }
  PermGroup q = PermGroup::from_generators(num_cosets, std::move(action_gens), guards);
  if (q.order() != cosets64) throw InternalError("quotient order mismatch");
  return q;
}

}  // namespace gtk

#include "gtk/structure.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "gtk/errors.hpp"
#include "gtk/group_spec.hpp"

namespace gtk {

namespace {

Permutation perm_power(const Permutation& p, std::uint64_t k) {
  Permutation result(p.degree());
  Permutation base = p;
  while (k > 0) {
    if (k & 1) result = result * base;
    base = base * base;
    k >>= 1;
  }
  return result;
}

bool is_power_of(std::uint64_t n, std::uint64_t p) {
  if (n == 0) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

std::uint64_t int_log(std::uint64_t n, std::uint64_t p) {
  std::uint64_t k = 0;
  while (n > 1) {
    n /= p;
    ++k;
  }
  return k;
}

// Smallest normal subgroup of g containing the seeds.
PermGroup normal_closure(const PermGroup& g, const std::vector<Permutation>& seeds,
                         const Guards& guards) {
  std::vector<Permutation> gens;
  PermGroup current = PermGroup::trivial(g.degree());
  auto add = [&](const Permutation& c) {
    if (current.contains(c)) return false;
    gens.push_back(c);
    current = PermGroup::from_generators(g.degree(), gens, guards);
    return true;
  };
  for (const auto& s : seeds) add(s);
  bool changed = true;
  while (changed) {
    changed = false;
    const std::vector<Permutation> snapshot = gens;
    for (const auto& x : snapshot)
      for (const auto& gg : g.generators())
        if (add(conjugate(x, gg))) changed = true;
  }
  return current;
}

}  // namespace

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

PermGroup center(const PermGroup& g, const Guards& guards) {
  std::vector<Permutation> central;
  g.for_each_element(
      [&](const Permutation& e) {
        for (const auto& gen : g.generators())
          if (!commute(e, gen)) return;
        central.push_back(e);
      },
      guards);
  return PermGroup::from_elements(g.degree(), central, guards);
}

PermGroup derived_subgroup(const PermGroup& g, const Guards& guards) {
  std::vector<Permutation> seeds;
  for (const auto& a : g.generators())
    for (const auto& b : g.generators()) {
      Permutation c = commutator(a, b);
      if (!c.is_identity()) seeds.push_back(std::move(c));
    }
  return normal_closure(g, seeds, guards);
}

PermGroup commutator_with_group(const PermGroup& a, const PermGroup& g, const Guards& guards) {
  std::vector<Permutation> seeds;
  for (const auto& x : a.generators())
    for (const auto& y : g.generators()) {
      Permutation c = commutator(x, y);
      if (!c.is_identity()) seeds.push_back(std::move(c));
    }
  return normal_closure(g, seeds, guards);
}

std::vector<PermGroup> lower_central_series(const PermGroup& g, const Guards& guards) {
  std::vector<PermGroup> series{g};
  while (true) {
    PermGroup next = commutator_with_group(series.back(), g, guards);
    if (next.order() == series.back().order()) break;
    series.push_back(std::move(next));
    if (series.back().is_trivial()) break;
  }
  return series;
}

std::vector<PermGroup> derived_series(const PermGroup& g, const Guards& guards) {
  std::vector<PermGroup> series{g};
  while (true) {
    PermGroup next = derived_subgroup(series.back(), guards);
    if (next.order() == series.back().order()) break;
    series.push_back(std::move(next));
    if (series.back().is_trivial()) break;
  }
  return series;
}

std::optional<unsigned> nilpotency_class(const PermGroup& g, const Guards& guards) {
  auto series = lower_central_series(g, guards);
  if (!series.back().is_trivial()) return std::nullopt;
  return static_cast<unsigned>(series.size() - 1);
}

bool is_nilpotent(const PermGroup& g, const Guards& guards) {
  return nilpotency_class(g, guards).has_value();
}

bool is_solvable(const PermGroup& g, const Guards& guards) {
  return derived_series(g, guards).back().is_trivial();
}

unsigned derived_length(const PermGroup& g, const Guards& guards) {
  return static_cast<unsigned>(derived_series(g, guards).size() - 1);
}

bool is_p_group(const PermGroup& g, std::uint64_t* p_out) {
  if (g.order() <= 1) return false;
  auto primes = prime_divisors(g.order());
  if (primes.size() != 1) return false;
  if (p_out) *p_out = primes[0];
  return true;
}

bool is_elementary_abelian_group(const PermGroup& g) {
  if (g.is_trivial()) return true;
  if (!g.is_abelian()) return false;
  std::uint64_t p = 0;
  if (!is_p_group(g, &p)) return false;
  for (const auto& gen : g.generators())
    if (!gen.is_identity() && gen.order() != p) return false;
  return true;
}

PermGroup sylow_subgroup(const PermGroup& g, std::uint64_t p, const Guards& guards) {
  if (!is_prime(p)) throw RangeError("sylow_subgroup needs a prime");
  std::uint64_t target = 1;
  for (std::uint64_t o = g.order(); o % p == 0; o /= p) target *= p;
  if (target == 1) return PermGroup::trivial(g.degree());

  const auto elems = g.elements(guards);
  std::vector<Permutation> gens;
  PermGroup s = PermGroup::trivial(g.degree());
  while (s.order() < target) {
    bool grew = false;
    // A p-element normalizing s but outside it always exists while s is not
    // yet a full Sylow subgroup (s is proper in the normalizer's p-part).
    for (const auto& e : elems) {
      if (!is_power_of(e.order(), p)) continue;
      if (s.contains(e)) continue;
      bool normalizes = true;
      for (const auto& x : gens) {
        if (!s.contains(conjugate(x, e))) {
          normalizes = false;
          break;
        }
      }
      if (!normalizes) continue;
      gens.push_back(e);
      s = PermGroup::from_generators(g.degree(), gens, guards);
      grew = true;
      break;
    }
    if (!grew) throw InternalError("sylow subgroup sweep stalled");
  }
  return s;
}

PermGroup p_core(const PermGroup& g, std::uint64_t p, const Guards& guards) {
  PermGroup sylow = sylow_subgroup(g, p, guards);
  if (sylow.is_trivial()) return sylow;
  auto base = sylow.elements(guards);
  std::sort(base.begin(), base.end());

  std::set<std::vector<Permutation>> conjugates{base};
  std::vector<std::vector<Permutation>> queue{base};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    for (const auto& gg : g.generators()) {
      std::vector<Permutation> moved;
      moved.reserve(queue[qi].size());
      for (const auto& e : queue[qi]) moved.push_back(conjugate(e, gg));
      std::sort(moved.begin(), moved.end());
      if (conjugates.insert(moved).second) queue.push_back(std::move(moved));
    }
  }

  std::vector<Permutation> inter = base;
  for (const auto& conj : conjugates) {
    std::vector<Permutation> next;
    std::set_intersection(inter.begin(), inter.end(), conj.begin(), conj.end(),
                          std::back_inserter(next));
    inter = std::move(next);
  }
  return PermGroup::from_elements(g.degree(), inter, guards);
}

PermGroup fitting_subgroup(const PermGroup& g, const Guards& guards) {
  std::vector<Permutation> gens;
  for (std::uint64_t p : prime_divisors(g.order())) {
    PermGroup core = p_core(g, p, guards);
    for (const auto& x : core.generators()) gens.push_back(x);
  }
  return PermGroup::from_generators(g.degree(), std::move(gens), guards);
}

namespace {

unsigned min_generators_abelian(const PermGroup& g, const Guards& guards) {
  // For finite abelian groups the minimal generator count is the largest
  // p-rank, read off from the element counts of order dividing p.
  const auto elems = g.elements(guards);
  unsigned best = 1;
  for (std::uint64_t p : prime_divisors(g.order())) {
    std::uint64_t count = 0;
    for (const auto& e : elems) {
      const std::uint64_t o = e.order();
      if (o == 1 || o == p) ++count;
    }
    best = std::max(best, static_cast<unsigned>(int_log(count, p)));
  }
  return best;
}

}  // namespace

unsigned min_generators(const PermGroup& g, const Guards& guards) {
  if (g.order() == 1) return 0;

  std::uint64_t p = 0;
  if (is_p_group(g, &p)) {
    // Burnside basis: the generator count is the dimension of G over its
    // Frattini quotient, and for p-groups Phi(G) = G' G^p.
    PermGroup der = derived_subgroup(g, guards);
    std::vector<Permutation> kgens = der.generators();
    for (const auto& x : g.generators()) kgens.push_back(perm_power(x, p));
    PermGroup phi = PermGroup::from_generators(g.degree(), std::move(kgens), guards);
    return static_cast<unsigned>(int_log(g.order() / phi.order(), p));
  }
  if (g.is_abelian()) return min_generators_abelian(g, guards);

  const auto elems = g.elements(guards);
  // One representative per cyclic subgroup; replacing an element by a
  // generator of the same cyclic subgroup never shrinks the span.
  std::vector<Permutation> reps;
  std::set<std::vector<Permutation>> seen;
  for (const auto& e : elems) {
    if (e.is_identity()) continue;
    std::vector<Permutation> powers;
    Permutation x = e;
    while (!x.is_identity()) {
      powers.push_back(x);
      x = x * e;
    }
    powers.push_back(std::move(x));
    std::sort(powers.begin(), powers.end());
    if (seen.insert(std::move(powers)).second) reps.push_back(e);
  }

  for (const auto& r : reps)
    if (r.order() == g.order()) return 1;

  // Tuple search of growing size over the representatives.
  std::vector<std::size_t> pick;
  auto search = [&](auto&& self, unsigned k, std::size_t from, std::vector<Permutation>& tuple) -> bool {
    if (k == 0)
      return PermGroup::from_generators(g.degree(), tuple, guards).order() == g.order();
    for (std::size_t i = from; i < reps.size(); ++i) {
      tuple.push_back(reps[i]);
      if (self(self, k - 1, i + 1, tuple)) return true;
      tuple.pop_back();
    }
    return false;
  };
  for (unsigned k = 2;; ++k) {
    std::vector<Permutation> tuple;
    if (search(search, k, 0, tuple)) return k;
    if (k > reps.size()) throw InternalError("generator search failed to terminate");
  }
}

// ---- SubgroupSet ----

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (std::uint32_t x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

std::uint32_t SubgroupSet::element_index(const Permutation& p) const { return index_.at(p); }

void SubgroupSet::build_column(std::uint32_t g) const {
  if (right_mul_.size() <= g) right_mul_.resize(elems_.size());
  if (!right_mul_[g].empty()) return;
  auto& col = right_mul_[g];
  col.resize(elems_.size());
  for (std::uint32_t x = 0; x < elems_.size(); ++x) col[x] = index_.at(elems_[x] * elems_[g]);
}

std::uint32_t SubgroupSet::mul(std::uint32_t x, std::uint32_t y) const {
  build_column(y);
  return right_mul_[y][x];
}

std::uint32_t SubgroupSet::inverse_of(std::uint32_t x) const { return inverse_[x]; }

std::uint64_t SubgroupSet::element_order(std::uint32_t x) const { return elems_[x].order(); }

std::uint32_t SubgroupSet::conjugate_of(std::uint32_t x, std::uint32_t by) const {
  return index_.at(conjugate(elems_[x], elems_[by]));
}

std::vector<std::uint32_t> SubgroupSet::closure(std::vector<std::uint32_t> seed) const {
  std::vector<bool> in(elems_.size(), false);
  std::vector<std::uint32_t> out{0};  // identity is element 0
  in[0] = true;
  for (std::uint32_t s : seed) {
    if (!in[s]) {
      in[s] = true;
      out.push_back(s);
    }
  }
  for (std::size_t qi = 0; qi < out.size(); ++qi) {
    for (std::uint32_t s : seed) {
      const std::uint32_t y = mul(out[qi], s);
      if (!in[y]) {
        in[y] = true;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::size_t> SubgroupSet::find(const std::vector<std::uint32_t>& sorted_elems) const {
  for (std::size_t i = 0; i < subgroups_.size(); ++i)
    if (subgroups_[i].elements == sorted_elems) return i;
  return std::nullopt;
}

bool SubgroupSet::contains_subgroup(std::size_t outer, std::size_t inner) const {
  const auto& a = subgroups_[outer].elements;
  const auto& b = subgroups_[inner].elements;
  if (b.size() > a.size()) return false;
  return std::includes(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<std::size_t> SubgroupSet::members_within(std::size_t idx) const {
  std::vector<std::size_t> out;
  const std::uint64_t big = subgroups_[idx].order();
  for (std::size_t i = 0; i < subgroups_.size(); ++i)
    if (big % subgroups_[i].order() == 0 && contains_subgroup(idx, i)) out.push_back(i);
  return out;
}

bool SubgroupSet::is_normal_within(std::size_t inner, std::size_t outer) const {
  const auto& in_set = subgroups_[inner].elements;
  for (std::uint32_t gen : subgroups_[outer].gen_indices) {
    for (std::uint32_t x : in_set) {
      const std::uint32_t y = conjugate_of(x, gen);
      if (!std::binary_search(in_set.begin(), in_set.end(), y)) return false;
    }
  }
  return true;
}

std::size_t SubgroupSet::centralizer_order(std::size_t idx) const {
  const auto& info = subgroups_[idx];
  std::size_t count = 0;
  for (const auto& e : elems_) {
    bool central = true;
    for (const auto& gen : info.group.generators()) {
      if (!commute(e, gen)) {
        central = false;
        break;
      }
    }
    if (central) ++count;
  }
  return count;
}

PermGroup SubgroupSet::materialize(const std::vector<std::uint32_t>& sorted_elems) const {
  std::vector<Permutation> list;
  list.reserve(sorted_elems.size());
  for (std::uint32_t i : sorted_elems) list.push_back(elems_[i]);
  return PermGroup::from_elements(parent_.degree(), list, guards_);
}

SubgroupSet SubgroupSet::enumerate(const PermGroup& parent, const Guards& guards) {
  if (parent.order() > guards.subgroup_enum_order)
    throw GuardExceeded("subgroup enumeration order guard exceeded");

  SubgroupSet lat;
  lat.parent_ = parent;
  lat.guards_ = guards;
  lat.elems_ = parent.elements(guards);
  std::sort(lat.elems_.begin(), lat.elems_.end());  // identity first
  for (std::uint32_t i = 0; i < lat.elems_.size(); ++i) lat.index_.emplace(lat.elems_[i], i);
  lat.inverse_.resize(lat.elems_.size());
  for (std::uint32_t i = 0; i < lat.elems_.size(); ++i)
    lat.inverse_[i] = lat.index_.at(lat.elems_[i].inverse());

  struct Record {
    std::vector<std::uint32_t> elements;  // sorted
    std::vector<std::uint32_t> gens;
  };
  std::vector<Record> records;
  std::unordered_map<std::vector<std::uint32_t>, std::size_t, VecHash> known;
  auto add_record = [&](std::vector<std::uint32_t> elements, std::vector<std::uint32_t> gens) {
    auto it = known.find(elements);
    if (it != known.end()) return std::make_pair(it->second, false);
    const std::size_t id = records.size();
    known.emplace(elements, id);
    records.push_back({std::move(elements), std::move(gens)});
    if (records.size() > guards.max_subgroups)
      throw GuardExceeded("subgroup count guard exceeded");
    return std::make_pair(id, true);
  };

  add_record({0}, {});  // trivial subgroup

  // Layer 0: cyclic subgroups, each with its first-found generator.
  std::vector<std::pair<std::size_t, std::uint32_t>> cyclic;  // (record, representative)
  for (std::uint32_t e = 1; e < lat.elems_.size(); ++e) {
    std::vector<std::uint32_t> cyc{0};
    for (std::uint32_t x = e; x != 0; x = lat.mul(x, e)) cyc.push_back(x);
    std::sort(cyc.begin(), cyc.end());
    auto [id, fresh] = add_record(std::move(cyc), {e});
    if (fresh) cyclic.emplace_back(id, e);
  }

  // Join every known subgroup with every cyclic subgroup until closed.
  for (std::size_t ri = 0; ri < records.size(); ++ri) {
    for (const auto& [ci, rep] : cyclic) {
      const auto& base = records[ri];
      if (std::binary_search(base.elements.begin(), base.elements.end(), rep)) continue;
      std::vector<std::uint32_t> gens = base.gens;
      gens.push_back(rep);
      std::vector<std::uint32_t> join = lat.closure(gens);
      add_record(std::move(join), std::move(gens));
    }
  }

  std::sort(records.begin(), records.end(), [](const Record& a, const Record& b) {
    if (a.elements.size() != b.elements.size()) return a.elements.size() < b.elements.size();
    return a.elements < b.elements;
  });

  lat.subgroups_.reserve(records.size());
  for (auto& rec : records) {
    SubgroupInfo info;
    info.group = lat.materialize(rec.elements);
    info.elements = std::move(rec.elements);
    for (const auto& gen : info.group.generators()) info.gen_indices.push_back(lat.index_.at(gen));

    info.is_normal = true;
    for (const auto& gg : parent.generators()) {
      const std::uint32_t by = lat.index_.at(gg);
      for (std::uint32_t x : info.gen_indices) {
        const std::uint32_t y = lat.conjugate_of(x, by);
        if (!std::binary_search(info.elements.begin(), info.elements.end(), y)) {
          info.is_normal = false;
          break;
        }
      }
      if (!info.is_normal) break;
    }

    info.is_abelian = info.group.is_abelian();
    info.is_elementary_abelian = is_elementary_abelian_group(info.group);
    if (info.is_abelian) {
      info.nilpotency_class = info.group.is_trivial() ? 0u : 1u;
      info.is_solvable = true;
    } else {
      info.nilpotency_class = nilpotency_class(info.group, guards);
      info.is_solvable = is_solvable(info.group, guards);
    }
    info.min_generators = min_generators(info.group, guards);
    lat.subgroups_.push_back(std::move(info));
  }

  lat.trivial_index_ = 0;
  lat.full_index_ = lat.subgroups_.size() - 1;
  if (lat.subgroups_[lat.full_index_].order() != parent.order())
    throw InternalError("subgroup enumeration lost the full group");
  return lat;
}

// ---- lattice-based operations ----

PermGroup frattini_subgroup(const SubgroupSet& lattice) {
  const auto& subs = lattice.subgroups();
  const std::uint64_t full = subs[lattice.full_index()].order();
  if (subs.size() == 1) return subs[0].group;  // trivial parent

  std::vector<std::size_t> maximal;
  for (std::size_t m = 0; m < subs.size(); ++m) {
    if (subs[m].order() == full) continue;
    bool is_max = true;
    for (std::size_t k = 0; k < subs.size() && is_max; ++k) {
      if (subs[k].order() <= subs[m].order() || subs[k].order() == full) continue;
      if (subs[k].order() % subs[m].order() != 0) continue;
      if (lattice.contains_subgroup(k, m)) is_max = false;
    }
    if (is_max) maximal.push_back(m);
  }

  std::vector<std::uint32_t> inter = subs[maximal[0]].elements;
  for (std::size_t i = 1; i < maximal.size() && inter.size() > 1; ++i) {
    std::vector<std::uint32_t> next;
    const auto& other = subs[maximal[i]].elements;
    std::set_intersection(inter.begin(), inter.end(), other.begin(), other.end(),
                          std::back_inserter(next));
    inter = std::move(next);
  }
  PermGroup phi = lattice.materialize(inter);
  if (!is_nilpotent(phi, lattice.guards()))
    throw InternalError("Frattini subgroup failed its nilpotency postcondition");
  return phi;
}

PermGroup frattini_subgroup(const PermGroup& g, const Guards& guards) {
  return frattini_subgroup(SubgroupSet::enumerate(g, guards));
}

unsigned rank(const SubgroupSet& lattice) {
  unsigned best = 0;
  for (const auto& sub : lattice.subgroups()) best = std::max(best, sub.min_generators);
  return best;
}

unsigned rank(const PermGroup& g, const Guards& guards) {
  return rank(SubgroupSet::enumerate(g, guards));
}

SpecialPGroupWitness is_special_p_group(const PermGroup& p_group, const Guards& guards) {
  std::uint64_t p = 0;
  if (!is_p_group(p_group, &p))
    throw NotAPGroup("special p-group test needs a nontrivial group of prime-power order");

  SpecialPGroupWitness w;
  w.p = p;
  PermGroup z = center(p_group, guards);
  PermGroup der = derived_subgroup(p_group, guards);
  w.center_order = z.order();
  w.derived_order = der.order();
  PermGroup phi = frattini_subgroup(p_group, guards);
  w.frattini_order = phi.order();

  if (is_elementary_abelian_group(p_group)) {
    w.is_special = true;
    w.branch = "elementary_abelian";
    return w;
  }
  if (same_group(phi, z) && same_group(z, der) && is_elementary_abelian_group(der)) {
    w.is_special = true;
    w.branch = "frattini=center=derived";
  }
  return w;
}

PermGroup chermak_delgado_subgroup(const SubgroupSet& lattice) {
  const auto& subs = lattice.subgroups();
  const std::uint64_t g_order = subs[lattice.full_index()].order();

  std::vector<std::uint64_t> measure(subs.size());
  std::uint64_t best = 0;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    measure[i] = subs[i].order() * static_cast<std::uint64_t>(lattice.centralizer_order(i));
    best = std::max(best, measure[i]);
  }

  std::vector<std::uint32_t> inter;
  bool first = true;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (measure[i] != best) continue;
    if (first) {
      inter = subs[i].elements;
      first = false;
    } else {
      std::vector<std::uint32_t> next;
      std::set_intersection(inter.begin(), inter.end(), subs[i].elements.begin(),
                            subs[i].elements.end(), std::back_inserter(next));
      inter = std::move(next);
    }
  }

  auto found = lattice.find(inter);
  if (!found || measure[*found] != best)
    throw InternalError("Chermak-Delgado lattice is not closed under intersection");
  const auto& n = subs[*found];

  // Postconditions: abelian, normal, contains the center, and the index
  // bound against every abelian subgroup.
  if (!n.is_abelian) throw InternalError("Chermak-Delgado subgroup is not abelian");
  if (!n.is_normal) throw InternalError("Chermak-Delgado subgroup is not normal");
  for (std::uint32_t e = 0; e < lattice.elements().size(); ++e) {
    bool central = true;
    for (const auto& gen : lattice.parent().generators())
      if (!commute(lattice.elements()[e], gen)) {
        central = false;
        break;
      }
    if (central && !std::binary_search(n.elements.begin(), n.elements.end(), e))
      throw InternalError("Chermak-Delgado subgroup misses the center");
  }
  const std::uint64_t n_index = g_order / n.order();
  for (const auto& sub : subs) {
    if (!sub.is_abelian) continue;
    const std::uint64_t a_index = g_order / sub.order();
    if (n_index > a_index * a_index)
      throw InternalError("Chermak-Delgado index bound violated");
  }
  return n.group;
}

PermGroup chermak_delgado_subgroup(const PermGroup& g, const Guards& guards) {
  return chermak_delgado_subgroup(SubgroupSet::enumerate(g, guards));
}

StructureReport structure_report(const SubgroupSet& lattice) {
  const PermGroup& g = lattice.parent();
  const Guards& guards = lattice.guards();
  StructureReport r;
  r.order = g.order();
  r.center_order = center(g, guards).order();
  r.derived_length = derived_length(g, guards);
  r.nilpotency_class = nilpotency_class(g, guards);
  r.fitting_order = fitting_subgroup(g, guards).order();
  r.frattini_order = frattini_subgroup(lattice).order();
  std::uint64_t p = 0;
  if (is_p_group(g, &p)) {
    std::uint64_t count = 0;
    g.for_each_element(
        [&](const Permutation& e) {
          const std::uint64_t o = e.order();
          if (o != 1 && o != p) return;
          for (const auto& gen : g.generators())
            if (!commute(e, gen)) return;
          ++count;
        },
        guards);
    r.omega1_center_order = count;
  }
  r.rank = rank(lattice);
  r.min_generators = min_generators(g, guards);
  r.solvable = is_solvable(g, guards);
  return r;
}

StructureReport structure_report(const PermGroup& g, const Guards& guards) {
  return structure_report(SubgroupSet::enumerate(g, guards));
}

}  // namespace gtk

#include "gtk/group_spec.hpp"

#include <json.hpp>

#include "gtk/errors.hpp"
#include "gtk/heisenberg.hpp"

namespace gtk {

using nlohmann::json;

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PermGroup cyclic_group(std::uint64_t n, const Guards& guards) {
  if (n < 1) throw RangeError("cyclic:n requires n >= 1");
  if (n > guards.max_degree) throw GuardExceeded("degree guard exceeded");
  const auto deg = static_cast<std::uint32_t>(n);
  if (n == 1) return PermGroup::trivial(1);
  std::vector<std::uint32_t> images(deg);
  for (std::uint32_t i = 0; i < deg; ++i) images[i] = (i + 1) % deg;
  return PermGroup::from_generators(deg, {Permutation::from_images(std::move(images))}, guards);
}

PermGroup elementary_abelian_group(std::uint64_t p, std::uint32_t r, const Guards& guards) {
  if (!is_prime(p)) throw RangeError("elem_abelian:p:r requires p prime");
  if (r == 0) return PermGroup::trivial(1);
  const std::uint64_t deg64 = p * r;
  if (deg64 > guards.max_degree) throw GuardExceeded("degree guard exceeded");
  const auto deg = static_cast<std::uint32_t>(deg64);
  const auto pp = static_cast<std::uint32_t>(p);
  std::vector<Permutation> gens;
  for (std::uint32_t block = 0; block < r; ++block) {
    std::vector<std::uint32_t> images(deg);
    for (std::uint32_t i = 0; i < deg; ++i) images[i] = i;
    for (std::uint32_t i = 0; i < pp; ++i) images[block * pp + i] = block * pp + (i + 1) % pp;
    gens.push_back(Permutation::from_images(std::move(images)));
  }
  return PermGroup::from_generators(deg, std::move(gens), guards);
}

PermGroup dihedral_group(std::uint64_t n, const Guards& guards) {
  // Symmetries of a regular n-gon; the action on fewer than 3 vertices is
  // not faithful, so small n is rejected.
  if (n < 3) throw RangeError("dihedral:n requires n >= 3");
  if (n > guards.max_degree) throw GuardExceeded("degree guard exceeded");
  const auto deg = static_cast<std::uint32_t>(n);
  std::vector<std::uint32_t> rot(deg), refl(deg);
  for (std::uint32_t i = 0; i < deg; ++i) {
    rot[i] = (i + 1) % deg;
    refl[i] = (deg - i) % deg;
  }
  return PermGroup::from_generators(
      deg, {Permutation::from_images(std::move(rot)), Permutation::from_images(std::move(refl))},
      guards);
}

PermGroup symmetric_group(std::uint32_t n, const Guards& guards) {
  if (n < 1) throw RangeError("sym:n requires n >= 1");
  if (n > guards.max_degree) throw GuardExceeded("degree guard exceeded");
  if (n == 1) return PermGroup::trivial(1);
  std::vector<std::uint32_t> cycle(n), swap(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    cycle[i] = (i + 1) % n;
    swap[i] = i;
  }
  swap[0] = 1;
  swap[1] = 0;
  if (n == 2) return PermGroup::from_generators(n, {Permutation::from_images(std::move(swap))}, guards);
  return PermGroup::from_generators(
      n, {Permutation::from_images(std::move(swap)), Permutation::from_images(std::move(cycle))},
      guards);
}

PermGroup alternating_group(std::uint32_t n, const Guards& guards) {
  if (n < 1) throw RangeError("alt:n requires n >= 1");
  if (n > guards.max_degree) throw GuardExceeded("degree guard exceeded");
  if (n <= 2) return PermGroup::trivial(n);
  std::vector<std::uint32_t> three(n);
  for (std::uint32_t i = 0; i < n; ++i) three[i] = i;
  three[0] = 1;
  three[1] = 2;
  three[2] = 0;
  if (n == 3)
    return PermGroup::from_generators(n, {Permutation::from_images(std::move(three))}, guards);
  std::vector<std::uint32_t> big(n);
  if (n % 2 == 1) {
    for (std::uint32_t i = 0; i < n; ++i) big[i] = (i + 1) % n;  // n-cycle, even
  } else {
    big[0] = 0;
    for (std::uint32_t i = 1; i < n; ++i) big[i] = i % (n - 1) + 1;  // (n-1)-cycle on 2..n
  }
  return PermGroup::from_generators(
      n, {Permutation::from_images(std::move(three)), Permutation::from_images(std::move(big))},
      guards);
}

namespace {

std::vector<std::uint64_t> parse_constructor_args(const std::string& text, std::size_t expected,
                                                  const std::string& name) {
  std::vector<std::uint64_t> args;
  std::size_t pos = text.find(':');
  while (pos != std::string::npos) {
    const std::size_t next = text.find(':', pos + 1);
    const std::string tok = text.substr(pos + 1, next == std::string::npos ? next : next - pos - 1);
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw FormatError("bad parameter in group constructor: " + text);
    args.push_back(std::stoull(tok));
    pos = next;
  }
  if (args.size() != expected)
    throw FormatError(name + " expects " + std::to_string(expected) + " parameter(s): " + text);
  return args;
}

}  // namespace

struct GroupSpec::Impl {
  enum class Kind { construct, explicit_gens, semidirect } kind = Kind::construct;

  // construct
  std::string construct_text;

  // explicit_gens
  std::uint32_t degree = 0;
  std::vector<std::string> generator_strings;

  // semidirect
  std::unique_ptr<GroupSpec> normal_part;
  std::unique_ptr<GroupSpec> complement_part;
  std::vector<std::vector<std::string>> action_strings;

  std::unique_ptr<Impl> clone() const {
    auto copy = std::make_unique<Impl>();
    copy->kind = kind;
    copy->construct_text = construct_text;
    copy->degree = degree;
    copy->generator_strings = generator_strings;
    if (normal_part) copy->normal_part = std::make_unique<GroupSpec>(*normal_part);
    if (complement_part) copy->complement_part = std::make_unique<GroupSpec>(*complement_part);
    copy->action_strings = action_strings;
    return copy;
  }
};

GroupSpec::GroupSpec() : impl_(std::make_unique<Impl>()) {}
GroupSpec::GroupSpec(const GroupSpec& other)
    : impl_(other.impl_->clone()), label_(other.label_) {}
GroupSpec& GroupSpec::operator=(const GroupSpec& other) {
  if (this != &other) {
    impl_ = other.impl_->clone();
    label_ = other.label_;
  }
  return *this;
}
GroupSpec::GroupSpec(GroupSpec&&) noexcept = default;
GroupSpec& GroupSpec::operator=(GroupSpec&&) noexcept = default;
GroupSpec::~GroupSpec() = default;

GroupSpec GroupSpec::parse(const std::string& text) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw FormatError("empty group spec");
  if (text[first] == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception& e) {
      throw FormatError(std::string("invalid JSON group spec: ") + e.what());
    }
    return from_json(j);
  }
  GroupSpec spec;
  spec.impl_->kind = Impl::Kind::construct;
  spec.impl_->construct_text = text.substr(first, text.find_last_not_of(" \t\r\n") - first + 1);
  spec.label_ = spec.impl_->construct_text;
  return spec;
}

GroupSpec GroupSpec::from_json(const json& j) {
  if (!j.is_object()) throw FormatError("group spec JSON must be an object");
  GroupSpec spec;
  auto parse_semidirect = [&spec](const json& sd) {
    if (!sd.is_object() || !sd.contains("normal") || !sd.contains("complement") ||
        !sd.contains("action"))
      throw FormatError("semidirect spec needs 'normal', 'complement' and 'action'");
    spec.impl_->kind = Impl::Kind::semidirect;
    spec.impl_->normal_part = std::make_unique<GroupSpec>(from_json(sd.at("normal")));
    spec.impl_->complement_part = std::make_unique<GroupSpec>(from_json(sd.at("complement")));
    if (!sd.at("action").is_array()) throw FormatError("semidirect 'action' must be an array");
    for (const auto& row : sd.at("action")) {
      std::vector<std::string> images;
      if (!row.is_array()) throw FormatError("semidirect action rows must be arrays");
      for (const auto& s : row) {
        if (!s.is_string()) throw FormatError("semidirect action entries must be cycle strings");
        images.push_back(s.get<std::string>());
      }
      spec.impl_->action_strings.push_back(std::move(images));
    }
    spec.label_ = "semidirect";
  };

  if (j.contains("construct")) {
    const auto& c = j.at("construct");
    if (c.is_string() && c.get<std::string>() == "semidirect") {
      parse_semidirect(j);
      return spec;
    }
    if (!c.is_string()) throw FormatError("'construct' must be a string");
    spec.impl_->kind = Impl::Kind::construct;
    spec.impl_->construct_text = c.get<std::string>();
    spec.label_ = spec.impl_->construct_text;
    return spec;
  }
  if (j.contains("semidirect")) {
    parse_semidirect(j.at("semidirect"));
    return spec;
  }
  if (j.contains("generators")) {
    if (!j.contains("degree") || !j.at("degree").is_number_unsigned())
      throw FormatError("explicit group spec needs an unsigned 'degree'");
    spec.impl_->kind = Impl::Kind::explicit_gens;
    spec.impl_->degree = j.at("degree").get<std::uint32_t>();
    for (const auto& s : j.at("generators")) {
      if (!s.is_string()) throw FormatError("'generators' must be cycle strings");
      spec.impl_->generator_strings.push_back(s.get<std::string>());
    }
    spec.label_ = j.value("name", std::string("explicit"));
    return spec;
  }
  throw FormatError("group spec JSON needs 'construct', 'semidirect' or 'generators'");
}

PermGroup GroupSpec::build(const Guards& guards) const {
  switch (impl_->kind) {
    case Impl::Kind::construct: {
      const std::string& text = impl_->construct_text;
      const std::string head = text.substr(0, text.find(':'));
      if (head == "cyclic") return cyclic_group(parse_constructor_args(text, 1, head)[0], guards);
      if (head == "elem_abelian") {
        auto args = parse_constructor_args(text, 2, head);
        if (args[1] > 64) throw RangeError("elem_abelian rank out of range");
        return elementary_abelian_group(args[0], static_cast<std::uint32_t>(args[1]), guards);
      }
      if (head == "dihedral") return dihedral_group(parse_constructor_args(text, 1, head)[0], guards);
      if (head == "sym") {
        auto args = parse_constructor_args(text, 1, head);
        if (args[0] > guards.max_degree) throw GuardExceeded("degree guard exceeded");
        return symmetric_group(static_cast<std::uint32_t>(args[0]), guards);
      }
      if (head == "alt") {
        auto args = parse_constructor_args(text, 1, head);
        if (args[0] > guards.max_degree) throw GuardExceeded("degree guard exceeded");
        return alternating_group(static_cast<std::uint32_t>(args[0]), guards);
      }
      if (head == "heisenberg") {
        auto args = parse_constructor_args(text, 1, head);
        return HeisenbergGroup(args[0], guards).perm_group();
      }
      throw FormatError("unknown group constructor: " + text);
    }
    case Impl::Kind::explicit_gens: {
      if (impl_->degree > guards.max_degree) throw GuardExceeded("degree guard exceeded");
      std::vector<Permutation> gens;
      for (const auto& s : impl_->generator_strings)
        gens.push_back(Permutation::from_cycles(s, impl_->degree));
      return PermGroup::from_generators(impl_->degree, std::move(gens), guards);
    }
    case Impl::Kind::semidirect: {
      PermGroup n = impl_->normal_part->build(guards);
      PermGroup h = impl_->complement_part->build(guards);
      if (impl_->action_strings.size() != h.generators().size())
        throw FormatError("semidirect action must have one row per complement generator");
      std::vector<std::vector<Permutation>> action;
      for (const auto& row : impl_->action_strings) {
        std::vector<Permutation> images;
        for (const auto& s : row) images.push_back(Permutation::from_cycles(s, n.degree()));
        action.push_back(std::move(images));
      }
      return semidirect_product(n, h, action, guards);
    }
  }
  throw InternalError("unreachable group spec kind");
}

PermGroup group_from_spec(const std::string& text, const Guards& guards) {
  return GroupSpec::parse(text).build(guards);
}

}  // namespace gtk

#include "gtk/permutation.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include "gtk/errors.hpp"

namespace gtk {

Permutation::Permutation(std::uint32_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), 0u);
}

Permutation Permutation::from_images(std::vector<std::uint32_t> images) {
  const auto n = static_cast<std::uint32_t>(images.size());
  std::vector<bool> seen(n, false);
  for (std::uint32_t img : images) {
    if (img >= n) throw FormatError("permutation image out of range");
    if (seen[img]) throw FormatError("permutation image table is not a bijection");
    seen[img] = true;
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(const std::string& text, std::uint32_t degree) {
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  std::vector<bool> used(degree, false);

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw FormatError("expected '(' in cycle notation: " + text);
    ++i;
    std::vector<std::uint32_t> cycle;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw FormatError("expected point number in cycle notation: " + text);
      std::uint64_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (v > degree) throw FormatError("point out of range in cycle notation: " + text);
        ++i;
      }
      if (v == 0) throw FormatError("cycle notation is 1-based; got 0 in: " + text);
      const auto pt = static_cast<std::uint32_t>(v - 1);
      if (used[pt]) throw FormatError("point repeated in cycle notation: " + text);
      used[pt] = true;
      cycle.push_back(pt);
      skip_ws();
    }
    if (i >= text.size()) throw FormatError("unterminated cycle in: " + text);
    ++i;  // ')'
    for (std::size_t k = 0; k + 1 < cycle.size(); ++k) images[cycle[k]] = cycle[k + 1];
    if (cycle.size() > 1) images[cycle.back()] = cycle.front();
    skip_ws();
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

bool Permutation::is_identity() const {
  for (std::uint32_t i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::uint32_t Permutation::smallest_moved_point() const {
  for (std::uint32_t i = 0; i < degree(); ++i)
    if (images_[i] != i) return i;
  return degree();
}

std::uint64_t Permutation::order() const {
  std::vector<bool> seen(degree(), false);
  std::uint64_t result = 1;
  for (std::uint32_t i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (std::uint32_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> inv(degree());
  for (std::uint32_t i = 0; i < degree(); ++i) inv[images_[i]] = i;
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

std::string Permutation::cycle_string() const {
  std::vector<bool> seen(degree(), false);
  std::ostringstream out;
  bool any = false;
  for (std::uint32_t i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == i) {
      seen[i] = true;
      continue;
    }
    any = true;
    out << '(';
    bool first = true;
    for (std::uint32_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (!first) out << ' ';
      out << (j + 1);
      first = false;
    }
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  const auto n = a.degree();
  std::vector<std::uint32_t> images(n);
  for (std::uint32_t i = 0; i < n; ++i) images[i] = b.images_[a.images_[i]];
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

bool commute(const Permutation& a, const Permutation& b) {
  const auto n = a.degree();
  for (std::uint32_t i = 0; i < n; ++i)
    if (b[a[i]] != a[b[i]]) return false;
  return true;
}

Permutation conjugate(const Permutation& g, const Permutation& by) {
  return by.inverse() * g * by;
}

Permutation commutator(const Permutation& a, const Permutation& b) {
  return a.inverse() * b.inverse() * a * b;
}

std::size_t PermutationHash::operator()(const Permutation& p) const {
  // FNV-1a over the image words.
  std::size_t h = 1469598103934665603ull;
  for (std::uint32_t v : p.images()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace gtk

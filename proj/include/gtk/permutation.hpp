#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace gtk {

/// A permutation of the points {0, ..., degree-1}, stored as its image table.
///
/// Products compose left to right: (a * b) maps x to b[a[x]], so a group acts
/// on points from the right and x^(a*b) = (x^a)^b.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::uint32_t degree);  // identity

  static Permutation from_images(std::vector<std::uint32_t> images);

  // 1-based disjoint cycle notation, e.g. "(1 2 3)(4 5)". "()" and the empty
  // string denote the identity. Throws FormatError on bad syntax, points out
  // of range, or repeated points.
  static Permutation from_cycles(const std::string& text, std::uint32_t degree);

  std::uint32_t degree() const { return static_cast<std::uint32_t>(images_.size()); }
  std::uint32_t operator[](std::uint32_t point) const { return images_[point]; }
  const std::vector<std::uint32_t>& images() const { return images_; }

  bool is_identity() const;
  // Returns degree() when the permutation is the identity.
  std::uint32_t smallest_moved_point() const;
  std::uint64_t order() const;  // lcm of cycle lengths

  Permutation inverse() const;

  std::string cycle_string() const;  // 1-based; "()" for the identity

  friend Permutation operator*(const Permutation& a, const Permutation& b);

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<std::uint32_t> images_;
};

bool commute(const Permutation& a, const Permutation& b);

// by^-1 * g * by
Permutation conjugate(const Permutation& g, const Permutation& by);

// a^-1 * b^-1 * a * b
Permutation commutator(const Permutation& a, const Permutation& b);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const;
};

}  // namespace gtk

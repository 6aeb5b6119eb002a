#pragma once

#include <cstdint>
#include <vector>

namespace gtk {

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p);

/// Dense matrix over the prime field F_p. Vectors are rows and matrices act
/// on the right, v -> v * M.
class FpMatrix {
 public:
  FpMatrix() = default;
  FpMatrix(std::uint64_t p, unsigned rows, unsigned cols);
  static FpMatrix identity(std::uint64_t p, unsigned n);

  std::uint64_t p() const { return p_; }
  unsigned rows() const { return rows_; }
  unsigned cols() const { return cols_; }

  std::uint32_t at(unsigned r, unsigned c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  void set(unsigned r, unsigned c, std::uint64_t v) {
    a_[static_cast<std::size_t>(r) * cols_ + c] = static_cast<std::uint32_t>(v % p_);
  }

  FpMatrix operator*(const FpMatrix& rhs) const;
  FpMatrix operator+(const FpMatrix& rhs) const;
  FpMatrix operator-(const FpMatrix& rhs) const;
  FpMatrix scaled(std::uint64_t s) const;
  bool operator==(const FpMatrix&) const = default;

  FpMatrix transpose() const;
  bool is_zero() const;
  unsigned rank() const;
  bool invertible() const { return rows_ == cols_ && rank() == rows_; }

  /// Basis, as rows, of { v : v * this = 0 }.
  FpMatrix left_kernel() const;
  /// Basis, as rows, of the row space (reduced row echelon form).
  FpMatrix row_basis() const;
  bool row_space_contains(const std::vector<std::uint32_t>& v) const;

  std::vector<std::uint32_t> row(unsigned r) const;

  static FpMatrix vstack(const FpMatrix& a, const FpMatrix& b);
  static FpMatrix hstack(const FpMatrix& a, const FpMatrix& b);

 private:
  std::uint64_t p_ = 2;
  unsigned rows_ = 0, cols_ = 0;
  std::vector<std::uint32_t> a_;
};

}  // namespace gtk

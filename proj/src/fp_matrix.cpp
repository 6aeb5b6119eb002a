#include "gtk/fp_matrix.hpp"

#include "gtk/errors.hpp"

namespace gtk {

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) throw RangeError("zero has no inverse mod p");
  // Fermat: a^(p-2) mod p.
  std::uint64_t result = 1, base = a, e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

FpMatrix::FpMatrix(std::uint64_t p, unsigned rows, unsigned cols)
    : p_(p), rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, 0) {}

FpMatrix FpMatrix::identity(std::uint64_t p, unsigned n) {
  FpMatrix m(p, n, n);
  for (unsigned i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

FpMatrix FpMatrix::operator*(const FpMatrix& rhs) const {
  FpMatrix out(p_, rows_, rhs.cols_);
  for (unsigned i = 0; i < rows_; ++i)
    for (unsigned k = 0; k < cols_; ++k) {
      const std::uint64_t v = at(i, k);
      if (v == 0) continue;
      for (unsigned j = 0; j < rhs.cols_; ++j)
        out.set(i, j, out.at(i, j) + v * rhs.at(k, j) % p_);
    }
  return out;
}

FpMatrix FpMatrix::operator+(const FpMatrix& rhs) const {
  FpMatrix out(p_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i)
    out.a_[i] = static_cast<std::uint32_t>((a_[i] + static_cast<std::uint64_t>(rhs.a_[i])) % p_);
  return out;
}

FpMatrix FpMatrix::operator-(const FpMatrix& rhs) const {
  FpMatrix out(p_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i)
    out.a_[i] = static_cast<std::uint32_t>((a_[i] + p_ - rhs.a_[i]) % p_);
  return out;
}

FpMatrix FpMatrix::scaled(std::uint64_t s) const {
  s %= p_;
  FpMatrix out(p_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i)
    out.a_[i] = static_cast<std::uint32_t>(a_[i] * s % p_);
  return out;
}

FpMatrix FpMatrix::transpose() const {
  FpMatrix out(p_, cols_, rows_);
  for (unsigned i = 0; i < rows_; ++i)
    for (unsigned j = 0; j < cols_; ++j) out.set(j, i, at(i, j));
  return out;
}

bool FpMatrix::is_zero() const {
  for (std::uint32_t v : a_)
    if (v != 0) return false;
  return true;
}

namespace {

// In-place reduced row echelon form; returns the pivot columns.
std::vector<unsigned> rref(FpMatrix& m) {
  std::vector<unsigned> pivots;
  unsigned row = 0;
  for (unsigned col = 0; col < m.cols() && row < m.rows(); ++col) {
    unsigned pivot = row;
    while (pivot < m.rows() && m.at(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row)
      for (unsigned j = 0; j < m.cols(); ++j) {
        const std::uint32_t tmp = m.at(row, j);
        m.set(row, j, m.at(pivot, j));
        m.set(pivot, j, tmp);
      }
    const std::uint64_t inv = inverse_mod(m.at(row, col), m.p());
    for (unsigned j = 0; j < m.cols(); ++j) m.set(row, j, m.at(row, j) * inv % m.p());
    for (unsigned i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      const std::uint64_t factor = m.at(i, col);
      for (unsigned j = 0; j < m.cols(); ++j)
        m.set(i, j, m.at(i, j) + (m.p() - factor) * m.at(row, j) % m.p());
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

unsigned FpMatrix::rank() const {
  FpMatrix copy = *this;
  return static_cast<unsigned>(rref(copy).size());
}

FpMatrix FpMatrix::left_kernel() const {
  // v * M = 0  <=>  M^T v^T = 0; compute the kernel of the transpose.
  FpMatrix t = transpose();
  const std::vector<unsigned> pivots = rref(t);
  std::vector<bool> is_pivot(t.cols(), false);
  for (unsigned c : pivots) is_pivot[c] = true;

  FpMatrix basis(p_, t.cols() - static_cast<unsigned>(pivots.size()), t.cols());
  unsigned out_row = 0;
  for (unsigned free_col = 0; free_col < t.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    basis.set(out_row, free_col, 1);
    for (unsigned pr = 0; pr < pivots.size(); ++pr) {
      const std::uint32_t v = t.at(pr, free_col);
      if (v != 0) basis.set(out_row, pivots[pr], p_ - v);
    }
    ++out_row;
  }
  return basis;
}

FpMatrix FpMatrix::row_basis() const {
  FpMatrix copy = *this;
  const auto pivots = rref(copy);
  FpMatrix out(p_, static_cast<unsigned>(pivots.size()), cols_);
  for (unsigned i = 0; i < pivots.size(); ++i)
    for (unsigned j = 0; j < cols_; ++j) out.set(i, j, copy.at(i, j));
  return out;
}

bool FpMatrix::row_space_contains(const std::vector<std::uint32_t>& v) const {
  FpMatrix extended(p_, rows_ + 1, cols_);
  for (unsigned i = 0; i < rows_; ++i)
    for (unsigned j = 0; j < cols_; ++j) extended.set(i, j, at(i, j));
  for (unsigned j = 0; j < cols_; ++j) extended.set(rows_, j, v[j]);
  return extended.rank() == rank();
}

std::vector<std::uint32_t> FpMatrix::row(unsigned r) const {
  std::vector<std::uint32_t> out(cols_);
  for (unsigned j = 0; j < cols_; ++j) out[j] = at(r, j);
  return out;
}

FpMatrix FpMatrix::vstack(const FpMatrix& a, const FpMatrix& b) {
  FpMatrix out(a.p_, a.rows_ + b.rows_, a.cols_);
  for (unsigned i = 0; i < a.rows_; ++i)
    for (unsigned j = 0; j < a.cols_; ++j) out.set(i, j, a.at(i, j));
  for (unsigned i = 0; i < b.rows_; ++i)
    for (unsigned j = 0; j < b.cols_; ++j) out.set(a.rows_ + i, j, b.at(i, j));
  return out;
}

FpMatrix FpMatrix::hstack(const FpMatrix& a, const FpMatrix& b) {
  FpMatrix out(a.p_, a.rows_, a.cols_ + b.cols_);
  for (unsigned i = 0; i < a.rows_; ++i) {
    for (unsigned j = 0; j < a.cols_; ++j) out.set(i, j, a.at(i, j));
    for (unsigned j = 0; j < b.cols_; ++j) out.set(i, a.cols_ + j, b.at(i, j));
  }
  return out;
}

}  // namespace gtk

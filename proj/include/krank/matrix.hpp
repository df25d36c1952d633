#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace krank {

/// Dense row-major integer matrix. Shapes with zero rows or columns are valid.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<std::vector<std::int64_t>> to_rows() const;

  bool is_zero() const noexcept;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// Rank over Q by fraction-free (Bareiss) elimination on arbitrary-precision
/// integers.
std::size_t rational_rank(const IntMatrix& m);

/// True when a * b is the zero matrix, computed exactly. Requires
/// a.cols() == b.rows().
bool product_is_zero(const IntMatrix& a, const IntMatrix& b);

} // namespace krank

#include "krank/matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace krank {

using boost::multiprecision::cpp_int;

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows,
                               std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
    std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(r * cols));
  }
  return m;
}

std::vector<std::vector<std::int64_t>> IntMatrix::to_rows() const {
  std::vector<std::vector<std::int64_t>> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    out[r].assign(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  return out;
}

bool IntMatrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](auto v) { return v == 0; });
}

std::size_t rational_rank(const IntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<cpp_int>> a(rows, std::vector<cpp_int>(cols));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = m(r, c);

  // Every entry below the pivot rows stays a minor of the input, so each
  // division by the previous pivot is exact.
  cpp_int prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    const cpp_int& p = a[rank][col];
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t c = col + 1; c < cols; ++c) {
        a[r][c] = (p * a[r][c] - a[r][col] * a[rank][c]) / prev;
      }
      a[r][col] = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

bool product_is_zero(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("product_is_zero: shape mismatch");
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      cpp_int acc = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) acc += cpp_int(a(i, k)) * b(k, j);
      if (acc != 0) return false;
    }
  }
  return true;
}

} // namespace krank

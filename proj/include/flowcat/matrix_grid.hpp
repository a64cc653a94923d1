#ifndef FLOWCAT_MATRIX_GRID_HPP
#define FLOWCAT_MATRIX_GRID_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace flowcat {

// Dense nonnegative integer matrix with 1-based accessors.
class MatrixGrid {
 public:
  MatrixGrid() = default;
  MatrixGrid(int rows, int cols);

  // Upper triangular, A(i,i) = i-1 for i <= min(rows, cols), zero elsewhere.
  static MatrixGrid umat(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  std::int64_t& at(int i, int j) { return cells_[index(i, j)]; }
  std::int64_t at(int i, int j) const { return cells_[index(i, j)]; }

  bool is_upper_triangular() const;
  // Upper triangular with the fixed diagonal A(i,i) = i-1.
  bool is_umat() const;

  // r_k = sum_i A(k,i)
  std::int64_t row_sum(int k) const;
  // h_k = sum_{i>k} A(k,i) - sum_{j<=k} A(j,k)
  std::int64_t hook_sum(int k) const;
  std::int64_t column_sum(int k) const;

  MatrixGrid top_rows(int count) const;
  MatrixGrid with_columns_swapped(int c1, int c2) const;

  const std::vector<std::int64_t>& cells() const { return cells_; }

  friend bool operator==(const MatrixGrid&, const MatrixGrid&) = default;
  friend auto operator<=>(const MatrixGrid&, const MatrixGrid&) = default;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i - 1) * cols_ + (j - 1);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::int64_t> cells_;
};

// Visits every umat(rows, cols) matrix whose hook sums match `hooks`
// (hooks[k-1] constrains h_k; nullopt leaves it free). Every row that has
// cells right of the diagonal must be constrained, otherwise the family is
// infinite and InvalidInput is thrown. Throws LimitExceeded past `cap`
// visited matrices.
void for_each_umat_with_hooks(
    int rows, int cols, std::span<const std::optional<std::int64_t>> hooks,
    const std::function<void(const MatrixGrid&)>& visit, std::size_t cap);

}  // namespace flowcat

#endif

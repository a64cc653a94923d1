#include "flowcat/matrix_grid.hpp"

#include <algorithm>

#include "flowcat/errors.hpp"

namespace flowcat {

MatrixGrid::MatrixGrid(int rows, int cols)
    : rows_(rows), cols_(cols),
      cells_(static_cast<std::size_t>(rows) * cols, 0) {
  if (rows < 0 || cols < 0) throw InvalidInput("negative matrix dimension");
}

MatrixGrid MatrixGrid::umat(int rows, int cols) {
  MatrixGrid m(rows, cols);
  for (int i = 1; i <= std::min(rows, cols); ++i) m.at(i, i) = i - 1;
  return m;
}

bool MatrixGrid::is_upper_triangular() const {
  for (int i = 1; i <= rows_; ++i) {
    for (int j = 1; j <= cols_; ++j) {
      if (at(i, j) < 0) return false;
      if (i > j && at(i, j) != 0) return false;
    }
  }
  return true;
}

bool MatrixGrid::is_umat() const {
  if (!is_upper_triangular()) return false;
  for (int i = 1; i <= std::min(rows_, cols_); ++i) {
    if (at(i, i) != i - 1) return false;
  }
  return true;
}

std::int64_t MatrixGrid::row_sum(int k) const {
  std::int64_t s = 0;
  if (k > rows_) return 0;
  for (int i = 1; i <= cols_; ++i) s += at(k, i);
  return s;
}

std::int64_t MatrixGrid::hook_sum(int k) const {
  std::int64_t s = 0;
  if (k <= rows_) {
    for (int i = k + 1; i <= cols_; ++i) s += at(k, i);
  }
  if (k <= cols_) {
    for (int j = 1; j <= std::min(k, rows_); ++j) s -= at(j, k);
  }
  return s;
}

std::int64_t MatrixGrid::column_sum(int k) const {
  std::int64_t s = 0;
  for (int j = 1; j <= rows_; ++j) s += at(j, k);
  return s;
}

MatrixGrid MatrixGrid::top_rows(int count) const {
  MatrixGrid out(count, cols_);
  for (int i = 1; i <= count; ++i) {
    for (int j = 1; j <= cols_; ++j) out.at(i, j) = at(i, j);
  }
  return out;
}

MatrixGrid MatrixGrid::with_columns_swapped(int c1, int c2) const {
  MatrixGrid out = *this;
  for (int i = 1; i <= rows_; ++i) std::swap(out.at(i, c1), out.at(i, c2));
  return out;
}

namespace {

struct UmatWalker {
  int rows;
  int cols;
  std::span<const std::optional<std::int64_t>> hooks;
  const std::function<void(const MatrixGrid&)>& visit;
  std::size_t cap;
  std::size_t visited = 0;
  MatrixGrid m;

  void row(int k) {
    if (k > rows) {
      if (++visited > cap) {
        throw LimitExceeded("umat enumeration exceeded the cell cap");
      }
      visit(m);
      return;
    }
    std::int64_t above = 0;  // column k, rows 1..k-1
    if (k <= cols) {
      for (int j = 1; j < k; ++j) above += m.at(j, k);
    }
    const std::int64_t diagonal = k <= cols ? k - 1 : 0;
    const int first_free = k + 1;
    if (first_free > cols) {
      const std::int64_t h = -(above + diagonal);
      if (hooks[k - 1] && *hooks[k - 1] != h) return;
      row(k + 1);
      return;
    }
    if (!hooks[k - 1]) {
      throw InvalidInput("umat enumeration needs a hook target for row " +
                         std::to_string(k));
    }
    const std::int64_t total = *hooks[k - 1] + above + diagonal;
    if (total < 0) return;
    fill(k, first_free, total);
  }

  void fill(int k, int j, std::int64_t remaining) {
    if (j == cols) {
      m.at(k, j) = remaining;
      row(k + 1);
      m.at(k, j) = 0;
      return;
    }
    for (std::int64_t c = 0; c <= remaining; ++c) {
      m.at(k, j) = c;
      fill(k, j + 1, remaining - c);
    }
    m.at(k, j) = 0;
  }
};

}  // namespace

void for_each_umat_with_hooks(
    int rows, int cols, std::span<const std::optional<std::int64_t>> hooks,
    const std::function<void(const MatrixGrid&)>& visit, std::size_t cap) {
  if (hooks.size() != static_cast<std::size_t>(rows)) {
    throw InvalidInput("need one hook target slot per row");
  }
  UmatWalker walker{rows, cols, hooks, visit, cap, 0, MatrixGrid::umat(rows, cols)};
  walker.row(1);
}

}  // namespace flowcat

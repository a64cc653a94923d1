#include "flowcat/tableau.hpp"

#include <bit>

#include "flowcat/errors.hpp"

namespace flowcat {

TeslerTableau::TeslerTableau(int n) : n_(n), rows_(n, 0) {
  if (n < 0 || n > max_size) {
    throw InvalidInput("tableau size must be in 0.." + std::to_string(max_size));
  }
}

TeslerTableau TeslerTableau::from_cells(
    int n, std::span<const std::pair<int, int>> ones) {
  TeslerTableau t(n);
  for (auto [i, j] : ones) t.set(i, j, true);
  return t;
}

bool TeslerTableau::get(int i, int j) const {
  if (i < 1 || j < i || j > n_) return false;
  return (rows_[i - 1] >> (j - 1)) & 1U;
}

void TeslerTableau::set(int i, int j, bool value) {
  if (i < 1 || j < i || j > n_) {
    throw InvalidInput("cell (" + std::to_string(i) + "," + std::to_string(j) +
                       ") is outside the shifted staircase");
  }
  const std::uint32_t bit = 1U << (j - 1);
  rows_[i - 1] = value ? (rows_[i - 1] | bit) : (rows_[i - 1] & ~bit);
}

bool TeslerTableau::column_has_one_above(int j) const {
  for (int k = 1; k < j; ++k) {
    if (get(k, j)) return true;
  }
  return false;
}

int TeslerTableau::ones() const {
  int total = 0;
  for (std::uint32_t r : rows_) total += std::popcount(r);
  return total;
}

int TeslerTableau::nonzero_rows() const {
  int total = 0;
  for (std::uint32_t r : rows_) total += r != 0;
  return total;
}

bool TeslerTableau::is_valid_for(std::span<const std::int64_t> a) const {
  if (a.size() != static_cast<std::size_t>(n_)) return false;
  for (int i = 1; i <= n_; ++i) {
    // (1) positive netflow forces a 1 in the row
    if (a[i - 1] > 0 && !row_nonzero(i)) return false;
    // (2) an off-diagonal 1 at (i, j) forces a 1 in row j
    for (int j = i + 1; j <= n_; ++j) {
      if (get(i, j) && !row_nonzero(j)) return false;
    }
    // (3) zero netflow and an empty column above force an empty row
    if (a[i - 1] == 0 && !column_has_one_above(i) && row_nonzero(i)) {
      return false;
    }
  }
  return true;
}

bool TeslerTableau::leq(const TeslerTableau& other) const {
  if (other.n_ != n_) return false;
  for (int i = 0; i < n_; ++i) {
    if (rows_[i] & ~other.rows_[i]) return false;
  }
  return true;
}

std::vector<std::pair<int, int>> TeslerTableau::cells() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= n_; ++i) {
    for (int j = i; j <= n_; ++j) {
      if (get(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

}  // namespace flowcat

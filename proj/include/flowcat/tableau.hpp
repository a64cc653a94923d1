#ifndef FLOWCAT_TABLEAU_HPP
#define FLOWCAT_TABLEAU_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace flowcat {

// (0,1)-filling of the shifted staircase {(i,j) : 1 <= i <= j <= n}. Row i
// is stored as a bitmask over columns (bit j-1 for column j).
class TeslerTableau {
 public:
  static constexpr int max_size = 30;

  explicit TeslerTableau(int n);
  // Builds from the list of cells holding a 1.
  static TeslerTableau from_cells(int n,
                                  std::span<const std::pair<int, int>> ones);

  int size() const { return n_; }
  bool get(int i, int j) const;
  void set(int i, int j, bool value);

  std::uint32_t row_mask(int i) const { return rows_[i - 1]; }
  bool row_nonzero(int i) const { return rows_[i - 1] != 0; }
  // Whether some T(k, j) with k < j is 1.
  bool column_has_one_above(int j) const;

  int ones() const;
  int nonzero_rows() const;
  // number of 1s minus number of nonzero rows
  int dimension() const { return ones() - nonzero_rows(); }

  // Checks the three support conditions against the netflow prefix a.
  bool is_valid_for(std::span<const std::int64_t> a) const;

  // Entrywise comparison T1 <= T2.
  bool leq(const TeslerTableau& other) const;

  std::vector<std::pair<int, int>> cells() const;

  friend bool operator==(const TeslerTableau&, const TeslerTableau&) = default;
  friend auto operator<=>(const TeslerTableau&, const TeslerTableau&) = default;

 private:
  int n_;
  std::vector<std::uint32_t> rows_;
};

}  // namespace flowcat

#endif

#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>

#include "flowcat/ctengine.hpp"
#include "flowcat/errors.hpp"
#include "flowcat/matrix_grid.hpp"

namespace flowcat {

namespace {

using Hooks = std::vector<std::optional<std::int64_t>>;

}  // namespace

PhiReport verify_phi_bijection(int n, const std::vector<std::int64_t>& a_vec) {
  if (n < 2) throw InvalidInput("verify_phi_bijection needs n >= 2");
  if (a_vec.size() != static_cast<std::size_t>(n)) {
    throw InvalidInput("a_vec must have length n");
  }
  const std::int64_t a =
      std::accumulate(a_vec.begin(), a_vec.end(), std::int64_t{0});
  const std::int64_t range = std::int64_t{n} * (n - 1) / 2 - a;
  PhiReport report;
  report.range = range;
  if (range < 0) return report;

  const std::size_t cap = enumeration_cap();
  const int r = n - 2;
  const std::int64_t a_pen = a_vec[n - 2];  // a_{n-1}
  const std::int64_t a_last = a_vec[n - 1];  // a_n

  // Y and the column-(n-1) sums of its members.
  std::set<MatrixGrid> y_set;
  {
    Hooks hooks;
    for (int i = 0; i < r; ++i) hooks.push_back(-a_vec[i]);
    for_each_umat_with_hooks(
        r, n, hooks, [&](const MatrixGrid& b) { y_set.insert(b); }, cap);
  }
  report.y_count = y_set.size();

  auto in_y = [&](const MatrixGrid& b) {
    if (!b.is_umat() || b.rows() != r || b.cols() != n) return false;
    for (int i = 1; i <= r; ++i) {
      if (b.hook_sum(i) != -a_vec[i - 1]) return false;
    }
    return true;
  };

  // Image (B, t) -> whether it came from X (true) or X' (false).
  std::map<std::pair<MatrixGrid, std::int64_t>, bool> image;
  auto record = [&](MatrixGrid b, std::int64_t t, std::int64_t weight_index,
                    bool from_x) {
    if (t < 0 || t > range || !in_y(b)) report.well_defined = false;
    if (weight_index != t && weight_index != range - t) {
      report.well_defined = false;
    }
    auto [it, inserted] = image.emplace(std::pair{std::move(b), t}, from_x);
    if (!inserted) report.injective = false;
  };

  for (std::int64_t t = 0; t <= range; ++t) {
    for (int variant = 0; variant < 2; ++variant) {
      const bool x_side = variant == 0;
      Hooks hooks;
      for (int i = 0; i < r; ++i) hooks.push_back(-a_vec[i]);
      hooks.push_back((x_side ? -a_pen : -a_last) - t);
      hooks.push_back(std::nullopt);
      for_each_umat_with_hooks(
          n, n, hooks,
          [&](const MatrixGrid& m) {
            const std::int64_t h = m.hook_sum(n - 1);
            if (x_side) {
              ++report.x_count;
              const std::int64_t tt = -a_pen - h;
              record(m.top_rows(r), tt, tt, true);
            } else {
              ++report.x_prime_count;
              const std::int64_t s = -a_last - h;
              record(m.top_rows(r).with_columns_swapped(n - 1, n), range - s,
                     s, false);
            }
          },
          cap);
    }
  }

  if (image.size() != y_set.size() * static_cast<std::size_t>(range + 1)) {
    report.surjective = false;
  }
  for (const MatrixGrid& b : y_set) {
    const std::int64_t c = r > 0 ? b.column_sum(n - 1) : 0;
    for (std::int64_t t = 0; t <= range; ++t) {
      const bool ineq1 = c + (n - 2) - a_pen - t >= 0;
      const bool ineq3 = c + (n - 1) - a_pen - t <= 0;
      if (ineq1 == ineq3) report.dichotomy = false;
      auto it = image.find({b, t});
      if (it == image.end()) {
        report.surjective = false;
      } else if (it->second != ineq1) {
        report.dichotomy = false;
      }
    }
  }
  return report;
}

namespace {

using Key = std::pair<std::int64_t, std::vector<std::int64_t>>;

GradedSeries multiply(const GradedSeries& lhs, const GradedSeries& rhs,
                      std::int64_t max_weight) {
  GradedSeries out;
  for (const auto& [k1, c1] : lhs) {
    for (const auto& [k2, c2] : rhs) {
      const std::int64_t w = k1.first + k2.first;
      if (w > max_weight) continue;
      std::vector<std::int64_t> e = k1.second;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += k2.second[i];
      out[{w, std::move(e)}] += c1 * c2;
    }
  }
  return out;
}

}  // namespace

GradedSeries expand_by_series(int n, std::int64_t b, std::int64_t m,
                              std::int64_t max_weight) {
  if (n < 1 || b < 0 || m < 0 || max_weight < 0) {
    throw InvalidInput("expand_by_series: bad parameters");
  }
  GradedSeries acc;
  acc[{0, std::vector<std::int64_t>(n, 0)}] = 1;
  // (1 - x_i)^{-1}, applied b times per variable.
  for (int i = 0; i < n; ++i) {
    for (std::int64_t rep = 0; rep < b; ++rep) {
      GradedSeries factor;
      for (std::int64_t k = 0; k <= max_weight; ++k) {
        std::vector<std::int64_t> e(n, 0);
        e[i] = k;
        factor[{k, std::move(e)}] = 1;
      }
      acc = multiply(acc, factor, max_weight);
    }
  }
  // (x_j - x_i)^{-1} = x_j^{-1} sum_k x_i^k x_j^{-k}, applied m times.
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (std::int64_t rep = 0; rep < m; ++rep) {
        GradedSeries factor;
        for (std::int64_t k = 0; k <= max_weight; ++k) {
          std::vector<std::int64_t> e(n, 0);
          e[i] = k;
          e[j] = -k - 1;
          factor[{k, std::move(e)}] = 1;
        }
        acc = multiply(acc, factor, max_weight);
      }
    }
  }
  return acc;
}

GradedSeries expand_by_matrices(int n, std::int64_t b, std::int64_t m,
                                std::int64_t max_weight) {
  if (n < 1 || b < 0 || m < 0 || max_weight < 0) {
    throw InvalidInput("expand_by_matrices: bad parameters");
  }
  std::vector<MatrixGrid> umats(m, MatrixGrid::umat(n, n));
  MatrixGrid rows(n, static_cast<int>(b));

  // Free cells: strictly upper cells of every umat copy, then all of B.
  struct Cell {
    int matrix;  // -1 for B
    int i;
    int j;
  };
  std::vector<Cell> cells;
  for (int l = 0; l < m; ++l) {
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) cells.push_back({l, i, j});
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= b; ++j) cells.push_back({-1, i, j});
  }

  GradedSeries out;
  const std::size_t cap = enumeration_cap();
  std::size_t visited = 0;
  auto emit = [&](std::int64_t weight) {
    if (++visited > cap) {
      throw LimitExceeded("matrix expansion exceeded the cell cap");
    }
    std::vector<std::int64_t> e(n, 0);
    for (int k = 1; k <= n; ++k) {
      for (const MatrixGrid& a : umats) e[k - 1] += a.hook_sum(k);
      e[k - 1] += rows.row_sum(k);
    }
    out[{weight, std::move(e)}] += 1;
  };
  auto cell_ref = [&](const Cell& c) -> std::int64_t& {
    return c.matrix < 0 ? rows.at(c.i, c.j) : umats[c.matrix].at(c.i, c.j);
  };
  std::function<void(std::size_t, std::int64_t)> walk =
      [&](std::size_t idx, std::int64_t used) {
        if (idx == cells.size()) {
          emit(used);
          return;
        }
        std::int64_t& slot = cell_ref(cells[idx]);
        for (std::int64_t v = 0; used + v <= max_weight; ++v) {
          slot = v;
          walk(idx + 1, used + v);
        }
        slot = 0;
      };
  walk(0, 0);
  return out;
}

}  // namespace flowcat

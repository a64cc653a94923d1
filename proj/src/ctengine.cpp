#include "flowcat/ctengine.hpp"

#include <numeric>
#include <unordered_map>

#include <boost/container_hash/hash.hpp>

#include "flowcat/compositions.hpp"
#include "flowcat/errors.hpp"

namespace flowcat {

void CTIntegrand::validate() const {
  if (n_vars < 0) throw InvalidInput("integrand needs n_vars >= 0");
  const auto n = static_cast<std::size_t>(n_vars);
  if (x_pole.size() != n || one_minus_pole.size() != n) {
    throw InvalidInput("pole vectors must have length n_vars");
  }
  for (std::int64_t b : one_minus_pole) {
    if (b < 0) throw InvalidInput("(1 - x_i) pole exponents must be >= 0");
  }
  if (vandermonde_power < 0) {
    throw InvalidInput("vandermonde power must be >= 0");
  }
  for (const Monomial& mono : numerator) {
    if (mono.exponents.size() != n) {
      throw InvalidInput("numerator exponent vectors must have length n_vars");
    }
  }
}

namespace {

using Columns = std::vector<std::int64_t>;

struct ColumnsHash {
  std::size_t operator()(const Columns& c) const {
    return boost::hash_range(c.begin(), c.end());
  }
};

using ColumnMap = std::unordered_map<Columns, BigInt, ColumnsHash>;

class WeightTable {
 public:
  // Number of ways to write c as an ordered sum of `parts` nonnegative terms.
  const BigInt& get(std::int64_t c, std::int64_t parts) {
    auto& row = cache_[parts];
    while (static_cast<std::int64_t>(row.size()) <= c) {
      const auto k = static_cast<std::int64_t>(row.size());
      row.push_back(binomial(k + parts - 1, parts - 1));
    }
    return row[c];
  }

 private:
  std::unordered_map<std::int64_t, std::vector<BigInt>> cache_;
};

// Number of matrix tuples whose exponent totals cancel x^{-shift} exactly,
// where shift[k] = x_pole[k] - e[k] for the numerator monomial x^e.
BigInt count_cancelling_tuples(const std::vector<std::int64_t>& shift,
                               const std::vector<std::int64_t>& row_parts,
                               std::int64_t m, WeightTable& weights) {
  const int n = static_cast<int>(shift.size());
  // Slot layout of a row: cells (k, j) for j > k, then the (1 - x_k) row.
  // Column index n is used as the scratch "remaining" counter.
  ColumnMap states;
  states.emplace(Columns(n + 1, 0), BigInt(1));
  for (int k = 0; k < n; ++k) {
    struct Slot {
      int column;            // -1 for the (1 - x_k) row
      std::int64_t parts;
    };
    std::vector<Slot> slots;
    if (m > 0) {
      for (int j = k + 1; j < n; ++j) slots.push_back({j, m});
    }
    if (row_parts[k] > 0) slots.push_back({-1, row_parts[k]});

    ColumnMap current;
    for (auto& [cols, count] : states) {
      // Each of the m umat matrices contributes its diagonal entry k to
      // column k, so the row must carry m*k on top of what sits above.
      const std::int64_t total = shift[k] + m * k + cols[k];
      if (total < 0) continue;
      Columns c = cols;
      c[k] = 0;
      c[n] = total;
      current[std::move(c)] += count;
    }
    for (std::size_t s = 0; s < slots.size(); ++s) {
      const bool last = s + 1 == slots.size();
      ColumnMap next;
      for (const auto& [cols, count] : current) {
        const std::int64_t left = cols[n];
        for (std::int64_t c = last ? left : 0; c <= left; ++c) {
          Columns nc = cols;
          nc[n] = left - c;
          if (slots[s].column >= 0) nc[slots[s].column] += c;
          next[std::move(nc)] += count * weights.get(c, slots[s].parts);
        }
      }
      current = std::move(next);
    }
    states.clear();
    for (auto& [cols, count] : current) {
      if (cols[n] != 0) continue;
      states[cols] += count;
    }
    if (states.empty()) return 0;
  }
  BigInt total = 0;
  for (const auto& [cols, count] : states) total += count;
  return total;
}

std::int64_t choose2(std::int64_t n) { return n * (n - 1) / 2; }

}  // namespace

BigInt constant_term(const CTIntegrand& integrand) {
  integrand.validate();
  // Merge monomials with equal exponents first.
  std::map<std::vector<std::int64_t>, BigInt> merged;
  for (const Monomial& mono : integrand.numerator) {
    merged[mono.exponents] += mono.coefficient;
  }
  WeightTable weights;
  BigInt result = 0;
  std::vector<std::int64_t> shift(integrand.n_vars);
  for (const auto& [exps, coeff] : merged) {
    if (coeff == 0) continue;
    for (int k = 0; k < integrand.n_vars; ++k) {
      shift[k] = integrand.x_pole[k] - exps[k];
    }
    BigInt count = count_cancelling_tuples(shift, integrand.one_minus_pole,
                                           integrand.vandermonde_power, weights);
    if (count != 0) result += coeff * count;
  }
  return result;
}

BigInt catalan_polytope_ct(int n) {
  if (n < 2) throw InvalidInput("catalan_polytope_ct needs n >= 2");
  const std::int64_t power = choose2(n);
  CTIntegrand f;
  f.n_vars = n;
  f.x_pole.assign(n, 0);
  f.one_minus_pole.assign(n, 0);
  f.vandermonde_power = 1;
  for (std::int64_t t = 0; t <= power; ++t) {
    Monomial mono{binomial(power, t), std::vector<std::int64_t>(n, 0)};
    mono.exponents[n - 2] = t;
    mono.exponents[n - 1] = power - t;
    f.numerator.push_back(std::move(mono));
  }
  return constant_term(f);
}

Rational morris_ct(int n, std::int64_t a, std::int64_t b, std::int64_t m) {
  if (n < 0 || a < 0 || b < 0 || m < 0) {
    throw InvalidInput("morris_ct parameters must be nonnegative");
  }
  CTIntegrand f;
  f.n_vars = n;
  f.numerator.push_back({BigInt(1), std::vector<std::int64_t>(n, 0)});
  f.x_pole.assign(n, a);
  f.one_minus_pole.assign(n, b);
  f.vandermonde_power = m;
  return Rational(constant_term(f));
}

BigInt tesler_ct(int n, std::int64_t a, std::int64_t b) {
  if (n < 2) throw InvalidInput("tesler_ct needs n >= 2");
  if (a < 0 || b < 0) throw InvalidInput("tesler_ct needs a, b >= 0");
  const std::int64_t power = a * choose2(n) + n * (b - 1);
  if (power < 0) {
    throw InvalidInput("tesler_ct numerator exponent a*C(n,2) + n(b-1) is "
                       "negative");
  }
  CTIntegrand f;
  f.n_vars = n;
  f.x_pole.assign(n, b - 1);
  f.one_minus_pole.assign(n, 0);
  f.vandermonde_power = a;
  for_each_composition(power, n, {}, [&](const auto& parts) {
    f.numerator.push_back({multinomial(parts), parts});
  });
  return constant_term(f);
}

LemmaSides lemma_gen_sides(int n, const std::vector<std::int64_t>& a_vec) {
  if (n < 2) throw InvalidInput("lemma_gen_sides needs n >= 2");
  if (a_vec.size() != static_cast<std::size_t>(n)) {
    throw InvalidInput("a_vec must have length n");
  }
  const std::int64_t a =
      std::accumulate(a_vec.begin(), a_vec.end(), std::int64_t{0});
  const std::int64_t power = choose2(n) - a;
  if (power < 0) return {0, 0};

  CTIntegrand lhs;
  lhs.n_vars = n;
  lhs.x_pole.assign(n, 0);
  lhs.one_minus_pole.assign(n, 0);
  lhs.vandermonde_power = 1;
  for (std::int64_t t = 0; t <= power; ++t) {
    for (int swap = 0; swap < 2; ++swap) {
      std::vector<std::int64_t> e(a_vec.begin(), a_vec.end());
      const std::int64_t hi = swap ? a_vec[n - 1] : a_vec[n - 2];
      const std::int64_t lo = swap ? a_vec[n - 2] : a_vec[n - 1];
      e[n - 2] = t + hi;
      e[n - 1] = power - t + lo;
      lhs.numerator.push_back({binomial(power, t), std::move(e)});
    }
  }

  const int r = n - 2;
  CTIntegrand rhs;
  rhs.n_vars = r;
  rhs.numerator.push_back(
      {BigInt(1), std::vector<std::int64_t>(a_vec.begin(), a_vec.begin() + r)});
  rhs.x_pole.assign(r, 0);
  rhs.one_minus_pole.assign(r, 2);
  rhs.vandermonde_power = 1;

  return {constant_term(lhs),
          pow_int(BigInt(2), static_cast<std::uint64_t>(power)) *
              constant_term(rhs)};
}

}  // namespace flowcat

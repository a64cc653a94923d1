#include "flowcat/kostant.hpp"

#include <numeric>
#include <unordered_map>
#include <vector>

#include <boost/container_hash/hash.hpp>

#include "flowcat/errors.hpp"

namespace flowcat {

namespace {

using State = std::vector<std::int64_t>;

struct StateHash {
  std::size_t operator()(const State& s) const {
    return boost::hash_range(s.begin(), s.end());
  }
};

using StateMap = std::unordered_map<State, BigInt, StateHash>;

// binom(c + m - 1, m - 1), cached per multiplicity.
class SlotWeights {
 public:
  const BigInt& get(std::int64_t c, std::int64_t m) {
    auto& row = cache_[m];
    while (static_cast<std::int64_t>(row.size()) <= c) {
      const auto k = static_cast<std::int64_t>(row.size());
      row.push_back(binomial(k + m - 1, m - 1));
    }
    return row[c];
  }

 private:
  std::unordered_map<std::int64_t, std::vector<BigInt>> cache_;
};

}  // namespace

BigInt kostant(const Multigraph& graph, std::span<const std::int64_t> b) {
  const int v = graph.vertex_count();
  if (b.size() != static_cast<std::size_t>(v)) {
    throw InvalidInput("kostant: vector length " + std::to_string(b.size()) +
                       " does not match vertex count " + std::to_string(v));
  }
  if (std::accumulate(b.begin(), b.end(), std::int64_t{0}) != 0) return 0;

  std::vector<std::vector<Edge>> out(v);
  for (const Edge& e : graph.edges()) out[e.source - 1].push_back(e);

  SlotWeights weights;
  // state[i] holds the inflow already routed into vertex i (for i > current)
  // and, while vertex i is being processed, its undistributed supply.
  StateMap states;
  states.emplace(State(v, 0), BigInt(1));

  for (int i = 0; i < v; ++i) {
    StateMap current;
    for (auto& [state, count] : states) {
      const std::int64_t supply = b[i] + state[i];
      if (supply < 0) continue;
      State s = state;
      s[i] = supply;
      current[std::move(s)] += count;
    }
    for (std::size_t k = 0; k < out[i].size(); ++k) {
      const Edge& e = out[i][k];
      const bool last = k + 1 == out[i].size();
      const int target = e.target - 1;
      StateMap next;
      for (const auto& [state, count] : current) {
        const std::int64_t supply = state[i];
        const std::int64_t lo = last ? supply : 0;
        for (std::int64_t c = lo; c <= supply; ++c) {
          State s = state;
          s[i] = supply - c;
          s[target] += c;
          next[std::move(s)] += count * weights.get(c, e.multiplicity);
        }
      }
      current = std::move(next);
    }
    states.clear();
    for (auto& [state, count] : current) {
      if (state[i] != 0) continue;
      states[state] += count;
    }
    if (states.empty()) return 0;
  }

  BigInt total = 0;
  for (const auto& [state, count] : states) total += count;
  return total;
}

}  // namespace flowcat

// Acceptance sweep: one PASS/FAIL line per criterion. With --criterion N
// only that criterion runs; the exit status is nonzero if any line fails.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "flowcat/closedform.hpp"
#include "flowcat/ctengine.hpp"
#include "flowcat/ehrhart.hpp"
#include "flowcat/faces.hpp"
#include "flowcat/graph.hpp"
#include "flowcat/kostant.hpp"
#include "flowcat/lidskii.hpp"
#include "flowcat/matrix_grid.hpp"
#include "flowcat/suites.hpp"

using namespace flowcat;
using Vec = std::vector<std::int64_t>;

namespace {

struct Outcome {
  bool ok = true;
  std::vector<std::string> failures;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      failures.push_back(what);
    }
  }
};

Vec head_netflow(int n, Vec head) {
  head.resize(n, 0);
  return head;
}

BigInt integer_of(const Rational& q, Outcome& out, const std::string& what) {
  BigInt z;
  out.expect(as_integer(q, z) && z > 0, what + " is not a positive integer");
  return z;
}

void absorb_suite(Outcome& out, const std::string& name, int max_n) {
  const SuiteReport rep = run_suite(name, max_n);
  for (const auto& row : rep.rows) {
    if (row.ok) continue;
    std::string values;
    for (const auto& v : row.values) values += " " + v;
    out.expect(false, row.label + ":" + values);
  }
}

Outcome criterion1() {
  Outcome out;
  const std::vector<int> expected{1, 4, 64, 5120};
  for (int n = 2; n <= 5; ++n) {
    const auto net = NetflowVector::from_prefix(head_netflow(n, {1, 1}));
    const BigInt lid = lidskii_volume(complete_graph(n + 1), net);
    const std::string tag = "n=" + std::to_string(n);
    out.expect(lid == catalan_polytope_ct(n), tag + " lidskii != ct");
    out.expect(lid == thm1_volume(n), tag + " lidskii != closed form");
    out.expect(lid == expected[n - 2], tag + " value " + lid.str());
  }
  return out;
}

Outcome criterion2() {
  Outcome out;
  const std::vector<int> expected{1, 2, 10, 140, 5880};
  for (int n = 3; n <= 7; ++n) {
    const BigInt ps = ps_volume(complete_graph(n + 1));
    const std::string tag = "n=" + std::to_string(n);
    out.expect(ps == cry_product(n), tag + " ps != catalan product");
    out.expect(ps == expected[n - 3], tag + " value " + ps.str());
  }
  return out;
}

Outcome criterion3() {
  Outcome out;
  for (int n = 2; n <= 4; ++n) {
    for (int a = 1; a <= 2; ++a) {
      for (int b = 1; b <= 2; ++b) {
        for (int m = 1; m <= 2; ++m) {
          const std::string tag = "(n,a,b,m)=(" + std::to_string(n) + "," +
                                  std::to_string(a) + "," + std::to_string(b) +
                                  "," + std::to_string(m) + ")";
          const auto net = NetflowVector::from_prefix(head_netflow(n, {1}));
          const BigInt lid = lidskii_volume(morris_graph(n + 1, a, b, m), net);
          const BigInt closed = integer_of(thm2_volume(n, a, b, m), out, tag);
          out.expect(lid == closed, tag + " " + lid.str() + " != " + closed.str());
        }
      }
    }
  }
  return out;
}

Outcome criterion4() {
  Outcome out;
  for (int n = 2; n <= 3; ++n) {
    for (int a = 1; a <= 2; ++a) {
      for (int b = 1; b <= 2; ++b) {
        const std::string tag = "(n,a,b)=(" + std::to_string(n) + "," +
                                std::to_string(a) + "," + std::to_string(b) + ")";
        const auto net = NetflowVector::from_prefix(Vec(n, 1));
        const BigInt lid = lidskii_volume(tesler_graph(n + 1, a, b), net);
        out.expect(lid == tesler_ct(n, a, b), tag + " lidskii != ct");
        out.expect(lid == integer_of(thm3_volume(n, a, b), out, tag),
                   tag + " lidskii != closed form");
        if (a == 1 && b == 1) {
          out.expect(lid == tesler_unit_volume(n), tag + " unit volume");
          out.expect(lid == (n == 2 ? 1 : 4), tag + " value " + lid.str());
        }
      }
    }
  }
  return out;
}

Outcome criterion5() {
  Outcome out;
  for (int n = 0; n <= 4; ++n) {
    for (int a = 0; a <= 2; ++a) {
      for (int b = 1; b <= 3; ++b) {
        for (int m = 1; m <= 2; ++m) {
          out.expect(morris_ct(n, a, b, m) == morris_closed(n, a, b, m),
                     "(n,a,b,m)=(" + std::to_string(n) + "," + std::to_string(a) +
                         "," + std::to_string(b) + "," + std::to_string(m) + ")");
        }
      }
    }
  }
  return out;
}

Outcome criterion6() {
  Outcome out;
  absorb_suite(out, "lemma-gen", 5);
  return out;
}

Outcome criterion7() {
  Outcome out;
  absorb_suite(out, "lemma-expand", 3);
  MatrixGrid a(4, 4);
  const std::int64_t values[4][4] = {
      {4, 2, 5, 7}, {0, 1, 2, 3}, {0, 0, 1, 8}, {0, 0, 0, 3}};
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) a.at(i, j) = values[i - 1][j - 1];
  out.expect(a.row_sum(2) == 6, "r_2 = " + std::to_string(a.row_sum(2)) + ", want 6");
  out.expect(a.hook_sum(2) == 3,
             "h_2 = " + std::to_string(a.hook_sum(2)) + ", want 3");
  out.expect(a.row_sum(3) == 9, "r_3 = " + std::to_string(a.row_sum(3)) + ", want 9");
  out.expect(a.hook_sum(3) == 0,
             "h_3 = " + std::to_string(a.hook_sum(3)) + ", want 0");
  return out;
}

Outcome criterion8() {
  Outcome out;
  for (int r = 0; r <= 4; ++r) {
    for (int s = 0; r + s <= 4; ++s) {
      Vec a(r + s + 2, 0);
      a[0] = a[r + 1] = 1;
      const auto count = enumerate_tableaux(a, 0).size();
      out.expect(count == vertex_count_formula(r, s),
                 "(r,s)=(" + std::to_string(r) + "," + std::to_string(s) +
                     ") count " + std::to_string(count));
    }
  }
  for (int n = 2; n <= 6; ++n) {
    const auto count = enumerate_tableaux(head_netflow(n, {1, 1}), 0).size();
    out.expect(count == catalan_polytope_vertices(n),
               "catalan n=" + std::to_string(n) + " count " + std::to_string(count));
  }
  absorb_suite(out, "faces", 6);
  return out;
}

Outcome criterion9() {
  Outcome out;
  absorb_suite(out, "lidskii-vs-ehrhart", 4);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"catalan polytope volume: lidskii = ct = closed form", criterion1},
      {"CRY volumes: ps = catalan product", criterion2},
      {"K^{a,b,m} volumes: lidskii = gamma product", criterion3},
      {"K^{a,b} volumes: lidskii = ct = gamma product", criterion4},
      {"Morris identity: ct = closed form", criterion5},
      {"two-variable reduction and phi bijection", criterion6},
      {"matrix expansion and worked hook values", criterion7},
      {"vertex counts", criterion8},
      {"lidskii vs ehrhart and kostant", criterion9},
  };
  int only = 0;
  if (argc == 3 && std::string(argv[1]) == "--criterion") only = std::atoi(argv[2]);
  bool all_ok = true;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    if (only != 0 && only != static_cast<int>(k + 1)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome result;
    try {
      result = criteria[k].second();
    } catch (const std::exception& ex) {
      result.expect(false, std::string("exception: ") + ex.what());
    }
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start).count();
    all_ok = all_ok && result.ok;
    std::cout << (result.ok ? "PASS" : "FAIL") << " criterion " << k + 1 << ": "
              << criteria[k].first << " (" << secs << " s)\n";
    for (const auto& f : result.failures) std::cout << "    " << f << "\n";
  }
  return all_ok ? EXIT_SUCCESS : EXIT_FAILURE;
}

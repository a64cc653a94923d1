#include "flowcat/suites.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "flowcat/closedform.hpp"
#include "flowcat/ctengine.hpp"
#include "flowcat/ehrhart.hpp"
#include "flowcat/errors.hpp"
#include "flowcat/faces.hpp"
#include "flowcat/graph.hpp"
#include "flowcat/kostant.hpp"
#include "flowcat/lidskii.hpp"

namespace flowcat {

bool SuiteReport::ok() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const CheckRow& r) { return r.ok; });
}

namespace {

std::vector<std::int64_t> catalan_netflow(int n) {
  std::vector<std::int64_t> a(n, 0);
  a[0] = 1;
  if (n >= 2) a[1] = 1;
  return a;
}

std::vector<std::int64_t> unit_source(int n) {
  std::vector<std::int64_t> a(n, 0);
  a[0] = 1;
  return a;
}

std::string tag(const std::string& name, std::initializer_list<std::int64_t> p) {
  std::string out = name + "(";
  bool first = true;
  for (std::int64_t x : p) {
    if (!first) out += ",";
    out += std::to_string(x);
    first = false;
  }
  return out + ")";
}

CheckRow agree(std::string label, std::vector<std::string> values) {
  CheckRow row{std::move(label), std::move(values), true};
  for (const auto& v : row.values) row.ok = row.ok && v == row.values.front();
  return row;
}

std::string rational_integer(const Rational& q) {
  // Volume formulas must land on integers; a fraction shows as p/q and then
  // fails the agreement check against the integer routes.
  return to_decimal(q);
}

void thm1(SuiteReport& rep, int max_n) {
  for (int n = 2; n <= max_n; ++n) {
    const auto a = NetflowVector::from_prefix(catalan_netflow(n));
    rep.rows.push_back(agree(
        tag("thm1", {n}),
        {lidskii_volume(complete_graph(n + 1), a).str(),
         catalan_polytope_ct(n).str(), thm1_volume(n).str()}));
  }
}

void cry(SuiteReport& rep, int max_n) {
  for (int n = 2; n <= max_n; ++n) {
    const auto g = complete_graph(n + 1);
    const auto a = NetflowVector::from_prefix(unit_source(n));
    rep.rows.push_back(agree(
        tag("cry", {n}),
        {ps_volume(g).str(), lidskii_volume(g, a).str(),
         cry_product(n).str(), rational_integer(morris_closed(n - 2, 0, 2, 1))}));
  }
}

void thm2(SuiteReport& rep, int max_n) {
  for (int n = 2; n <= max_n; ++n) {
    for (int a = 1; a <= 2; ++a) {
      for (int b = 1; b <= 2; ++b) {
        for (int m = 1; m <= 2; ++m) {
          const auto g = morris_graph(n + 1, a, b, m);
          const auto net = NetflowVector::from_prefix(unit_source(n));
          rep.rows.push_back(agree(
              tag("thm2", {n, a, b, m}),
              {lidskii_volume(g, net).str(), ps_volume(g).str(),
               rational_integer(morris_ct(n - 1, a - 1, b, m)),
               rational_integer(thm2_volume(n, a, b, m))}));
        }
      }
    }
  }
}

void thm3(SuiteReport& rep, int max_n) {
  for (int n = 2; n <= max_n; ++n) {
    for (int a = 1; a <= 2; ++a) {
      for (int b = 1; b <= 2; ++b) {
        const auto g = tesler_graph(n + 1, a, b);
        const auto net =
            NetflowVector::from_prefix(std::vector<std::int64_t>(n, 1));
        std::vector<std::string> values{
            lidskii_volume(g, net).str(), tesler_ct(n, a, b).str(),
            rational_integer(thm3_volume(n, a, b))};
        if (a == 1 && b == 1) values.push_back(tesler_unit_volume(n).str());
        rep.rows.push_back(agree(tag("thm3", {n, a, b}), std::move(values)));
      }
    }
  }
}

void morris(SuiteReport& rep, int max_n) {
  for (int n = 1; n <= max_n; ++n) {
    for (int a = 0; a <= 2; ++a) {
      for (int b = 1; b <= 3; ++b) {
        for (int m = 1; m <= 2; ++m) {
          rep.rows.push_back(agree(
              tag("morris", {n, a, b, m}),
              {to_decimal(morris_ct(n, a, b, m)),
               to_decimal(morris_closed(n, a, b, m))}));
        }
      }
    }
  }
}

void lemma_gen(SuiteReport& rep, int max_n) {
  for (int n = 2; n <= max_n; ++n) {
    std::vector<std::int64_t> a(n, -1);
    const std::int64_t top = std::int64_t{n} * (n - 1) / 2;
    while (true) {
      std::int64_t sum = 0;
      for (auto x : a) sum += x;
      if (top - sum >= 0) {
        const auto sides = lemma_gen_sides(n, a);
        const auto phi = verify_phi_bijection(n, a);
        std::string label = "lemma-gen(n=" + std::to_string(n) + ";a=";
        for (std::size_t i = 0; i < a.size(); ++i) {
          label += (i ? "," : "") + std::to_string(a[i]);
        }
        label += ")";
        CheckRow row = agree(label, {sides.lhs.str(), sides.rhs.str()});
        const std::size_t expected_size =
            phi.y_count * static_cast<std::size_t>(phi.range + 1);
        row.values.push_back(phi.ok() ? "phi:bijective" : "phi:FAILED");
        row.ok = row.ok && phi.ok() &&
                 phi.x_count + phi.x_prime_count == expected_size;
        rep.rows.push_back(std::move(row));
      }
      int k = 0;
      while (k < n && a[k] == 2) a[k++] = -1;
      if (k == n) break;
      ++a[k];
    }
  }
}

void lemma_expand(SuiteReport& rep, int max_n) {
  constexpr std::int64_t max_weight = 5;
  for (int n = 1; n <= max_n; ++n) {
    for (int b = 0; b <= 2; ++b) {
      for (int m = 0; m <= 2; ++m) {
        const auto series = expand_by_series(n, b, m, max_weight);
        const auto matrices = expand_by_matrices(n, b, m, max_weight);
        CheckRow row{tag("lemma-expand", {n, b, m}),
                     {std::to_string(series.size()) + " terms",
                      std::to_string(matrices.size()) + " terms"},
                     series == matrices};
        rep.rows.push_back(std::move(row));
      }
    }
  }
}

void faces(SuiteReport& rep, int max_n) {
  auto vertices = [](const std::vector<std::int64_t>& a) {
    return enumerate_tableaux(a, 0, TeslerTableau::max_size).size();
  };
  for (int r = 0; r + 2 <= max_n; ++r) {
    for (int s = 0; r + s + 2 <= max_n; ++s) {
      std::vector<std::int64_t> a(r + s + 2, 0);
      a[0] = 1;
      a[r + 1] = 1;
      rep.rows.push_back(agree(tag("vertices", {r, s}),
                               {std::to_string(vertices(a)),
                                vertex_count_formula(r, s).str()}));
    }
  }
  for (int n = 2; n <= max_n; ++n) {
    rep.rows.push_back(agree(tag("catalan-vertices", {n}),
                             {std::to_string(vertices(catalan_netflow(n))),
                              catalan_polytope_vertices(n).str()}));
  }
  // Direct vertex enumeration is exponential in the edge count; keep n <= 4.
  for (int n = 1; n <= std::min(max_n, 4); ++n) {
    std::vector<std::int64_t> a(n, 0);
    while (true) {
      const auto g = complete_graph(n + 1);
      const auto net = NetflowVector::from_prefix(a);
      std::string label = "acyclic-support(";
      for (std::size_t i = 0; i < a.size(); ++i) {
        label += (i ? "," : "") + std::to_string(a[i]);
      }
      rep.rows.push_back(
          agree(label + ")",
                {std::to_string(vertices(a)),
                 std::to_string(count_vertices_by_acyclic_support(g, net))}));
      int k = 0;
      while (k < n && a[k] == 2) a[k++] = 0;
      if (k == n) break;
      ++a[k];
    }
  }
}

void lidskii_vs_ehrhart(SuiteReport& rep, int max_n) {
  std::vector<std::pair<std::string, std::pair<Multigraph, NetflowVector>>> cases;
  for (int n = 2; n <= max_n; ++n) {
    cases.push_back({tag("complete-catalan", {n}),
                     {complete_graph(n + 1),
                      NetflowVector::from_prefix(catalan_netflow(n))}});
    cases.push_back({tag("complete-cry", {n}),
                     {complete_graph(n + 1),
                      NetflowVector::from_prefix(unit_source(n))}});
    for (int a = 1; a <= 2; ++a) {
      for (int b = 1; b <= 2; ++b) {
        for (int m = 1; m <= 2; ++m) {
          cases.push_back({tag("morris", {n, a, b, m}),
                           {morris_graph(n + 1, a, b, m),
                            NetflowVector::from_prefix(unit_source(n))}});
        }
        cases.push_back(
            {tag("tesler", {n, a, b}),
             {tesler_graph(n + 1, a, b),
              NetflowVector::from_prefix(std::vector<std::int64_t>(n, 1))}});
      }
    }
  }
  for (const auto& [label, input] : cases) {
    const auto& [g, net] = input;
    CheckRow vol = agree(label + ":volume",
                         {lidskii_volume(g, net).str(),
                          ehrhart_polynomial(g, net).normalized_volume().str()});
    CheckRow pts = agree(label + ":points", {lidskii_points(g, net).str(),
                                             kostant(g, net.entries()).str()});
    rep.rows.push_back(std::move(vol));
    rep.rows.push_back(std::move(pts));
  }
}

struct SuiteDef {
  int default_max_n;
  std::function<void(SuiteReport&, int)> run;
};

const std::map<std::string, SuiteDef>& registry() {
  static const std::map<std::string, SuiteDef> suites{
      {"thm1", {5, thm1}},
      {"cry", {7, cry}},
      {"thm2", {4, thm2}},
      {"thm3", {3, thm3}},
      {"morris", {4, morris}},
      {"lemma-gen", {5, lemma_gen}},
      {"lemma-expand", {3, lemma_expand}},
      {"faces", {6, faces}},
      {"lidskii-vs-ehrhart", {4, lidskii_vs_ehrhart}},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, def] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

SuiteReport run_suite(const std::string& name, int max_n) {
  const auto& suites = registry();
  auto it = suites.find(name);
  if (it == suites.end()) {
    throw InvalidInput("unknown suite '" + name + "'");
  }
  SuiteReport report{name, {}};
  it->second.run(report, max_n > 0 ? max_n : it->second.default_max_n);
  return report;
}

}  // namespace flowcat

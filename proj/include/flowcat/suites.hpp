#ifndef FLOWCAT_SUITES_HPP
#define FLOWCAT_SUITES_HPP

#include <string>
#include <vector>

namespace flowcat {

struct CheckRow {
  std::string label;
  std::vector<std::string> values;  // every route's value, all must agree
  bool ok = false;
};

struct SuiteReport {
  std::string name;
  std::vector<CheckRow> rows;

  bool ok() const;
};

// thm1, thm2, thm3, cry, morris, lemma-gen, lemma-expand, faces,
// lidskii-vs-ehrhart
const std::vector<std::string>& suite_names();

// max_n <= 0 selects the suite's default sweep bound. Throws InvalidInput
// for an unknown suite name.
SuiteReport run_suite(const std::string& name, int max_n);

}  // namespace flowcat

#endif

#ifndef GRADECAT_REPORT_HPP
#define GRADECAT_REPORT_HPP

#include <string>
#include <vector>

#include "gradecat/model.hpp"

namespace gradecat {

/* One named pass/fail line of a command report. */
struct Verdict {
  std::string name;
  bool pass = true;
  std::string detail;
};

/* Deterministic command report: no clocks, no environment echoes, so that
 * repeated runs emit identical bytes. */
struct Report {
  std::string command;
  std::vector<Verdict> verdicts;
  Json data = Json::object();  // structured witnesses and outputs

  void add(const std::string& name, bool pass, const std::string& detail = "");
  bool all_pass() const;
  int exit_code() const { return all_pass() ? 0 : 1; }
  std::string text() const;
  Json json() const;
};

}  // namespace gradecat

#endif

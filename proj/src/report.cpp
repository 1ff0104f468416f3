#include "gradecat/report.hpp"

#include <sstream>

namespace gradecat {

void Report::add(const std::string& name, bool pass, const std::string& detail) {
  verdicts.push_back({name, pass, detail});
}

bool Report::all_pass() const {
  for (const Verdict& v : verdicts)
    if (!v.pass) return false;
  return true;
}

std::string Report::text() const {
  std::ostringstream os;
  os << "# " << command << "\n";
  for (const Verdict& v : verdicts) {
    os << (v.pass ? "[PASS] " : "[FAIL] ") << v.name;
    if (!v.detail.empty()) os << ": " << v.detail;
    os << "\n";
  }
  int passed = 0;
  for (const Verdict& v : verdicts)
    if (v.pass) passed++;
  os << "passed " << passed << "/" << verdicts.size() << "\n";
  return os.str();
}

Json Report::json() const {
  Json j = Json::object();
  j["command"] = command;
  Json vs = Json::array();
  for (const Verdict& v : verdicts) {
    Json jv = Json::object();
    jv["name"] = v.name;
    jv["pass"] = v.pass;
    jv["detail"] = v.detail;
    vs.push_back(jv);
  }
  j["verdicts"] = vs;
  j["data"] = data;
  return j;
}

}  // namespace gradecat

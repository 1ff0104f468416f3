#ifndef GRADECAT_CORPUS_HPP
#define GRADECAT_CORPUS_HPP

#include <optional>
#include <string>
#include <vector>

#include "gradecat/morph.hpp"
#include "gradecat/report.hpp"
#include "gradecat/schur.hpp"

namespace gradecat {

/* Built-in example model files.  The bq entry is parameterized by the
 * rational q appearing in its relation coefficients. */
struct CorpusEntry {
  std::string name;
  std::string summary;
  bool needs_q = false;
  Json file;
};
const std::vector<CorpusEntry>& example_corpus();
const CorpusEntry* corpus_entry(const std::string& name);
std::vector<std::string> corpus_names();

/* Expected-result suite of one example; every verdict compares a computed
 * value against the recorded expectation.  For bq a missing q runs all of
 * q in {0, 1, 2}. */
Report run_example(const std::string& name, const std::optional<Rat>& q);

}  // namespace gradecat

#endif

#include "gradecat/presentation.hpp"

#include <sstream>

namespace gradecat {

Word word_reduce(Word w) {
  Word out;
  for (const auto& [g, e] : w) {
    if (e != 1 && e != -1) fail(ErrCode::Schema, "word exponent must be +1 or -1");
    if (!out.empty() && out.back().first == g && out.back().second == -e) out.pop_back();
    else out.emplace_back(g, e);
  }
  return out;
}

Word word_inverse(const Word& w) {
  Word out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.emplace_back(it->first, -it->second);
  return out;
}

Word word_concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return word_reduce(out);
}

std::string GroupPresentation::str() const {
  std::ostringstream os;
  os << "< ";
  for (size_t i = 0; i < generators.size(); ++i) os << (i ? ", " : "") << generators[i];
  os << " | ";
  for (size_t r = 0; r < relators.size(); ++r) {
    if (r) os << ", ";
    if (relators[r].empty()) { os << "1"; continue; }
    size_t i = 0;
    bool first = true;
    while (i < relators[r].size()) {
      size_t j = i;
      while (j < relators[r].size() && relators[r][j] == relators[r][i]) ++j;
      long e = long(j - i) * relators[r][i].second;
      if (!first) os << " ";
      os << generators[relators[r][i].first];
      if (e != 1) os << "^" << e;
      first = false;
      i = j;
    }
  }
  os << " >";
  return os.str();
}

GroupElement Abelianized::project_word(const GroupPresentation& p, const Word& w) const {
  std::vector<Int> expo(p.generators.size(), Int(0));
  for (const auto& [g, e] : w) {
    if (g < 0 || size_t(g) >= p.generators.size())
      fail(ErrCode::UnknownBasisRef, "word references unknown generator");
    expo[g] += e;
  }
  return coker.project(expo);
}

Abelianized abelianize(const GroupPresentation& p) {
  int n = int(p.generators.size());
  IntMat R(n, int(p.relators.size()));
  for (size_t c = 0; c < p.relators.size(); ++c) {
    for (const auto& [g, e] : p.relators[c]) {
      if (g < 0 || g >= n) fail(ErrCode::UnknownBasisRef, "relator references unknown generator");
      R.at(g, int(c)) += e;
    }
  }
  Abelianized a;
  a.coker = cokernel(R, n);
  a.group = a.coker.group;
  return a;
}

}  // namespace gradecat

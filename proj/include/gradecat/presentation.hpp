#ifndef GRADECAT_PRESENTATION_HPP
#define GRADECAT_PRESENTATION_HPP

#include <string>
#include <vector>

#include "gradecat/abelian.hpp"

namespace gradecat {

/* Word in a free group: sequence of (generator index, +1/-1), freely reduced. */
using Word = std::vector<std::pair<int, int>>;

Word word_reduce(Word w);
Word word_inverse(const Word& w);
Word word_concat(const Word& a, const Word& b);  // a then b

/* Finite group presentation < generators | relators >. */
struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;  // freely reduced

  std::string str() const;
};

/* Abelianization in canonical invariant form, together with the projection
 * of words into it (via exponent sums and the Smith form of the relator
 * exponent matrix). */
struct Abelianized {
  AbelianGroup group;
  Cokernel coker;
  GroupElement project_word(const GroupPresentation& p, const Word& w) const;
};
Abelianized abelianize(const GroupPresentation& p);

}  // namespace gradecat

#endif

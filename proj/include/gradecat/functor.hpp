#ifndef GRADECAT_FUNCTOR_HPP
#define GRADECAT_FUNCTOR_HPP

#include <vector>

#include "gradecat/category.hpp"

namespace gradecat {

/* Identity-on-objects k-linear functor between presented categories sharing
 * the same vertex set.  matrices[pair] maps source quotient coordinates to
 * target quotient coordinates (columns = images of source basis elements). */
struct Functor {
  const PresentedCategory* src = nullptr;
  const PresentedCategory* tgt = nullptr;
  std::vector<QMat> matrices;        // per vertex pair, dim_tgt x dim_src
  std::vector<bool> invertible_on;   // per vertex pair

  bool is_isomorphism() const;
  std::vector<Rat> apply(int s, int t, const std::vector<Rat>& v) const;
};

/* Verifies identity preservation and the composition law on all pairs of
 * quotient-basis elements; throws NotFunctorial / DimensionMismatch. */
Functor build_functor(const PresentedCategory& src, const PresentedCategory& tgt,
                      const std::vector<QMat>& matrices);

Functor identity_functor(const PresentedCategory& C);
Functor compose_functor(const Functor& F, const Functor& G);  // F after G
bool functor_equal(const Functor& F, const Functor& G);

}  // namespace gradecat

#endif

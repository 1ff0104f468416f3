#ifndef GRADECAT_SMASH_HPP
#define GRADECAT_SMASH_HPP

#include <string>
#include <vector>

#include "gradecat/grading.hpp"

namespace gradecat {

/* Smash product of a category with a grading by a finite group: objects are
 * (base object, group element); the morphisms from (b,s) to (b',t) are the
 * homogeneous component of degree s - t of hom(b,b').  The projection
 * functor sends (b,s) to b and a morphism to itself. */
struct SmashCategory {
  const PresentedCategory* cat = nullptr;
  const Grading* grading = nullptr;
  std::vector<GroupElement> elems;              // canonical enumeration of the group
  int nobj() const { return cat->nv() * int(elems.size()); }
  int obj(int b, int e) const { return b * int(elems.size()) + e; }
  int obj_base(int o) const { return o / int(elems.size()); }
  int obj_elem(int o) const { return o % int(elems.size()); }
  std::string obj_str(int o) const;

  /* hom-table: per ordered object pair, the base homogeneous basis elements
   * of the matching degree */
  std::vector<std::vector<BasisRef>> hom;
  const std::vector<BasisRef>& hom_at(int o1, int o2) const {
    return hom[size_t(o1) * nobj() + o2];
  }
};

/* The structural group must be finite (InfiniteGroup otherwise). */
SmashCategory build_smash(const PresentedCategory& C, const Grading& X);

/* Star dimension bookkeeping for the projection functor: the star of (b,s)
 * must match the star of b.  Works on the stored table so that corrupted
 * inputs are detectable. */
struct CoveringCheck {
  bool ok = true;
  std::vector<std::string> mismatches;
};
CoveringCheck verify_covering(const SmashCategory& S);

/* Left-multiplication deck transformation by s on the second coordinate. */
struct DeckFunctor {
  const SmashCategory* S = nullptr;
  GroupElement s;
  std::vector<int> obj_map;
};
DeckFunctor deck_functor(const SmashCategory& S, const GroupElement& s);

/* The deck action of the full (finite) group: free off the identity and
 * transitive on each fiber of the projection. */
struct GaloisCheck {
  bool free_action = true;
  bool fiber_transitive = true;
  std::vector<std::string> failures;
};
GaloisCheck galois_check(const SmashCategory& S);

/* Covering morphism H between smash products induced by a grading morphism
 * (mu, J) and a family of trivial-degree connector walks: H(b,s) =
 * (b, mu(s) + h_b) with h_b = -deg_Y(J(v_b)), acting as J on morphisms. */
struct CoveringMorphism {
  const SmashCategory* src = nullptr;
  const SmashCategory* tgt = nullptr;
  GroupHom mu;
  const Functor* J = nullptr;
  std::vector<GroupElement> h;  // per base object
  int map_obj(int o) const;
};
CoveringMorphism covering_morphism(const SmashCategory& SX, const SmashCategory& SY,
                                   const GroupHom& mu, const Functor& J,
                                   const std::vector<Walk>& connectors);

/* The group map lambda with H(s . o) = lambda(s) . H(o), recovered from deck
 * equivariance and checked on all objects (NotEquivariant otherwise); also
 * re-derives it from the normalization of H at the root object and checks
 * the two agree. */
GroupHom lambda_map(const CoveringMorphism& M, int b0);

CoveringMorphism compose_covering(const CoveringMorphism& M2, const CoveringMorphism& M1,
                                  const Functor& J21);

}  // namespace gradecat

#endif

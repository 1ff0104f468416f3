#ifndef GRADECAT_GRADING_HPP
#define GRADECAT_GRADING_HPP

#include <optional>
#include <string>
#include <vector>

#include "gradecat/abelian.hpp"
#include "gradecat/functor.hpp"

namespace gradecat {

/* Reference to one homogeneous basis element of a grading. */
struct BasisRef {
  int src = 0, tgt = 0, idx = 0;
  bool operator==(const BasisRef&) const = default;
  std::string str() const;  // "src->tgt#idx" using vertex indices resolved by caller
};

/* Grading of a presented category by a f.g. abelian group: per hom-space an
 * invertible base change from the quotient basis to a homogeneous basis, and
 * a degree for each homogeneous basis element. */
struct Grading {
  const PresentedCategory* cat = nullptr;
  AbelianGroup group;
  std::vector<QMat> base_change;      // per pair: columns = homogeneous basis in quotient coords
  std::vector<QMat> base_change_inv;
  std::vector<std::vector<GroupElement>> degrees;  // per pair, per homogeneous basis element

  const GroupElement& deg(const BasisRef& r) const;
  int dim(int s, int t) const { return cat->hom(s, t).dim(); }
  /* homogeneous-coordinate vector of a quotient-coordinate vector */
  std::vector<Rat> to_homogeneous(int s, int t, const std::vector<Rat>& qv) const;
  std::vector<Rat> from_homogeneous(int s, int t, const std::vector<Rat>& hv) const;
};

/* Path-degree grading: homogeneous basis = quotient (path) basis, degree of a
 * basis path = sum of its arrow degrees. */
Grading path_basis_grading(const PresentedCategory& C, const AbelianGroup& G,
                           const std::vector<GroupElement>& arrow_degrees);
/* Grading with explicit base-change matrices (identity where omitted). */
Grading make_grading(const PresentedCategory& C, const AbelianGroup& G,
                     const std::vector<std::optional<QMat>>& base_changes,
                     const std::vector<std::vector<GroupElement>>& degrees);
Grading trivial_grading(const PresentedCategory& C);

struct GradingViolation {
  int x = 0, y = 0, z = 0;  // g o f with f: x->y, g: y->z
  int fi = 0, gi = 0;       // homogeneous basis indices (fi = -1 marks an identity-degree fault)
  std::string detail;
};
struct GradingCheck {
  bool ok = true;
  std::vector<GradingViolation> violations;
};
/* Composition compatibility (the composite of degree-s and degree-t elements
 * is supported on degree t+s) and degree-zero homogeneous identities. */
GradingCheck validate_grading(const Grading& X);

/* Walk: chain of homogeneous basis elements traversed forward (+1) or
 * backward (-1), stored first-step-first. */
struct WalkStep {
  BasisRef ref;
  int eps = +1;
  int from() const { return eps > 0 ? ref.src : ref.tgt; }
  int to() const { return eps > 0 ? ref.tgt : ref.src; }
};
struct Walk {
  int base = 0;  // start vertex (used when steps empty)
  std::vector<WalkStep> steps;
  int from() const;
  int to() const;
};
/* Throws NotConcatenable / UnknownBasisRef on a broken chain. */
Walk make_walk(const Grading& X, int base, const std::vector<std::pair<BasisRef, int>>& steps);
Walk walk_inverse(const Walk& w);
Walk walk_concat(const Walk& a, const Walk& b);  // a first, then b
GroupElement walk_degree(const Grading& X, const Walk& w);

/* Edge list of the multigraph with one edge per homogeneous basis element of
 * a nonzero hom-space, in canonical order. */
std::vector<BasisRef> grading_edges(const Grading& X);

/* Deterministic BFS spanning tree rooted at b0 over grading_edges order. */
struct SpanningTree {
  int root = 0;
  std::vector<Walk> to_vertex;       // tree walk root -> b per vertex
  std::vector<bool> is_tree_edge;    // aligned with grading_edges
  std::vector<BasisRef> edges;
};
SpanningTree spanning_tree(const Grading& X, int b0);  // throws Disconnected

/* Degrees of the fundamental closed walks at b0 (one per non-tree edge,
 * including loops), generating the subgroup of closed-walk degrees. */
std::vector<GroupElement> closed_walk_degree_gens(const Grading& X, int b0);
bool is_connected_grading(const Grading& X, int b0);

/* Walk mapped through a homogeneous functor: per step the image must be a
 * scalar multiple of a single target basis element (errors NotHomogeneous /
 * NotBasisAligned otherwise); scalars are recorded separately. */
struct MappedWalk {
  Walk walk;
  std::vector<Rat> scalars;
};
MappedWalk map_walk(const Grading& X, const Grading& Y, const Functor& J, const Walk& w);

/* Degree table of a homogeneous functor: deg_Y(J(f)) per X-basis element.
 * Throws NotHomogeneous with the first violating basis element. */
std::vector<std::vector<GroupElement>> image_degrees(const Grading& X, const Grading& Y,
                                                     const Functor& J);

/* Same decomposition, degrees pushed through a surjective pi (NotSurjective
 * otherwise); the result is re-validated. */
Grading quotient_grading(const Grading& X, const GroupHom& pi);

/* Replace the structural group by the subgroup of closed-walk degrees in
 * canonical form.  Every basis degree must already lie in that subgroup
 * (DegreeOutsideImage otherwise). */
Grading restrict_to_image(const Grading& X, int b0);

/* Tree-connector gauge: conjugate each degree by the BFS tree walks so that
 * every tree edge gets degree zero.  Same decomposition, same group; closed
 * walks keep their degrees. */
Grading gauge_by_tree(const Grading& X, int b0);

/* Walks of trivial degree from b0 to every object (needs a finite structural
 * group; BFS over (object, degree) pairs).  Used to build covering morphisms. */
std::vector<Walk> trivial_degree_connectors(const Grading& X, int b0);

}  // namespace gradecat

#endif

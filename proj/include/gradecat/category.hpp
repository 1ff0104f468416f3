#ifndef GRADECAT_CATEGORY_HPP
#define GRADECAT_CATEGORY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gradecat/qmatrix.hpp"
#include "gradecat/quiver.hpp"

namespace gradecat {

/* Formal k-combination of parallel paths. */
struct LinComb {
  int src = 0, tgt = 0;
  std::vector<std::pair<Rat, Path>> terms;
};

/* One hom-space of the presented category: the span of all paths of length
 * below the bound between a fixed pair of vertices, the ideal subspace in
 * canonical reduced echelon form, and the surviving (non-pivot) paths which
 * form the quotient basis. */
struct HomSpace {
  int src = 0, tgt = 0;
  std::vector<Path> paths;          // canonical order
  QMat ideal;                       // RREF rows over path coordinates
  std::vector<int> pivots;          // pivot path coordinates
  std::vector<int> basis;           // non-pivot path indices = quotient basis
  int dim() const { return int(basis.size()); }
  int path_index(const Path& p) const;  // -1 when absent
  std::map<std::vector<int>, int> index_;  // seq -> position in paths
};

/* Finite-dimensional linear category presented by a quiver with relations,
 * truncated below `bound`.  For a quiver with oriented cycles the bound is
 * validated: every path of length exactly `bound` must already lie in the
 * span of relation translates, so that the truncation changes nothing. */
struct PresentedCategory {
  Field field;
  Quiver quiver;
  std::vector<LinComb> relations;
  int bound = 0;
  std::vector<HomSpace> homs;  // index src * nv + tgt

  int nv() const { return int(quiver.vertices.size()); }
  const HomSpace& hom(int s, int t) const { return homs[size_t(s) * nv() + t]; }
  HomSpace& hom(int s, int t) { return homs[size_t(s) * nv() + t]; }

  /* quotient-basis coordinate vector of the identity at b */
  std::vector<Rat> id_vec(int b) const;
  /* expand quotient coordinates to full path coordinates */
  std::vector<Rat> to_full(int s, int t, const std::vector<Rat>& qv) const;
  /* canonical quotient coordinates of a full path-coordinate vector */
  std::vector<Rat> to_quotient(int s, int t, std::vector<Rat> full) const;
};

/* Builds all hom-spaces.  Errors: NonAdmissible (term of length < 2, endpoint
 * mismatch, empty relation), BadBound (missing bound on a cyclic quiver, or a
 * length-`bound` path outside the relation-translate span). */
PresentedCategory build_category(const Quiver& q, const std::vector<LinComb>& relations,
                                 std::optional<int> bound, const Field& field);

/* Composite f o g of quotient-coordinate vectors g: x -> y, f: y -> z. */
std::vector<Rat> compose(const PresentedCategory& C, int x, int y, int z,
                         const std::vector<Rat>& f, const std::vector<Rat>& g);

/* Canonical residue of a path combination modulo the ideal (quotient coords). */
std::vector<Rat> residue(const PresentedCategory& C, const LinComb& v);
bool ideal_membership(const PresentedCategory& C, const LinComb& v);

std::string morphism_str(const PresentedCategory& C, int s, int t, const std::vector<Rat>& qv);

}  // namespace gradecat

#endif

#ifndef GRADECAT_ABELIAN_HPP
#define GRADECAT_ABELIAN_HPP

#include <optional>
#include <string>
#include <vector>

#include "gradecat/intmatrix.hpp"

namespace gradecat {

/* Finitely generated abelian group in canonical invariant form:
 * Z^rank  +  Z/d1 + ... + Z/dk  with  2 <= d1 | d2 | ... | dk.
 * Generators are ordered free part first, then torsion part. */
struct AbelianGroup {
  size_t rank = 0;
  std::vector<Int> torsion;

  bool operator==(const AbelianGroup&) const = default;
  size_t ngens() const { return rank + torsion.size(); }
  bool is_trivial() const { return rank == 0 && torsion.empty(); }
  bool is_finite() const { return rank == 0; }
  Int order() const;  // finite groups only
  std::string str() const;

  static AbelianGroup trivial() { return {}; }
  static AbelianGroup free(size_t r) { return {r, {}}; }
  static AbelianGroup cyclic(const Int& n);  // n = 0 gives Z
};

/* Element written over the canonical generators; torsion coordinates are
 * kept normalized into [0, d_i). */
struct GroupElement {
  std::vector<Int> free_part;
  std::vector<Int> torsion_part;
  bool operator==(const GroupElement&) const = default;
  bool operator<(const GroupElement&) const;
};

GroupElement gel_zero(const AbelianGroup& G);
GroupElement gel_gen(const AbelianGroup& G, size_t k);
GroupElement gel_normalize(const AbelianGroup& G, GroupElement e);
GroupElement gel_add(const AbelianGroup& G, const GroupElement& a, const GroupElement& b);
GroupElement gel_neg(const AbelianGroup& G, const GroupElement& a);
GroupElement gel_sub(const AbelianGroup& G, const GroupElement& a, const GroupElement& b);
GroupElement gel_smul(const AbelianGroup& G, const Int& n, const GroupElement& a);
bool gel_is_zero(const AbelianGroup& G, const GroupElement& a);
std::string gel_str(const AbelianGroup& G, const GroupElement& a);

/* Lift to Z^ngens (torsion residues as plain integers) and back. */
std::vector<Int> gel_lift(const AbelianGroup& G, const GroupElement& a);
GroupElement gel_from_vec(const AbelianGroup& G, const std::vector<Int>& v);

/* All elements of a finite group, lexicographic in torsion coordinates. */
std::vector<GroupElement> enumerate_elements(const AbelianGroup& G);

/* Relation lattice of G inside Z^ngens: one column d_i * e_{rank+i} per
 * torsion generator. */
IntMat relation_lattice(const AbelianGroup& G);

/* Homomorphism determined by images of the canonical generators. */
struct GroupHom {
  AbelianGroup source, target;
  std::vector<GroupElement> images;  // size source.ngens()

  bool operator==(const GroupHom&) const = default;
  static GroupHom identity(const AbelianGroup& G);
  static GroupHom zero(const AbelianGroup& G, const AbelianGroup& H);
};
bool hom_well_defined(const GroupHom& f);
GroupElement hom_apply(const GroupHom& f, const GroupElement& x);
GroupHom hom_compose(const GroupHom& g, const GroupHom& f);  // g after f
IntMat hom_matrix(const GroupHom& f);                        // ngens(target) x ngens(source)
std::string hom_str(const GroupHom& f);

/* Cokernel Z^n / colspan(R) in canonical form, with the projection map and
 * lifts of the canonical generators back to Z^n. */
struct Cokernel {
  AbelianGroup group;
  // project: Z^n -> group
  GroupElement project(const std::vector<Int>& x) const;
  // lift of canonical generator k to Z^n
  std::vector<Int> gen_lift(size_t k) const;
  bool is_trivial() const { return group.is_trivial(); }

  int n = 0;
  IntMat U, Uinv;            // from the Smith form of R
  std::vector<Int> diag;     // invariant of each of the n coordinates (1 = dead, 0 = free)
  std::vector<int> free_idx, tors_idx;
};
Cokernel cokernel(const IntMat& R, int n);

/* Subgroup of an ambient lattice-quotient group:  (A*Z^m + L) / L  where the
 * columns of A are the generators and L is the ambient relation lattice.
 * Provides the canonical form, lifts of canonical generators to ambient
 * coordinates, and membership with coordinates. */
struct SubgroupPresentation {
  AbelianGroup group;
  IntMat gens;  // ambient n x m generator columns
  IntMat L;     // ambient relation lattice
  Cokernel coker;  // of the internal relation matrix on the m generators

  // ambient Z^n vector of canonical generator k
  std::vector<Int> gen_ambient(size_t k) const;
  // coordinates of an ambient vector in the subgroup, if it lies inside
  std::optional<GroupElement> member(const std::vector<Int>& v) const;
};
SubgroupPresentation make_subgroup(const IntMat& A, const IntMat& L);

/* --- named operations --- */

struct QuotientResult {
  AbelianGroup group;
  bool is_full = false;           // quotient trivial, i.e. gens generate G
  std::vector<GroupElement> gen_images;  // images of G's canonical generators
};
QuotientResult subgroup_quotient(const AbelianGroup& G, const std::vector<GroupElement>& gens);

/* Subgroup of G generated by a list of elements, in canonical form. */
struct SubgroupResult {
  AbelianGroup group;                       // canonical form of the subgroup
  std::vector<GroupElement> gen_in_ambient; // canonical generators as elements of G
  SubgroupPresentation pres;
  AbelianGroup ambient;
  /* coordinates of d in the subgroup's canonical form; nullopt if outside */
  std::optional<GroupElement> coordinates(const GroupElement& d) const;
};
SubgroupResult subgroup_of(const AbelianGroup& G, const std::vector<GroupElement>& gens);

/* Hom(G, H) described per source generator by the subgroup of admissible
 * images; enumerable when finite. */
struct HomSpaceDesc {
  AbelianGroup source, target;
  std::vector<std::vector<GroupElement>> image_gens;  // per source generator
  bool finite = false;
  std::vector<GroupHom> all;  // populated when finite
};
HomSpaceDesc hom_space(const AbelianGroup& G, const AbelianGroup& H);

/* Unique hom with f(g_i) = t_i for generating constraints; nullopt when the
 * system has no solution.  When the g_i fail to generate G the returned hom
 * is one solution (callers that need uniqueness must pass generating sets). */
std::optional<GroupHom> hom_from_constraints(const AbelianGroup& G, const AbelianGroup& H,
                                             const std::vector<GroupElement>& gs,
                                             const std::vector<GroupElement>& ts);

/* Limit of a finite diagram of f.g. abelian groups: the subgroup of the
 * product consisting of arrow-coherent families. */
struct DiagramLimit {
  AbelianGroup group;
  /* component of canonical limit generator k at node i */
  std::vector<std::vector<GroupElement>> gen_components;
};
struct DiagramArrow {
  size_t src, tgt;
  GroupHom map;
};
DiagramLimit diagram_limit(const std::vector<AbelianGroup>& nodes,
                           const std::vector<DiagramArrow>& arrows);

}  // namespace gradecat

#endif

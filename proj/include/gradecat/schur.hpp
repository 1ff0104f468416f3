#ifndef GRADECAT_SCHUR_HPP
#define GRADECAT_SCHUR_HPP

#include <optional>
#include <string>
#include <vector>

#include "gradecat/grading.hpp"
#include "gradecat/presentation.hpp"

namespace gradecat {

/* Vertex pairs whose hom-space is one-dimensional (Schurian morphisms are
 * exactly the nonzero elements there). */
std::vector<std::pair<int, int>> schurian_morphisms(const PresentedCategory& C);

/* Least family of subspaces closed under composition, seeded by the spans of
 * all one-dimensional hom-spaces. */
struct SGClosure {
  bool is_sg = false;
  std::vector<QMat> span;          // RREF rows over quotient coords, per pair
  std::vector<std::vector<int>> pivots;
  /* first basis element outside the closure, when not SG */
  std::optional<BasisRef> witness;
};
SGClosure sg_closure(const PresentedCategory& C);

/* Every path strictly parallel to an arrow lies in the ideal. */
struct ConstrictedCheck {
  bool ok = true;
  std::optional<std::pair<int, Path>> witness;  // arrow index, surviving parallel path
};
ConstrictedCheck is_constricted(const PresentedCategory& C);

/* Finest partition of the paths of one hom-space such that the ideal
 * subspace splits as a direct sum across blocks.  Computed from the
 * support-minimal nonzero ideal elements; the direct-sum property of the
 * result is asserted.  Hom-spaces above `cap` paths are refused. */
std::vector<std::vector<int>> homogeneity_partition(const PresentedCategory& C, int x, int y,
                                                    int cap = 20);
/* Core on a bare coordinate space (n coordinates, ideal rows in RREF). */
std::vector<std::vector<int>> partition_core(int n, const QMat& ideal,
                                             const std::vector<int>& pivots, const Field& F,
                                             int cap = 20);

/* Homotopy presentation of the quiver presentation: free group on the
 * non-tree arrows of a BFS spanning tree, one relator per pair of paths
 * sharing a homogeneity block. */
struct HomotopyData {
  GroupPresentation pi1;
  std::vector<int> chord_of_arrow;   // arrow index -> generator index, -1 on tree arrows
  int root = 0;
};
HomotopyData presentation_homotopy(const PresentedCategory& C, int b0);

/* Grading with structural group the abelianized homotopy presentation and
 * path degrees given by chord classes.  Requires the category to be
 * generated by its Schurian morphisms (NotSG) and the presentation to be
 * constricted (NotConstricted); the result is validated and connected. */
struct UniversalGrading {
  Grading grading;
  HomotopyData homotopy;
  Abelianized abel;
};
UniversalGrading universal_grading(const PresentedCategory& C, int b0);

}  // namespace gradecat

#endif

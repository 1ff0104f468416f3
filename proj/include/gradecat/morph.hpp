#ifndef GRADECAT_MORPH_HPP
#define GRADECAT_MORPH_HPP

#include <optional>
#include <string>
#include <vector>

#include "gradecat/grading.hpp"
#include "gradecat/schur.hpp"
#include "gradecat/smash.hpp"

namespace gradecat {

/* Morphism of gradings of one category: a group map mu with a homogeneous
 * identity-on-objects witness functor J such that image walks have the
 * mu-translated degrees. */
struct GradingMorphism {
  const Grading* src = nullptr;
  const Grading* tgt = nullptr;
  GroupHom mu;
  Functor J;
};

/* Checks J functorial and homogeneous, then the degree square on the
 * generator walks of a spanning tree (sufficient: every closed walk at b0 is
 * a product of generator walks and both sides are multiplicative).  Throws
 * NotHomogeneous / SquareFails with witnesses.  A trivial target group makes
 * both conditions vacuous, so any functor is accepted as the witness. */
GradingMorphism verify_grading_morphism(const Grading& X, const Grading& Y, const GroupHom& mu,
                                        const Functor& J, int b0);

/* All morphisms X -> Y when both gradings are thin (every homogeneous
 * component of dimension <= 1; NotThin otherwise): line bijections per
 * hom-space filtered by scalar constraint propagation, each surviving
 * witness fully verified; one mu per witness (the source being connected
 * makes mu unique), deduplicated by mu.  Deterministic order. */
std::vector<GradingMorphism> enumerate_thin_morphisms(const Grading& X, const Grading& Y, int b0);

/* Subgroup of the structural group fixed by every mu arising from enumerate_thin_morphisms
 * (X, X). */
struct FixResult {
  AbelianGroup subgroup;                  // canonical form
  std::vector<GroupElement> gens_in_gamma;
  std::vector<GroupHom> mus;
};
FixResult compute_fix(const Grading& X, int b0);

/* Brute-force oracle: all arrow-degree assignments into a finite group G
 * (at most `cap` of them, GroupTooLarge otherwise) that give a valid
 * connected grading.  Requires a constricted presentation so that path
 * gradings exhaust connected gradings up to base change. */
std::vector<Grading> enumerate_constricted_gradings(const PresentedCategory& C,
                                                    const AbelianGroup& G, int b0,
                                                    long cap = 1000000);

/* Existence and uniqueness of morphisms U -> X for every X in a family. */
struct UniversalCheckEntry {
  std::string label;
  bool exists = false;
  bool unique = false;
  size_t count = 0;  // distinct mu
};
struct UniversalCheck {
  bool all_exist = true;
  bool all_unique = true;
  std::vector<UniversalCheckEntry> entries;
};
UniversalCheck verify_universal_property(const Grading& U,
                                         const std::vector<const Grading*>& family,
                                         const std::vector<std::string>& labels, int b0);

/* Limit group of a family diagram: nodes = structural groups, arrows = the
 * mu of each listed morphism. */
struct GradingFamily {
  std::vector<const Grading*> gradings;
  std::vector<std::string> labels;
  struct Edge {
    size_t src, tgt;
    GroupHom mu;
  };
  std::vector<Edge> morphisms;
};
DiagramLimit coherent_family_group(const GradingFamily& fam);

}  // namespace gradecat

#endif

#ifndef GRADECAT_MODEL_HPP
#define GRADECAT_MODEL_HPP

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "gradecat/grading.hpp"
#include "gradecat/presentation.hpp"
#include "gradecat/smash.hpp"

namespace gradecat {

/* All files use insertion-ordered JSON so that emission is deterministic. */
using Json = nlohmann::ordered_json;

Json read_json_file(const std::string& path);  // Schema on unreadable/malformed input
void write_json_file(const std::string& path, const Json& j);

/* --- scalars ------------------------------------------------------------ */

Json int_json(const Int& v);  // number when it fits, decimal string otherwise
Int parse_int(const Json& j, const std::string& path);
Json rat_json(const Rat& v);  // integer number when possible, "n/d" string otherwise

/* Rational model-file entry: a rational literal, optionally times the formal
 * parameter q ("1", "-1/2", "q", "-q", "2*q").  The parameter is resolved at
 * parse time from the --q command-line value; using q without supplying a
 * value is a Usage error.  Accepted in every rational slot (relation
 * coefficients, base-change and functor matrices). */
struct QCoef {
  Rat base = Rat(1);
  bool times_q = false;
};
QCoef parse_coef(const Json& j, const std::string& path);
Rat resolve_coef(const QCoef& c, const std::optional<Rat>& q,
                 const std::string& path);  // Usage when q is needed but absent
Rat parse_rat_json(const Json& j, const std::optional<Rat>& q, const std::string& path);

/* --- algebraic layers --------------------------------------------------- */

Json field_json(const Field& F);
Field parse_field(const Json& j, const std::string& path);

Json group_json(const AbelianGroup& G);
AbelianGroup parse_group(const Json& j, const std::string& path);
Json element_json(const GroupElement& e);
GroupElement parse_element(const Json& j, const AbelianGroup& G, const std::string& path);

Json hom_json(const GroupHom& f);
GroupHom parse_hom(const Json& j, const std::string& path);

Json presentation_json(const GroupPresentation& p);
GroupPresentation parse_presentation(const Json& j, const std::string& path);

/* --- category layer ----------------------------------------------------- */

/* Hom-pair key "src->tgt" and basis-element key "src->tgt#idx", with vertex
 * names.  Names may not contain "->" or "#". */
std::string pair_key(const PresentedCategory& C, int s, int t);
std::pair<int, int> parse_pair_key(const PresentedCategory& C, const std::string& key,
                                   const std::string& path);
std::string ref_key(const PresentedCategory& C, const BasisRef& r);
BasisRef parse_ref_key(const PresentedCategory& C, const std::string& key,
                       const std::string& path);

Json category_json(const PresentedCategory& C);
PresentedCategory parse_category(const Json& j, const std::optional<Rat>& q,
                                 const std::string& path);

Json matrix_json(const QMat& m);
QMat parse_matrix(const Json& j, const std::optional<Rat>& q, const std::string& path);
Json vector_json(const std::vector<Rat>& v);
std::vector<Rat> parse_vector(const Json& j, const std::optional<Rat>& q,
                              const std::string& path);

Json grading_json(const PresentedCategory& C, const Grading& X);
Grading parse_grading(const PresentedCategory& C, const Json& j, const std::optional<Rat>& q,
                      const std::string& path);

Json functor_json(const PresentedCategory& C, const Functor& F);
/* Identity-on-objects endofunctor of C; omitted hom-pairs get the identity
 * matrix.  Verified through the functor builder. */
Functor parse_functor(const PresentedCategory& C, const Json& j, const std::optional<Rat>& q,
                      const std::string& path);

struct NamedWalk {
  int base = 0;
  std::vector<std::pair<BasisRef, int>> steps;
};
Json walk_json(const PresentedCategory& C, const NamedWalk& w);
NamedWalk parse_walk(const PresentedCategory& C, const Json& j, const std::string& path);

/* --- model files --------------------------------------------------------- */

/* A model file bundles one presented category with named gradings, named
 * identity-on-objects endofunctors, named group homomorphisms, and named
 * walks:
 *   { "category": {...}, "gradings": {...}, "functors": {...},
 *     "homs": {...}, "walks": {...} }
 * Only "category" is required. */
struct ModelFile {
  std::unique_ptr<PresentedCategory> category;
  std::vector<std::pair<std::string, Grading>> gradings;
  std::vector<std::pair<std::string, Functor>> functors;
  std::vector<std::pair<std::string, GroupHom>> homs;
  std::vector<std::pair<std::string, NamedWalk>> walks;

  const Grading* grading(const std::string& name) const;
  const Functor* functor(const std::string& name) const;
  const GroupHom* hom(const std::string& name) const;
  const NamedWalk* walk(const std::string& name) const;
  /* as above but throwing Usage with the known names listed */
  const Grading& need_grading(const std::string& name) const;
  const Functor& need_functor(const std::string& name) const;
  const GroupHom& need_hom(const std::string& name) const;
  const NamedWalk& need_walk(const std::string& name) const;
};

ModelFile parse_model(const Json& j, const std::optional<Rat>& q);
ModelFile load_model(const std::string& path, const std::optional<Rat>& q);
Json model_json(const ModelFile& m);  // emits resolved coefficients (no q)
bool model_equal(const ModelFile& a, const ModelFile& b);

/* --- smash-product files -------------------------------------------------- */

/* { "category": {...}, "grading": {...}, "elements": [...],
 *   "hom": [[refKey, ...] per ordered object pair, row-major] }
 * The stored hom table is taken at face value so that verification runs
 * against what the file actually says. */
struct SmashFile {
  std::unique_ptr<PresentedCategory> category;
  std::unique_ptr<Grading> grading;
  SmashCategory smash;
};
Json smash_json(const SmashCategory& S);
SmashFile parse_smash(const Json& j, const std::optional<Rat>& q);

}  // namespace gradecat

#endif

#ifndef GRADECAT_TEST_HELPERS_HPP
#define GRADECAT_TEST_HELPERS_HPP

#include "gradecat/corpus.hpp"
#include "gradecat/smash.hpp"

namespace gct {

using namespace gradecat;

inline ModelFile load_example(const std::string& name,
                              const std::optional<Rat>& q = std::nullopt) {
  const CorpusEntry* e = corpus_entry(name);
  if (!e) fail(ErrCode::Usage, "no such test example: " + name);
  return parse_model(e->file, q);
}

/* x --a--> y */
inline PresentedCategory make_a2() {
  Quiver q;
  q.vertices = {"x", "y"};
  q.arrows = {{"a", 0, 1}};
  return build_category(q, {}, std::nullopt, Field::rationals());
}

/* commutative square with an extra diagonal arrow e: x -> w (no relation on
 * e, so the paths through the square survive parallel to it) */
inline PresentedCategory make_diagonal_square() {
  Quiver q;
  q.vertices = {"x", "y", "z", "w"};
  q.arrows = {{"a", 0, 1}, {"b", 0, 2}, {"c", 1, 3}, {"d", 2, 3}, {"e", 0, 3}};
  LinComb r;
  r.src = 0;
  r.tgt = 3;
  r.terms = {{Rat(1), Path{0, {0, 2}}}, {Rat(-1), Path{0, {1, 3}}}};
  return build_category(q, {r}, std::nullopt, Field::rationals());
}

/* single loop x with x^n = 0 over the rationals */
inline PresentedCategory make_nilpotent_loop(int n) {
  Quiver q;
  q.vertices = {"v"};
  q.arrows = {{"x", 0, 0}};
  LinComb r;
  r.src = 0;
  r.tgt = 0;
  r.terms = {{Rat(1), Path{0, std::vector<int>(size_t(n), 0)}}};
  return build_category(q, {r}, n, Field::rationals());
}

inline GroupHom proj_hom(const AbelianGroup& Z1, long n) {
  AbelianGroup T = AbelianGroup::cyclic(n);
  GroupHom pi;
  pi.source = Z1;
  pi.target = T;
  pi.images.push_back(T.is_trivial() ? gel_zero(T) : gel_gen(T, 0));
  return pi;
}

inline std::vector<Rat> unit_vec(int n, int i) {
  std::vector<Rat> v(size_t(n), Rat(0));
  v[size_t(i)] = 1;
  return v;
}

}  // namespace gct

#endif

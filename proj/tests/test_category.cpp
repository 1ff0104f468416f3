#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

using namespace gct;

/* the two-path category with relation (direct path) = q (composite path),
 * built straight from the C++ interface */
static PresentedCategory make_twopath(const Rat& q) {
  Quiver qv;
  qv.vertices = {"x", "y", "z", "z'"};
  qv.arrows = {{"alpha", 0, 1}, {"beta", 1, 2}, {"gamma", 0, 2}, {"delta", 2, 3}};
  LinComb r;
  r.src = 0;
  r.tgt = 3;
  Rat mq = -q;
  r.terms = {{Rat(1), Path{0, {2, 3}}}, {mq, Path{0, {0, 1, 3}}}};
  return build_category(qv, {r}, std::nullopt, Field::rationals());
}

TEST_CASE("quiver paths enumerate in canonical order") {
  PresentedCategory C = make_twopath(Rat(1));
  const Quiver& q = C.quiver;
  CHECK(q.vertex_index("z'") == 3);
  CHECK_THROWS_AS((void)q.vertex_index("nope"), Error);
  CHECK_FALSE(q.has_cycle());
  CHECK(q.longest_path() == 3);

  auto ps = enumerate_paths(q, 0, 2, 10);
  REQUIRE(ps.size() == 2);
  CHECK(ps[0].seq == std::vector<int>{2});     // the direct arrow comes first (shorter)
  CHECK(ps[1].seq == std::vector<int>{0, 1});  // then the composite
  CHECK(path_less(q, ps[0], ps[1]));
  CHECK(path_str(q, ps[1]) == "beta.alpha");

  Path id_x{0, {}};
  CHECK(id_x.source(q) == 0);
  CHECK(path_concat(q, Path{0, {0}}, Path{1, {1}}).seq == std::vector<int>{0, 1});
  CHECK_THROWS_AS((void)path_concat(q, Path{0, {1}}, Path{0, {0}}), Error);
}

TEST_CASE("two-path category dimensions and ideal") {
  PresentedCategory C = make_twopath(Rat(2));
  CHECK(C.nv() == 4);
  CHECK(C.hom(0, 2).dim() == 2);
  CHECK(C.hom(0, 3).dim() == 1);
  CHECK(C.hom(1, 3).dim() == 1);
  CHECK(C.hom(0, 0).dim() == 1);  // identity
  CHECK(C.hom(2, 1).dim() == 0);

  // ideal of hom(x, z'): single RREF row  (1, -q)  over (gamma.delta, delta.beta.alpha)
  const HomSpace& h = C.hom(0, 3);
  REQUIRE(h.paths.size() == 2);
  CHECK(h.ideal.rows == 1);
  CHECK(h.ideal.at(0, 0) == Rat(1));
  CHECK(h.ideal.at(0, 1) == Rat(-2));
  CHECK(h.pivots == std::vector<int>{0});
  CHECK(h.basis == std::vector<int>{1});  // quotient basis: the length-3 path
}

TEST_CASE("composition lands in the ideal quotient") {
  Rat q(2);
  PresentedCategory C = make_twopath(q);
  // delta o gamma = q delta.beta.alpha in the quotient
  std::vector<Rat> g = unit_vec(2, 0);  // gamma
  std::vector<Rat> f = unit_vec(1, 0);  // delta
  auto c = compose(C, 0, 2, 3, f, g);
  REQUIRE(c.size() == 1);
  CHECK(c[0] == q);
  // delta o (beta o alpha) = delta.beta.alpha
  auto ba = compose(C, 0, 1, 2, unit_vec(1, 0), unit_vec(1, 0));
  CHECK(ba == unit_vec(2, 1));
  auto dba = compose(C, 0, 2, 3, f, ba);
  CHECK(dba == unit_vec(1, 0));
  // identity neutrality
  CHECK(compose(C, 0, 0, 2, unit_vec(2, 0), C.id_vec(0)) == unit_vec(2, 0));

  LinComb rel;
  rel.src = 0;
  rel.tgt = 3;
  rel.terms = {{Rat(1), Path{0, {2, 3}}}, {Rat(-2), Path{0, {0, 1, 3}}}};
  CHECK(ideal_membership(C, rel));
  LinComb notrel;
  notrel.src = 0;
  notrel.tgt = 3;
  notrel.terms = {{Rat(1), Path{0, {2, 3}}}};
  CHECK_FALSE(ideal_membership(C, notrel));
  CHECK(residue(C, notrel) == std::vector<Rat>{Rat(2)});
  CHECK(morphism_str(C, 0, 3, {Rat(2)}) == "2*delta.beta.alpha");
  CHECK(morphism_str(C, 0, 3, {Rat(0)}) == "0");
}

TEST_CASE("relation term order does not change the quotient") {
  Rat q(3);
  PresentedCategory A = make_twopath(q);
  Quiver qv = A.quiver;
  LinComb r;
  r.src = 0;
  r.tgt = 3;
  Rat mq = -q;
  r.terms = {{mq, Path{0, {0, 1, 3}}}, {Rat(1), Path{0, {2, 3}}}};  // reversed
  PresentedCategory B = build_category(qv, {r}, std::nullopt, Field::rationals());
  for (int s = 0; s < 4; s++)
    for (int t = 0; t < 4; t++) {
      CHECK(A.hom(s, t).dim() == B.hom(s, t).dim());
      CHECK(A.hom(s, t).ideal == B.hom(s, t).ideal);
    }
}

TEST_CASE("vanishing relation terms are dropped") {
  PresentedCategory C = make_twopath(Rat(0));  // second term has coefficient 0
  REQUIRE(C.relations.size() == 1);
  CHECK(C.relations[0].terms.size() == 1);
  CHECK(C.hom(0, 3).dim() == 1);
  CHECK(C.hom(0, 3).basis == std::vector<int>{1});

  // a relation that is identically zero is rejected
  Quiver qv = C.quiver;
  LinComb z;
  z.src = 0;
  z.tgt = 3;
  z.terms = {{Rat(0), Path{0, {2, 3}}}};
  CHECK_THROWS_AS((void)build_category(qv, {z}, std::nullopt, Field::rationals()), Error);
}

TEST_CASE("admissibility and bound validation") {
  Quiver loop;
  loop.vertices = {"v"};
  loop.arrows = {{"x", 0, 0}};
  CHECK(loop.has_cycle());
  // cyclic quiver without a bound
  CHECK_THROWS_WITH_AS((void)build_category(loop, {}, std::nullopt, Field::rationals()),
                       doctest::Contains("bound"), Error);
  // bound below 2
  CHECK_THROWS_AS((void)build_category(loop, {}, 1, Field::rationals()), Error);
  // bound 3 with no relations truncates a surviving path: rejected
  CHECK_THROWS_AS((void)build_category(loop, {}, 3, Field::rationals()), Error);
  // nilpotency relation makes the truncation exact
  PresentedCategory N = make_nilpotent_loop(3);
  CHECK(N.hom(0, 0).dim() == 3);

  // relation term of length < 2
  Quiver q2;
  q2.vertices = {"x", "y"};
  q2.arrows = {{"a", 0, 1}, {"b", 0, 1}};
  LinComb short_rel;
  short_rel.src = 0;
  short_rel.tgt = 1;
  short_rel.terms = {{Rat(1), Path{0, {0}}}, {Rat(-1), Path{0, {1}}}};
  CHECK_THROWS_AS((void)build_category(q2, {short_rel}, std::nullopt, Field::rationals()),
                  Error);
  // endpoint mismatch
  PresentedCategory T = make_twopath(Rat(1));
  LinComb wrong;
  wrong.src = 0;
  wrong.tgt = 2;
  wrong.terms = {{Rat(1), Path{0, {2, 3}}}};
  CHECK_THROWS_AS((void)build_category(T.quiver, {wrong}, std::nullopt, Field::rationals()),
                  Error);
}

TEST_CASE("prime field category") {
  PresentedCategory C = [] {
    Quiver q;
    q.vertices = {"v"};
    q.arrows = {{"x", 0, 0}};
    LinComb r;
    r.src = 0;
    r.tgt = 0;
    r.terms = {{Rat(1), Path{0, {0, 0}}}};
    return build_category(q, {r}, 2, Field::prime(2));
  }();
  CHECK(C.hom(0, 0).dim() == 2);
  // (1 + x)^2 = 1 + 2x + x^2 = 1 over F2
  auto sq = compose(C, 0, 0, 0, {Rat(1), Rat(1)}, {Rat(1), Rat(1)});
  CHECK(sq == std::vector<Rat>{Rat(1), Rat(0)});
}

TEST_CASE("functors verify and compose") {
  Rat q(1), q2(4);
  PresentedCategory A = make_twopath(q);
  PresentedCategory B = make_twopath(q2);
  int nv = 4;
  std::vector<QMat> mats(size_t(nv) * nv);
  for (int s = 0; s < nv; s++)
    for (int t = 0; t < nv; t++) mats[size_t(s) * nv + t] = QMat::identity(A.hom(s, t).dim());
  QMat M = QMat::identity(2);
  M.at(1, 0) = q - q2;  // direct path picks up (q - q') times the composite
  mats[0 * 4 + 2] = M;

  Functor F = build_functor(A, B, mats);
  CHECK(F.is_isomorphism());
  auto img = F.apply(0, 2, unit_vec(2, 0));
  CHECK(img == std::vector<Rat>{Rat(1), q - q2});

  // inverse shift composes to the identity
  std::vector<QMat> back = mats;
  QMat Mi = QMat::identity(2);
  Mi.at(1, 0) = q2 - q;
  back[0 * 4 + 2] = Mi;
  Functor G = build_functor(B, A, back);
  CHECK(functor_equal(compose_functor(G, F), identity_functor(A)));
  CHECK(functor_equal(compose_functor(F, G), identity_functor(B)));

  // a functor may be non-invertible on some pair without being an isomorphism
  std::vector<QMat> degen = mats;
  QMat Z(2, 2);
  Z.at(0, 0) = 0;
  Z.at(1, 0) = 1;
  Z.at(1, 1) = 1;  // gamma and beta.alpha both land on the composite line
  degen[0 * 4 + 2] = Z;
  Functor D = build_functor(A, B, degen);
  CHECK_FALSE(D.is_isomorphism());
}

TEST_CASE("functoriality is enforced") {
  ModelFile m = load_example("square");
  const PresentedCategory& C = *m.category;
  int nv = C.nv();
  std::vector<QMat> mats(size_t(nv) * nv);
  for (int s = 0; s < nv; s++)
    for (int t = 0; t < nv; t++) mats[size_t(s) * nv + t] = QMat::identity(C.hom(s, t).dim());
  // scaling one arrow of the identified square breaks the relation
  QMat twice = QMat::identity(1);
  twice.at(0, 0) = 2;
  mats[size_t(C.quiver.vertex_index("x")) * nv + C.quiver.vertex_index("y")] = twice;
  CHECK_THROWS_WITH_AS((void)build_functor(C, C, mats), doctest::Contains("composition"),
                       Error);
  // scaling both branches consistently works once hom(x, w) scales along
  mats[size_t(C.quiver.vertex_index("x")) * nv + C.quiver.vertex_index("z")] = twice;
  mats[size_t(C.quiver.vertex_index("x")) * nv + C.quiver.vertex_index("w")] = twice;
  Functor F = build_functor(C, C, mats);
  CHECK(F.is_isomorphism());
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

using namespace gct;

/* Z^2-grading of the round-trip category with deg a = (1,1), deg b = (0,0) */
static Grading roundtrip_z2(const PresentedCategory& C) {
  AbelianGroup Z2 = AbelianGroup::free(2);
  int nv = C.nv();
  std::vector<std::vector<GroupElement>> degs(size_t(nv) * nv);
  for (int s = 0; s < nv; s++)
    for (int t = 0; t < nv; t++)
      degs[size_t(s) * nv + t].assign(size_t(C.hom(s, t).dim()), gel_zero(Z2));
  degs[0 * nv + 1][0] = gel_from_vec(Z2, {Int(1), Int(1)});
  return make_grading(C, Z2, std::vector<std::optional<QMat>>(size_t(nv) * nv), degs);
}

TEST_CASE("trivial grading is valid with zero degrees everywhere") {
  ModelFile m = load_example("square");
  Grading T = trivial_grading(*m.category);
  CHECK(T.group.is_trivial());
  CHECK(validate_grading(T).ok);
  CHECK(is_connected_grading(T, 0));
  for (const auto& pair_degs : T.degrees)
    for (const auto& d : pair_degs) CHECK(gel_is_zero(T.group, d));
}

TEST_CASE("base change maps between quotient and homogeneous coordinates") {
  Rat q(2);
  ModelFile m = load_example("bq", q);
  const PresentedCategory& C = *m.category;
  const Grading& U = m.need_grading("U");
  int x = C.quiver.vertex_index("x"), z = C.quiver.vertex_index("z");
  // homogeneous basis columns: h0 = beta.alpha (degree 0), h1 = gamma - q beta.alpha
  std::vector<Rat> gamma_q = unit_vec(2, 0);
  auto h = U.to_homogeneous(x, z, gamma_q);
  CHECK(h == std::vector<Rat>{q, Rat(1)});  // gamma = q h0 + h1
  CHECK(U.from_homogeneous(x, z, h) == gamma_q);
  CHECK(U.deg(BasisRef{x, z, 1}) == gel_gen(U.group, 0));
  CHECK(gel_is_zero(U.group, U.deg(BasisRef{x, z, 0})));
}

TEST_CASE("homogeneity violations carry witnesses") {
  ModelFile m = load_example("bq", Rat(1));
  const PresentedCategory& C = *m.category;
  int nv = C.nv();
  int x = C.quiver.vertex_index("x"), z = C.quiver.vertex_index("z"),
      zp = C.quiver.vertex_index("z'");
  AbelianGroup Z1 = AbelianGroup::free(1);
  std::vector<std::vector<GroupElement>> degs(size_t(nv) * nv);
  for (int s = 0; s < nv; s++)
    for (int t = 0; t < nv; t++)
      degs[size_t(s) * nv + t].assign(size_t(C.hom(s, t).dim()), gel_zero(Z1));
  // giving the two path classes of hom(x,z) different degrees without a base
  // change is incompatible: delta o gamma = delta.beta.alpha mixes them
  degs[size_t(x) * nv + z][0] = gel_gen(Z1, 0);
  Grading bad = make_grading(C, Z1, std::vector<std::optional<QMat>>(size_t(nv) * nv), degs);
  GradingCheck chk = validate_grading(bad);
  REQUIRE_FALSE(chk.ok);
  const GradingViolation& v = chk.violations.front();
  CHECK(v.x == x);
  CHECK(v.y == z);
  CHECK(v.z == zp);
  CHECK(v.fi == 0);  // the offending first factor is the gamma line

  // identities must sit in degree zero
  PresentedCategory A2 = make_a2();
  std::vector<std::vector<GroupElement>> d2(4);
  d2[0] = {gel_gen(Z1, 0)};  // id_x in degree 1
  d2[1] = {gel_zero(Z1)};
  d2[3] = {gel_zero(Z1)};
  Grading idbad = make_grading(A2, Z1, std::vector<std::optional<QMat>>(4), d2);
  GradingCheck c2 = validate_grading(idbad);
  REQUIRE_FALSE(c2.ok);
  CHECK(c2.violations.front().fi == -1);
}

TEST_CASE("singular base change is rejected") {
  ModelFile m = load_example("bq", Rat(1));
  const PresentedCategory& C = *m.category;
  int nv = C.nv();
  int x = C.quiver.vertex_index("x"), z = C.quiver.vertex_index("z");
  std::vector<std::optional<QMat>> bc(size_t(nv) * nv);
  QMat S(2, 2);
  S.at(0, 0) = 1;
  S.at(0, 1) = 1;  // rank 1
  bc[size_t(x) * nv + z] = S;
  std::vector<std::vector<GroupElement>> degs(size_t(nv) * nv);
  AbelianGroup Z1 = AbelianGroup::free(1);
  for (int s = 0; s < nv; s++)
    for (int t = 0; t < nv; t++)
      degs[size_t(s) * nv + t].assign(size_t(C.hom(s, t).dim()), gel_zero(Z1));
  CHECK_THROWS_AS((void)make_grading(C, Z1, bc, degs), Error);
}

TEST_CASE("walk algebra") {
  ModelFile m = load_example("bq", Rat(1));
  const PresentedCategory& C = *m.category;
  const Grading& U = m.need_grading("U");
  int x = C.quiver.vertex_index("x"), z = C.quiver.vertex_index("z");

  Walk w = make_walk(U, x, {{BasisRef{x, z, 1}, +1}, {BasisRef{x, z, 0}, -1}});
  CHECK(w.from() == x);
  CHECK(w.to() == x);
  CHECK(walk_degree(U, w) == gel_gen(U.group, 0));
  CHECK(walk_degree(U, walk_inverse(w)) == gel_neg(U.group, gel_gen(U.group, 0)));
  Walk ww = walk_concat(w, w);
  CHECK(walk_degree(U, ww) == gel_smul(U.group, Int(2), gel_gen(U.group, 0)));
  CHECK(ww.steps.size() == 4);

  // concatenation needs matching endpoints
  Walk to_z = make_walk(U, x, {{BasisRef{x, z, 0}, +1}});
  CHECK_THROWS_AS((void)walk_concat(to_z, to_z), Error);
  CHECK_THROWS_AS(
      (void)make_walk(U, x, {{BasisRef{x, z, 0}, +1}, {BasisRef{x, z, 1}, +1}}), Error);
  // walks through named steps respect eps direction
  CHECK(to_z.steps[0].from() == x);
  CHECK(walk_inverse(to_z).steps[0].from() == z);

  // the named walk of the model file matches the hand-built one
  const NamedWalk& nw = m.need_walk("cycle");
  Walk file_walk = make_walk(U, nw.base, nw.steps);
  CHECK(walk_degree(U, file_walk) == walk_degree(U, w));
}

TEST_CASE("spanning tree and connectivity witnesses") {
  ModelFile m = load_example("bq", Rat(1));
  const PresentedCategory& C = *m.category;
  const Grading& U = m.need_grading("U");
  int x = C.quiver.vertex_index("x");

  SpanningTree T = spanning_tree(U, x);
  CHECK(T.root == x);
  for (int v = 0; v < C.nv(); v++) {
    CHECK(T.to_vertex[size_t(v)].from() == x);
    CHECK(T.to_vertex[size_t(v)].to() == v);
  }
  auto gens = closed_walk_degree_gens(U, x);
  bool has_generator = false;
  for (const auto& g : gens) has_generator = has_generator || g == gel_gen(U.group, 0);
  CHECK(has_generator);
  CHECK(is_connected_grading(U, x));

  // equal degrees on the two parallel arrows kill every closed-walk degree
  ModelFile k = load_example("kronecker");
  const PresentedCategory& K = *k.category;
  AbelianGroup Z1 = AbelianGroup::free(1);
  Grading W = path_basis_grading(K, Z1, {gel_gen(Z1, 0), gel_gen(Z1, 0)});
  CHECK(validate_grading(W).ok);
  CHECK_FALSE(is_connected_grading(W, 0));
  for (const auto& g : closed_walk_degree_gens(W, 0)) CHECK(gel_is_zero(Z1, g));

  // disconnected underlying graph
  Quiver iso;
  iso.vertices = {"u", "v"};
  PresentedCategory D = build_category(iso, {}, std::nullopt, Field::rationals());
  CHECK_THROWS_AS((void)spanning_tree(trivial_grading(D), 0), Error);
}

TEST_CASE("mapping walks through functors") {
  ModelFile m = load_example("kronecker");
  const PresentedCategory& C = *m.category;
  const Grading& V = m.need_grading("V");
  const Functor& swap = m.need_functor("swap");
  int x = 0, y = 1;

  Walk w = make_walk(V, x, {{BasisRef{x, y, 0}, +1}, {BasisRef{x, y, 1}, -1}});
  CHECK(walk_degree(V, w) == gel_gen(V.group, 0));
  MappedWalk mw = map_walk(V, V, swap, w);
  CHECK(mw.walk.steps[0].ref == BasisRef{x, y, 1});
  CHECK(mw.walk.steps[1].ref == BasisRef{x, y, 0});
  CHECK(walk_degree(V, mw.walk) == gel_neg(V.group, gel_gen(V.group, 0)));
  CHECK(mw.scalars.size() == 2);

  auto table = image_degrees(V, V, swap);
  CHECK(gel_is_zero(V.group, table[size_t(x) * C.nv() + y][0]));  // J(a) = b in degree 0
  CHECK(table[size_t(x) * C.nv() + y][1] == gel_gen(V.group, 0));

  // an image spread across two lines of different degrees is not homogeneous
  QMat Mix = QMat::identity(2);
  Mix.at(1, 0) = 1;  // a -> a + b
  std::vector<QMat> mats(4);
  mats[0] = QMat::identity(1);
  mats[1] = Mix;
  mats[2] = QMat(0, 0);
  mats[3] = QMat::identity(1);
  Functor J = build_functor(C, C, mats);
  CHECK_THROWS_AS((void)map_walk(V, V, J, w), Error);

  // homogeneous but smeared across a two-dimensional component: same degrees
  AbelianGroup Z1 = AbelianGroup::free(1);
  Grading W = path_basis_grading(C, Z1, {gel_gen(Z1, 0), gel_gen(Z1, 0)});
  Walk wa = make_walk(W, x, {{BasisRef{x, y, 0}, +1}});
  CHECK_THROWS_WITH_AS((void)map_walk(W, W, J, wa), doctest::Contains("basis"), Error);
}

TEST_CASE("quotients push degrees along surjections") {
  PresentedCategory N = make_nilpotent_loop(3);
  AbelianGroup Z1 = AbelianGroup::free(1);
  Grading X = path_basis_grading(N, Z1, {gel_gen(Z1, 0)});
  CHECK(validate_grading(X).ok);
  CHECK(is_connected_grading(X, 0));

  Grading Q3 = quotient_grading(X, proj_hom(Z1, 3));
  CHECK(Q3.group == AbelianGroup::cyclic(3));
  CHECK(validate_grading(Q3).ok);
  CHECK(is_connected_grading(Q3, 0));
  CHECK(Q3.deg(BasisRef{0, 0, 2}) ==
        gel_smul(Q3.group, Int(2), gel_gen(Q3.group, 0)));

  GroupHom dbl = GroupHom::identity(Z1);
  dbl.images[0] = gel_smul(Z1, Int(2), gel_gen(Z1, 0));
  CHECK_THROWS_WITH_AS((void)quotient_grading(X, dbl), doctest::Contains("reach"), Error);
}

TEST_CASE("restriction to the closed-walk subgroup") {
  ModelFile m = load_example("roundtrip");
  const PresentedCategory& C = *m.category;
  Grading X = roundtrip_z2(C);
  CHECK(validate_grading(X).ok);
  CHECK_FALSE(is_connected_grading(X, 0));  // Z^2 is bigger than the walk subgroup

  Grading R = restrict_to_image(X, 0);
  CHECK(R.group == AbelianGroup::free(1));
  CHECK(validate_grading(R).ok);
  CHECK(is_connected_grading(R, 0));

  // equal parallel degrees put the arrow degrees outside the trivial subgroup
  ModelFile k = load_example("kronecker");
  AbelianGroup Z2 = AbelianGroup::free(2);
  Grading W = path_basis_grading(*k.category, Z2,
                                 {gel_from_vec(Z2, {Int(1), Int(0)}),
                                  gel_from_vec(Z2, {Int(1), Int(0)})});
  CHECK_THROWS_WITH_AS((void)restrict_to_image(W, 0), doctest::Contains("outside"), Error);
}

TEST_CASE("tree gauge zeroes tree edges and keeps closed-walk degrees") {
  ModelFile m = load_example("roundtrip");
  const PresentedCategory& C = *m.category;
  Grading R = restrict_to_image(roundtrip_z2(C), 0);
  Grading G = gauge_by_tree(R, 0);
  CHECK(G.group == R.group);
  CHECK(validate_grading(G).ok);
  SpanningTree T = spanning_tree(G, 0);
  for (size_t e = 0; e < T.edges.size(); e++)
    if (T.is_tree_edge[e]) CHECK(gel_is_zero(G.group, G.deg(T.edges[e])));
  auto a = closed_walk_degree_gens(R, 0);
  auto b = closed_walk_degree_gens(G, 0);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); i++) CHECK(a[i] == b[i]);
  CHECK(is_connected_grading(G, 0));
}

TEST_CASE("trivial-degree connectors reach every object") {
  ModelFile m = load_example("kronecker");
  const Grading& V = m.need_grading("V");
  Grading Q = quotient_grading(V, proj_hom(V.group, 2));
  auto conns = trivial_degree_connectors(Q, 0);
  REQUIRE(conns.size() == 2);
  for (int v = 0; v < 2; v++) {
    CHECK(conns[size_t(v)].from() == 0);
    CHECK(conns[size_t(v)].to() == v);
    CHECK(gel_is_zero(Q.group, walk_degree(Q, conns[size_t(v)])));
  }
}

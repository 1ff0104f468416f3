#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

using namespace gct;

static IntMat from_rows(const std::vector<std::vector<long>>& rows) {
  int r = int(rows.size());
  int c = r ? int(rows[0].size()) : 0;
  IntMat m(r, c);
  for (int i = 0; i < r; i++)
    for (int j = 0; j < c; j++) m.at(i, j) = rows[size_t(i)][size_t(j)];
  return m;
}

TEST_CASE("smith normal form reconstructs and divides") {
  IntMat A = from_rows({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}});
  SmithResult s = smith_normal_form(A);
  IntMat lhs = imul(imul(s.U, A), s.V);
  CHECK(lhs.rows == s.D.rows);
  for (int i = 0; i < lhs.rows; i++)
    for (int j = 0; j < lhs.cols; j++) CHECK(lhs.at(i, j) == s.D.at(i, j));
  Int du = det(s.U), dv = det(s.V);
  CHECK((du == 1 || du == -1));
  CHECK((dv == 1 || dv == -1));
  auto d = s.diag();
  for (size_t i = 0; i + 1 < d.size(); i++)
    if (d[i] != 0) CHECK(mpz_divisible_p(d[i + 1].get_mpz_t(), d[i].get_mpz_t()));
}

TEST_CASE("kernel and integer solve") {
  IntMat A = from_rows({{1, 2, 3}, {2, 4, 6}});
  IntMat K = kernel_basis(A);
  CHECK(K.cols == 2);
  for (int j = 0; j < K.cols; j++) {
    std::vector<Int> x(3);
    for (int i = 0; i < 3; i++) x[size_t(i)] = K.at(i, j);
    auto y = imul_vec(A, x);
    for (const Int& v : y) CHECK(v == 0);
  }
  auto sol = solve_int(from_rows({{2, 0}, {0, 3}}), {Int(4), Int(9)});
  REQUIRE(sol.has_value());
  CHECK((*sol)[0] == 2);
  CHECK((*sol)[1] == 3);
  CHECK_FALSE(solve_int(from_rows({{2}}), {Int(3)}).has_value());
}

TEST_CASE("unimodular inverse") {
  IntMat U = from_rows({{1, 2}, {1, 3}});
  IntMat V = unimodular_inverse(U);
  IntMat P = imul(U, V);
  CHECK(P.at(0, 0) == 1);
  CHECK(P.at(0, 1) == 0);
  CHECK(P.at(1, 0) == 0);
  CHECK(P.at(1, 1) == 1);
}

TEST_CASE("rational matrix kit") {
  Field F = Field::rationals();
  QMat A(2, 2);
  A.at(0, 0) = 1;
  A.at(0, 1) = 2;
  A.at(1, 0) = 3;
  A.at(1, 1) = 4;
  auto inv = inverse(A, F);
  REQUIRE(inv.has_value());
  QMat P = qmul(A, *inv, F);
  CHECK(P == QMat::identity(2));
  CHECK(rank(A, F) == 2);

  QMat S(2, 2);
  S.at(0, 0) = 1;
  S.at(0, 1) = 2;
  S.at(1, 0) = 2;
  S.at(1, 1) = 4;
  CHECK_FALSE(inverse(S, F).has_value());
  CHECK(rank(S, F) == 1);

  // the empty matrix is its own inverse
  auto e = inverse(QMat(0, 0), F);
  REQUIRE(e.has_value());
  CHECK(e->rows == 0);

  auto x = solve_field(A, {Rat(1), Rat(1)}, F);
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Rat(-1));
  CHECK((*x)[1] == Rat(1));
}

TEST_CASE("prime field arithmetic") {
  Field F = Field::prime(5);
  CHECK(F.normalize(Rat(7)) == Rat(2));
  CHECK(F.normalize(Rat(-1)) == Rat(4));
  CHECK(F.normalize(make_rat(1, 2)) == Rat(3));  // 2^-1 = 3 mod 5
  CHECK(F.is_zero(Rat(10)));
  CHECK(F.mul(Rat(3), Rat(4)) == Rat(2));
  CHECK(F.inv(Rat(3)) == Rat(2));
  CHECK_THROWS_AS((void)Field::prime(6), Error);
  CHECK(is_probable_prime(Int(97)));
  CHECK_FALSE(is_probable_prime(Int(91)));
}

TEST_CASE("rational parsing") {
  CHECK(parse_rat("3/4") == make_rat(3, 4));
  CHECK(parse_rat("-2") == Rat(-2));
  CHECK(parse_rat("0") == Rat(0));
  CHECK_THROWS_AS((void)parse_rat("x"), Error);
  CHECK_THROWS_AS((void)parse_rat("1/0"), Error);
  CHECK(rat_str(make_rat(6, 4)) == "3/2");
}

TEST_CASE("abelian group element algebra") {
  AbelianGroup G{1, {Int(4)}};  // Z x Z/4
  GroupElement a = gel_gen(G, 0);
  GroupElement t = gel_gen(G, 1);
  GroupElement s = gel_add(G, gel_smul(G, Int(3), t), gel_smul(G, Int(2), t));
  CHECK(s == gel_add(G, t, gel_zero(G)));  // 5t = t in Z/4
  CHECK(gel_is_zero(G, gel_add(G, a, gel_neg(G, a))));
  CHECK(gel_sub(G, a, a) == gel_zero(G));
  CHECK_FALSE(G.is_finite());
  CHECK_THROWS_AS(G.order(), Error);  // order is defined for finite groups only
  CHECK(AbelianGroup::cyclic(4).order() == 4);
  CHECK(AbelianGroup::cyclic(1).is_trivial());
  CHECK(AbelianGroup::cyclic(0) == AbelianGroup::free(1));
  CHECK(enumerate_elements(AbelianGroup{0, {Int(2), Int(4)}}).size() == 8);
}

TEST_CASE("group homs compose and validate") {
  AbelianGroup Z1 = AbelianGroup::free(1);
  AbelianGroup C4 = AbelianGroup::cyclic(4);
  AbelianGroup C2 = AbelianGroup::cyclic(2);
  GroupHom p4 = proj_hom(Z1, 4);
  GroupHom m;  // C4 -> C2 reduction
  m.source = C4;
  m.target = C2;
  m.images = {gel_gen(C2, 0)};
  CHECK(hom_well_defined(p4));
  CHECK(hom_well_defined(m));
  GroupHom c = hom_compose(m, p4);
  CHECK(c.source == Z1);
  CHECK(c.target == C2);
  CHECK(c.images[0] == gel_gen(C2, 0));

  GroupHom bad;  // C2 -> Z sending the generator to 1 is not well defined
  bad.source = C2;
  bad.target = Z1;
  bad.images = {gel_gen(Z1, 0)};
  CHECK_FALSE(hom_well_defined(bad));
}

TEST_CASE("hom space enumeration") {
  AbelianGroup C2 = AbelianGroup::cyclic(2);
  AbelianGroup C4 = AbelianGroup::cyclic(4);
  AbelianGroup Z1 = AbelianGroup::free(1);
  HomSpaceDesc a = hom_space(C2, Z1);
  CHECK(a.finite);
  CHECK(a.all.size() == 1);  // only the zero map
  HomSpaceDesc b = hom_space(C2, C4);
  CHECK(b.all.size() == 2);  // 0 and 2 mod 4
  HomSpaceDesc c = hom_space(C4, C2);
  CHECK(c.all.size() == 2);
  HomSpaceDesc d = hom_space(Z1, C4);
  CHECK(d.all.size() == 4);
  HomSpaceDesc e = hom_space(Z1, Z1);
  CHECK_FALSE(e.finite);

  auto f = hom_from_constraints(Z1, C4, {gel_smul(Z1, Int(2), gel_gen(Z1, 0))},
                                {gel_smul(C4, Int(2), gel_gen(C4, 0))});
  REQUIRE(f.has_value());
  CHECK(hom_apply(*f, gel_smul(Z1, Int(2), gel_gen(Z1, 0))) ==
        gel_smul(C4, Int(2), gel_gen(C4, 0)));
  // 2g -> 1 has no solution in C4
  CHECK_FALSE(hom_from_constraints(Z1, C4, {gel_smul(Z1, Int(2), gel_gen(Z1, 0))},
                                   {gel_gen(C4, 0)})
                  .has_value());
}

TEST_CASE("cokernel and subgroup machinery") {
  // Z^2 / <(2,0),(0,3)> = C2 x C3 = C6
  IntMat R = from_rows({{2, 0}, {0, 3}});
  Cokernel ck = cokernel(R, 2);
  CHECK(ck.group == AbelianGroup::cyclic(6));

  AbelianGroup Z2 = AbelianGroup::free(2);
  GroupElement v = gel_from_vec(Z2, {Int(2), Int(4)});
  SubgroupResult sub = subgroup_of(Z2, {v});
  CHECK(sub.group == AbelianGroup::free(1));
  CHECK(sub.coordinates(gel_from_vec(Z2, {Int(4), Int(8)})).has_value());
  CHECK_FALSE(sub.coordinates(gel_from_vec(Z2, {Int(1), Int(2)})).has_value());

  QuotientResult qr = subgroup_quotient(Z2, {gel_from_vec(Z2, {Int(0), Int(2)})});
  CHECK(qr.group == AbelianGroup{1, {Int(2)}});
}

TEST_CASE("diagram limits") {
  AbelianGroup Z1 = AbelianGroup::free(1);
  AbelianGroup C2 = AbelianGroup::cyclic(2);
  AbelianGroup C4 = AbelianGroup::cyclic(4);
  AbelianGroup C3 = AbelianGroup::cyclic(3);

  SUBCASE("pullback of two projections from Z") {
    std::vector<AbelianGroup> nodes = {Z1, C2, C4};
    std::vector<DiagramArrow> arrows;
    arrows.push_back({0, 1, proj_hom(Z1, 2)});
    arrows.push_back({0, 2, proj_hom(Z1, 4)});
    DiagramLimit lim = diagram_limit(nodes, arrows);
    CHECK(lim.group == Z1);  // compatible triples are determined by the Z slot
  }
  SUBCASE("isolated torsion node survives as a factor") {
    std::vector<AbelianGroup> nodes = {Z1, C3};
    DiagramLimit lim = diagram_limit(nodes, {});
    CHECK(lim.group == AbelianGroup{1, {Int(3)}});
  }
  SUBCASE("self-loop by negation pins Z to 0 and C2 stays") {
    GroupHom negz = GroupHom::identity(Z1);
    negz.images[0] = gel_neg(Z1, gel_gen(Z1, 0));
    DiagramLimit a = diagram_limit({Z1}, {{0, 0, negz}});
    CHECK(a.group.is_trivial());
    GroupHom negc = GroupHom::identity(C2);
    negc.images[0] = gel_neg(C2, gel_gen(C2, 0));
    DiagramLimit b = diagram_limit({C2}, {{0, 0, negc}});
    CHECK(b.group == C2);  // -1 = 1 on C2
  }
}

TEST_CASE("free presentations abelianize with torsion") {
  GroupPresentation p;
  p.generators = {"g"};
  p.relators = {word_reduce({{0, 1}, {0, 1}, {0, 1}})};  // g^3
  Abelianized a = abelianize(p);
  CHECK(a.group == AbelianGroup::cyclic(3));

  GroupPresentation f;
  f.generators = {"u", "v"};
  Abelianized b = abelianize(f);
  CHECK(b.group == AbelianGroup::free(2));

  // commutator collapses to nothing under abelianization
  GroupPresentation c;
  c.generators = {"u", "v"};
  c.relators = {word_reduce({{0, 1}, {1, 1}, {0, -1}, {1, -1}})};
  CHECK(abelianize(c).group == AbelianGroup::free(2));

  Word w = word_concat({{0, 1}, {1, 1}}, {{1, -1}, {0, 1}});
  CHECK(w == Word{{0, 1}, {0, 1}});
  CHECK(word_inverse(Word{{0, 1}, {1, -1}}) == Word{{1, 1}, {0, -1}});
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

using namespace gct;

TEST_CASE("one-dimensional hom pairs of the two-path category") {
  ModelFile m = load_example("bq", Rat(1));
  const PresentedCategory& C = *m.category;
  auto pairs = schurian_morphisms(C);
  // every pair except (x,z) has a one-dimensional nonzero hom-space
  std::vector<std::pair<int, int>> want = {{0, 0}, {0, 1}, {0, 3}, {1, 1}, {1, 2},
                                           {1, 3}, {2, 2}, {2, 3}, {3, 3}};
  CHECK(pairs == want);
}

TEST_CASE("nilpotent loop has no one-dimensional hom pairs") {
  ModelFile m = load_example("kcp2");
  CHECK(schurian_morphisms(*m.category).empty());
}

TEST_CASE("closure under composition detects the escaping basis element") {
  ModelFile m = load_example("bq", Rat(1));
  SGClosure sg = sg_closure(*m.category);
  CHECK_FALSE(sg.is_sg);
  REQUIRE(sg.witness.has_value());
  // gamma, the first basis element of hom(x,z), is not a composite of
  // one-dimensional morphisms
  CHECK(*sg.witness == BasisRef{0, 2, 0});
  // the closure does contain the composite beta.alpha
  const QMat& span = sg.span[size_t(0 * int(m.category->quiver.vertices.size()) + 2)];
  REQUIRE(span.rows == 1);
  CHECK(span.at(0, 0) == 0);
  CHECK(span.at(0, 1) == 1);
}

TEST_CASE("single-loop category with no one-dimensional seeds") {
  ModelFile m = load_example("kcp2");
  SGClosure sg = sg_closure(*m.category);
  CHECK_FALSE(sg.is_sg);
  REQUIRE(sg.witness.has_value());
  CHECK(*sg.witness == BasisRef{0, 0, 0});
}

TEST_CASE("generation holds for the square, roundtrip, and linear quivers") {
  for (const char* name : {"square", "roundtrip", "a3"}) {
    CAPTURE(name);
    ModelFile m = load_example(name);
    SGClosure sg = sg_closure(*m.category);
    CHECK(sg.is_sg);
    CHECK_FALSE(sg.witness.has_value());
  }
}

TEST_CASE("constrictedness flags a surviving path parallel to an arrow") {
  ModelFile m = load_example("bq", Rat(1));
  ConstrictedCheck cc = is_constricted(*m.category);
  CHECK_FALSE(cc.ok);
  REQUIRE(cc.witness.has_value());
  CHECK(cc.witness->first == 2);  // gamma
  CHECK(cc.witness->second.base == 0);
  CHECK(cc.witness->second.seq == std::vector<int>{0, 1});  // beta after alpha
}

TEST_CASE("diagonal shortcut across a commuting square is not constricted") {
  PresentedCategory C = make_diagonal_square();
  ConstrictedCheck cc = is_constricted(C);
  CHECK_FALSE(cc.ok);
  REQUIRE(cc.witness.has_value());
  CHECK(cc.witness->first == 4);  // the diagonal arrow e
  CHECK(cc.witness->second.seq == std::vector<int>{0, 2});  // c after a
}

TEST_CASE("constrictedness holds without parallel survivors") {
  for (const char* name : {"square", "roundtrip", "a3"}) {
    CAPTURE(name);
    ModelFile m = load_example(name);
    CHECK(is_constricted(*m.category).ok);
  }
}

TEST_CASE("a parallel arrow or an identity path can be the survivor") {
  // the second of two parallel arrows survives outside the ideal
  ModelFile k = load_example("kronecker");
  ConstrictedCheck ck = is_constricted(*k.category);
  CHECK_FALSE(ck.ok);
  REQUIRE(ck.witness.has_value());
  CHECK(ck.witness->first == 0);
  CHECK(ck.witness->second.seq == std::vector<int>{1});
  // the identity path at the loop vertex survives as well
  ModelFile l = load_example("kcp2");
  ConstrictedCheck cl = is_constricted(*l.category);
  CHECK_FALSE(cl.ok);
  REQUIRE(cl.witness.has_value());
  CHECK(cl.witness->first == 0);
  CHECK(cl.witness->second.seq.empty());
}

TEST_CASE("homogeneity partition joins paths coupled by a relation") {
  ModelFile m = load_example("bq", Rat(1));
  // hom(x,z'): the relation ties delta.gamma to delta.beta.alpha
  auto blocks = homogeneity_partition(*m.category, 0, 3);
  REQUIRE(blocks.size() == 1);
  CHECK(blocks[0] == std::vector<int>{0, 1});
  // hom(x,z): no relation, so the two paths stay separate
  auto independent = homogeneity_partition(*m.category, 0, 2);
  REQUIRE(independent.size() == 2);
  CHECK(independent[0] == std::vector<int>{0});
  CHECK(independent[1] == std::vector<int>{1});
}

TEST_CASE("homogeneity partition splits when the coefficient vanishes") {
  ModelFile m = load_example("bq", Rat(0));
  auto blocks = homogeneity_partition(*m.category, 0, 3);
  REQUIRE(blocks.size() == 2);
  CHECK(blocks[0] == std::vector<int>{0});
  CHECK(blocks[1] == std::vector<int>{1});
}

TEST_CASE("partition core on bare ideals") {
  Field F = Field::rationals();

  SUBCASE("disjoint supports give separate blocks") {
    QMat ideal(2, 3);
    ideal.at(0, 0) = 1;
    ideal.at(0, 2) = 1;
    ideal.at(1, 1) = 1;
    auto blocks = partition_core(3, ideal, {0, 1}, F);
    REQUIRE(blocks.size() == 2);
    CHECK(blocks[0] == std::vector<int>{0, 2});
    CHECK(blocks[1] == std::vector<int>{1});
  }

  SUBCASE("chained supports merge into one block") {
    // RREF of rows (1,1,0),(0,1,1); no proper partition splits this ideal
    QMat ideal(2, 3);
    ideal.at(0, 0) = 1;
    ideal.at(0, 2) = -1;
    ideal.at(1, 1) = 1;
    ideal.at(1, 2) = 1;
    auto blocks = partition_core(3, ideal, {0, 1}, F);
    REQUIRE(blocks.size() == 1);
    CHECK(blocks[0] == std::vector<int>{0, 1, 2});
  }

  SUBCASE("empty ideal gives singletons") {
    auto blocks = partition_core(3, QMat(0, 3), {}, F);
    REQUIRE(blocks.size() == 3);
    for (int i = 0; i < 3; ++i) CHECK(blocks[size_t(i)] == std::vector<int>{i});
  }

  SUBCASE("path count above the cap is refused") {
    CHECK_THROWS_WITH_AS(partition_core(25, QMat(0, 25), {}, F),
                         doctest::Contains("partition cap"), Error);
  }
}

TEST_CASE("homotopy of the two-path presentation") {
  SUBCASE("generic coefficient collapses the chord") {
    ModelFile m = load_example("bq", Rat(1));
    HomotopyData H = presentation_homotopy(*m.category, 0);
    CHECK(H.root == 0);
    CHECK(H.pi1.str() == "< beta | beta^-1 >");
    CHECK(H.chord_of_arrow == std::vector<int>{-1, 0, -1, -1});
    CHECK(abelianize(H.pi1).group.is_trivial());
  }
  SUBCASE("vanishing coefficient frees the chord") {
    ModelFile m = load_example("bq", Rat(0));
    HomotopyData H = presentation_homotopy(*m.category, 0);
    CHECK(H.pi1.generators == std::vector<std::string>{"beta"});
    CHECK(H.pi1.relators.empty());
    CHECK(abelianize(H.pi1).group == AbelianGroup::free(1));
  }
}

TEST_CASE("homotopy of the commuting square is trivial") {
  ModelFile m = load_example("square");
  HomotopyData H = presentation_homotopy(*m.category, 0);
  REQUIRE(H.pi1.generators.size() == 1);
  CHECK(H.pi1.generators[0] == "d");
  REQUIRE(H.pi1.relators.size() == 1);
  CHECK(abelianize(H.pi1).group.is_trivial());
}

TEST_CASE("homotopy of the roundtrip is free of rank one") {
  ModelFile m = load_example("roundtrip");
  HomotopyData H = presentation_homotopy(*m.category, 0);
  CHECK(H.pi1.str() == "< b |  >");
  CHECK(H.chord_of_arrow == std::vector<int>{-1, 0});
  CHECK(abelianize(H.pi1).group == AbelianGroup::free(1));
}

TEST_CASE("homotopy of a tree quiver has no generators") {
  ModelFile m = load_example("a3");
  HomotopyData H = presentation_homotopy(*m.category, 0);
  CHECK(H.pi1.generators.empty());
  CHECK(H.pi1.relators.empty());
  CHECK(abelianize(H.pi1).group.is_trivial());
}

TEST_CASE("largest connected grading of the square is trivial") {
  ModelFile m = load_example("square");
  UniversalGrading U = universal_grading(*m.category, 0);
  CHECK(U.grading.group.is_trivial());
  CHECK(validate_grading(U.grading).ok);
  CHECK(is_connected_grading(U.grading, 0));
  for (int s = 0; s < 4; ++s)
    for (int t = 0; t < 4; ++t)
      for (int i = 0; i < m.category->hom(s, t).dim(); ++i)
        CHECK(gel_is_zero(U.grading.group, U.grading.deg(BasisRef{s, t, i})));
}

TEST_CASE("largest connected grading of the roundtrip is free of rank one") {
  ModelFile m = load_example("roundtrip");
  UniversalGrading U = universal_grading(*m.category, 0);
  CHECK(U.grading.group == AbelianGroup::free(1));
  CHECK(validate_grading(U.grading).ok);
  CHECK(is_connected_grading(U.grading, 0));
  // the tree arrow carries degree zero, the chord the generator
  CHECK(gel_is_zero(U.grading.group, U.grading.deg(BasisRef{0, 1, 0})));
  CHECK(U.grading.deg(BasisRef{1, 0, 0}) == gel_gen(U.grading.group, 0));
}

TEST_CASE("largest connected grading needs generation by thin morphisms") {
  ModelFile bq = load_example("bq", Rat(1));
  CHECK_THROWS_WITH_AS(universal_grading(*bq.category, 0),
                       doctest::Contains("one-dimensional hom-spaces"), Error);
  ModelFile kcp = load_example("kcp2");
  CHECK_THROWS_WITH_AS(universal_grading(*kcp.category, 0),
                       doctest::Contains("one-dimensional hom-spaces"), Error);
}

TEST_CASE("grading enumeration needs a constricted presentation") {
  ModelFile m = load_example("bq", Rat(1));
  CHECK_THROWS_WITH_AS(enumerate_constricted_gradings(*m.category, AbelianGroup::cyclic(2), 0),
                       doctest::Contains("parallel"), Error);
}

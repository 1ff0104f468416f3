#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

using namespace gct;

TEST_CASE("every example file survives an emit/parse roundtrip") {
  for (const CorpusEntry& e : example_corpus()) {
    CAPTURE(e.name);
    std::optional<Rat> q = e.needs_q ? std::optional<Rat>(Rat(1)) : std::nullopt;
    ModelFile m = parse_model(e.file, q);
    Json emitted = model_json(m);
    ModelFile back = parse_model(emitted, std::nullopt);  // emission resolves q
    CHECK(model_equal(m, back));
    // emission is a fixpoint
    CHECK(model_json(back) == emitted);
  }
}

TEST_CASE("missing category key") {
  CHECK_THROWS_WITH_AS(parse_model(Json::object(), std::nullopt),
                       doctest::Contains("missing required key 'category'"), Error);
}

TEST_CASE("unknown keys are rejected with their path") {
  Json j = corpus_entry("a3")->file;
  j["category"]["arrowz"] = Json::array();
  CHECK_THROWS_WITH_AS(parse_model(j, std::nullopt), doctest::Contains("unknown key 'arrowz'"),
                       Error);
}

TEST_CASE("relations must reference known arrows") {
  Json j = corpus_entry("square")->file;
  j["category"]["relations"][0]["terms"][0]["path"][0] = "nope";
  try {
    parse_model(j, std::nullopt);
    FAIL("expected a schema error");
  } catch (const Error& e) {
    CHECK(e.code == ErrCode::Schema);
    CHECK(std::string(e.what()).find("nope") != std::string::npos);
    // the error carries the JSON path of the offending entry
    CHECK(std::string(e.what()).find("relations") != std::string::npos);
  }
}

TEST_CASE("coefficient grammar") {
  auto coef = [](const char* s, std::optional<Rat> q) {
    return parse_rat_json(Json(s), q, "$");
  };
  CHECK(coef("3/4", std::nullopt) == make_rat(3, 4));
  CHECK(coef("-2", std::nullopt) == Rat(-2));
  CHECK(parse_rat_json(Json(5), std::nullopt, "$") == Rat(5));
  CHECK(coef("q", Rat(7)) == Rat(7));
  CHECK(coef("-q", Rat(7)) == Rat(-7));
  CHECK(coef("2*q", make_rat(1, 2)) == Rat(1));
  CHECK(coef("1/2*q", Rat(4)) == Rat(2));
  CHECK_THROWS_WITH_AS(coef("-q", std::nullopt), doctest::Contains("pass --q"), Error);
  CHECK_THROWS_WITH_AS(coef("3//4", std::nullopt), doctest::Contains("malformed coefficient"),
                       Error);
  CHECK_THROWS_WITH_AS(coef("", std::nullopt), doctest::Contains("empty coefficient"), Error);
}

TEST_CASE("gradings require a degree for every basis element") {
  Json j = corpus_entry("kcp2")->file;
  j["gradings"]["natural"]["degrees"].erase("v->v#1");
  CHECK_THROWS_AS(parse_model(j, std::nullopt), Error);
}

TEST_CASE("basis reference keys are parsed and range checked") {
  ModelFile m = load_example("bq", Rat(1));
  const PresentedCategory& C = *m.category;
  BasisRef r = parse_ref_key(C, "x->z#1", "$");
  CHECK(r == BasisRef{0, 2, 1});
  CHECK(ref_key(C, r) == "x->z#1");
  CHECK_THROWS_WITH_AS(parse_ref_key(C, "x->z#2", "$"), doctest::Contains("out of range"),
                       Error);
  CHECK_THROWS_WITH_AS(parse_ref_key(C, "x->z", "$"), doctest::Contains("src->tgt#index"),
                       Error);
  CHECK_THROWS_WITH_AS(parse_ref_key(C, "x->nope#0", "$"), doctest::Contains("nope"), Error);
}

TEST_CASE("smash products survive an emit/parse roundtrip") {
  ModelFile m = load_example("kcp2");
  SmashCategory S = build_smash(*m.category, *m.grading("natural"));
  Json emitted = smash_json(S);
  SmashFile back = parse_smash(emitted, std::nullopt);
  CHECK(back.smash.nobj() == S.nobj());
  CHECK(back.smash.elems == S.elems);
  for (int o1 = 0; o1 < S.nobj(); ++o1)
    for (int o2 = 0; o2 < S.nobj(); ++o2) CHECK(back.smash.hom_at(o1, o2) == S.hom_at(o1, o2));
  CHECK(verify_covering(back.smash).ok);
  // the stored table is taken at face value, so corruption is observable
  Json doctored = emitted;
  for (auto& cell : doctored["hom"]) {
    if (!cell.empty()) {
      cell = Json::array();
      break;
    }
  }
  SmashFile bad = parse_smash(doctored, std::nullopt);
  CHECK_FALSE(verify_covering(bad.smash).ok);
}

TEST_CASE("report text and json shapes") {
  Report r;
  r.command = "demo check";
  r.add("first", true, "looks right");
  r.add("second", false);
  CHECK_FALSE(r.all_pass());
  CHECK(r.exit_code() == 1);
  CHECK(r.text() == "# demo check\n[PASS] first: looks right\n[FAIL] second\npassed 1/2\n");
  Json j = r.json();
  CHECK(j["command"] == "demo check");
  CHECK(j["verdicts"].size() == 2);
  CHECK(j["verdicts"][0]["name"] == "first");
  CHECK(j["verdicts"][0]["pass"] == true);
  CHECK(j["verdicts"][1]["pass"] == false);
  CHECK(j["data"].is_object());

  Report ok;
  ok.command = "demo";
  ok.add("only", true);
  CHECK(ok.all_pass());
  CHECK(ok.exit_code() == 0);
}

TEST_CASE("the parameterized example passes at a fresh parameter value") {
  Report r = run_example("bq", Rat(5));
  CHECK(r.all_pass());
}

TEST_CASE("unknown example names list the corpus") {
  CHECK_THROWS_WITH_AS(run_example("nope", std::nullopt), doctest::Contains("bq"), Error);
}

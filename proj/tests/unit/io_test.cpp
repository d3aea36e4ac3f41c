#include <gtest/gtest.h>

#include "reeskit/error.hpp"
#include "reeskit/families.hpp"
#include "reeskit/homology.hpp"
#include "reeskit/io.hpp"
#include "reeskit/labeling.hpp"
#include "reeskit/series.hpp"

using namespace reeskit;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::PreconditionFailed;
}

}  // namespace

TEST(PosetJson, ChainShape) {
  auto j = poset_to_json(chain(2));
  EXPECT_EQ(j["elements"].size(), 3U);
  EXPECT_EQ(j["covers"], Json::parse("[[0,1],[1,2]]"));
}

TEST(PosetJson, RoundTripsFamilies) {
  for (const char* spec : {"B:3", "Bmu:2,1", "Bq:2,3", "T:2,3", "NC:5"}) {
    auto p = family_from_spec(spec);
    auto j = poset_to_json(p);
    auto back = poset_from_json(j);
    EXPECT_TRUE(are_isomorphic(p, back)) << spec;
    EXPECT_EQ(poset_to_json(back), j) << spec;
    EXPECT_EQ(poset_to_json(poset_from_json_text(j.dump())), j);
  }
}

TEST(PosetJson, Errors) {
  EXPECT_EQ(code_of([] { poset_from_json_text("{"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { poset_from_json_text("[]"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { poset_from_json_text(R"({"elements":[1],"covers":[]})"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { poset_from_json_text(R"({"elements":["a"],"covers":[[0]]})"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { poset_from_json_text(R"({"elements":["a","b"],"covers":[[0,1],[1,0]]})"); }),
            ErrorCode::CycleDetected);
  EXPECT_EQ(code_of([] { poset_from_json_text(R"({"elements":["a","b","c"],"covers":[[0,1],[1,2],[0,2]]})"); }),
            ErrorCode::NotReduced);
  auto p = poset_from_json_text(R"({"elements":["a","b","c"],"covers":[[0,1],[1,2],[0,2]]})", {.auto_reduce = true});
  EXPECT_EQ(p.covers().size(), 2U);
}

TEST(LabelJson, RoundTrips) {
  auto L = LabelPoset::product(LabelPoset::total_order(3), LabelPoset::adjoin_bottom(LabelPoset::total_order(1)));
  EXPECT_EQ(label_poset_from_json(label_poset_to_json(L)), L);
  EXPECT_EQ(code_of([] { label_poset_from_json(Json{{"kind", "tree"}}); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { label_poset_from_json(Json{{"kind", "total"}}); }), ErrorCode::ParseError);

  auto b = boolean(3);
  auto lam = boolean_labeling(b, 3);
  auto lj = labeling_to_json(b, lam);
  auto back = labeling_from_json(b, lj);
  for (const auto& [x, y] : b.covers()) EXPECT_EQ(back.label(x, y), lam.label(x, y));

  auto c2 = chain(2);
  auto rl = rees_el_labeling(remove_min(b), hat_of_minus(b, lam), c2, constant_labeling(c2));
  auto rj = labeling_to_json(rl.hat, rl.labeling);
  auto rback = labeling_from_json(rl.hat, rj);
  EXPECT_EQ(rback.target(), rl.labeling.target());
  EXPECT_TRUE(is_el_labeling(rl.hat, rback).ok);

  Json partial = lj;
  partial["labels"].erase(partial["labels"].begin().key());
  EXPECT_EQ(code_of([&] { labeling_from_json(b, partial); }), ErrorCode::PreconditionFailed);
}

TEST(ResultJson, BettiAndIdentity) {
  auto j = betti_to_json(betti(remove_min(rees_product(boolean(2), chain(2))), {.smith = true}));
  EXPECT_TRUE(j.contains("rational"));
  EXPECT_TRUE(j.contains("mod2"));
  EXPECT_TRUE(j.contains("torsion"));
  auto v = identity_verdict_to_json(verify_identity("ges3", 2, 3));
  EXPECT_EQ(v["ok"], false);
  EXPECT_EQ(identity_verdict_to_json(verify_identity("ges4", 2, 3))["ok"], true);
}

#include <gtest/gtest.h>

#include "ordvec/error.hpp"
#include "ordvec/gallery.hpp"
#include "ordvec/random_instances.hpp"
#include "ordvec/serialize.hpp"

using namespace ordvec;
namespace oj = ordvec::json;
using Json = nlohmann::json;

TEST(Serialize, Rationals) {
  EXPECT_EQ(oj::to_json(Rational(-3, 7)), Json("-3/7"));
  EXPECT_EQ(oj::to_json(Rational(4)), Json("4"));
  EXPECT_EQ(oj::rational_from_json(Json("6/4")), Rational(3, 2));
  EXPECT_EQ(oj::rational_from_json(Json(-5)), Rational(-5));
  EXPECT_THROW(oj::rational_from_json(Json(0.5)), InvalidInput);
  EXPECT_THROW(oj::rational_from_json(Json("1/0")), InvalidInput);
  EXPECT_THROW(oj::rational_from_json(Json::array()), InvalidInput);
}

TEST(Serialize, Vectors) {
  RVector v{Rational(1, 2), -3, 0};
  EXPECT_EQ(oj::vector_from_json(oj::to_json(v)), v);
  EXPECT_EQ(oj::vector_from_json(Json::parse(R"([1, "-2/3"])"), 2), (RVector{1, Rational(-2, 3)}));
  EXPECT_THROW(oj::vector_from_json(Json::parse("[1, 2]"), 3), DimensionMismatch);
  EXPECT_THROW(oj::vector_from_json(Json("1,2")), InvalidInput);
}

TEST(Serialize, Cones) {
  for (const Cone& k : {Cone::orthant(3), Cone::generators({RVector{1, 0, 0}, RVector{1, 1, 0}, RVector{0, 0, 1}}, 3)}) {
    Cone back = oj::cone_from_json(oj::to_json(k), 3);
    EXPECT_EQ(back.kind(), k.kind());
    EXPECT_EQ(oj::to_json(back), oj::to_json(k));
  }
  EXPECT_EQ(oj::cone_from_json(Json::parse(R"({"kind":"lex2"})"), 2).kind(), Cone::Kind::Lex2);
  EXPECT_THROW(oj::cone_from_json(Json::parse(R"({"kind":"ice"})"), 2), InvalidInput);
  EXPECT_THROW(oj::cone_from_json(Json::parse(R"({"kind":"halfspace"})"), 2), InvalidInput);
  EXPECT_THROW(oj::cone_from_json(Json::parse(R"({"kind":"halfspace","matrix":[[1,0,0]]})"), 2), InvalidInput);
}

TEST(Serialize, InstanceRoundTrip) {
  Sampler rng(3);
  for (int i = 0; i < 20; ++i) {
    RandomInstance r = random_instance(rng);
    oj::Instance inst{r.space, {random_in_ideal(rng, r.space)}, {rng.vector(r.space.dim(), -2, 2)}, r.order_unit};
    oj::Instance back = oj::parse_instance(oj::to_json(inst).dump());
    EXPECT_EQ(back, inst);
  }
  for (const auto& g : make_lex_instances()) {
    oj::Instance inst{g.space, g.vectors, {}, std::nullopt};
    EXPECT_EQ(oj::instance_from_json(oj::to_json(inst)), inst);
  }
}

TEST(Serialize, InstanceErrors) {
  EXPECT_THROW(oj::parse_instance("{"), InvalidInput);
  EXPECT_THROW(oj::parse_instance("[]"), InvalidInput);
  EXPECT_THROW(oj::parse_instance(R"({"cone":{"kind":"lex2"},"M":[[1,0]]})"), InvalidInput);
  EXPECT_THROW(oj::parse_instance(R"({"dimension":0,"cone":{"kind":"lex2"},"M":[]})"), InvalidInput);
  EXPECT_THROW(oj::parse_instance(R"({"dimension":2,"cone":{"kind":"lex2"},"M":[[1,0,0]]})"), InvalidInput);
  // A non-positive element of M is rejected by MajorizedSpace.
  EXPECT_THROW(oj::parse_instance(R"({"dimension":2,"cone":{"kind":"halfspace","matrix":[[1,0],[0,1]]},"M":[[1,-1]]})"),
               InvalidInput);
  auto ok = oj::parse_instance(
      R"({"dimension":2,"cone":{"kind":"halfspace","matrix":[[1,0],[0,1]]},"M":[[1,0],[0,"1"]],"vectors":[["1/2",3]]})");
  EXPECT_EQ(ok.vectors.front(), (RVector{Rational(1, 2), 3}));
}

TEST(Serialize, NormAndVerdicts) {
  NormResult inf;
  EXPECT_EQ(oj::to_json(inf, true)["value"], Json("infinite"));
  MajorizedSpace d(Cone::orthant(2), PositiveSet{{RVector{1, 0}, RVector{0, 1}}});
  auto r = norm_p(d, RVector{1, -2});
  Json j = oj::to_json(r, true);
  EXPECT_EQ(j["value"], Json("3"));
  EXPECT_TRUE(j["attained"].get<bool>());
  EXPECT_TRUE(j.contains("witness"));
  EXPECT_FALSE(oj::to_json(r, false).contains("witness"));

  auto v = check_coherent(d);
  EXPECT_EQ(oj::verdict_from_json(oj::to_json(v, true)), v);
  auto w = check_coherent(make_lex_instances()[1].space);
  Json wj = oj::to_json(w, true);
  EXPECT_EQ(wj["verdict"], Json("incoherent"));
  EXPECT_EQ(oj::verdict_from_json(wj), w);
  EXPECT_THROW(oj::verdict_from_json(Json::parse(R"({"verdict":"maybe"})")), InvalidInput);
}

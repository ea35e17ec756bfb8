#include <gtest/gtest.h>

#include <algorithm>

#include "surprise/kripke.hpp"
#include "surprise/model_io.hpp"
#include "surprise/random.hpp"

using namespace surprise;

namespace {

std::size_t count(const std::string& s, std::string_view needle) {
  std::size_t n = 0;
  for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
  return n;
}

} // namespace

TEST(Json, RoundTripBuiltIns) {
  for (const KripkeModel* m : {&universal_model()}) EXPECT_EQ(model_from_json_string(model_to_json_string(*m)), *m);
  const auto s = standard_models();
  EXPECT_EQ(model_from_json_string(model_to_json_string(s.full)), s.full);
  EXPECT_EQ(model_from_json_string(model_to_json_string(s.days)), s.days);
  EXPECT_EQ(model_to_json_string(model_from_json_string(model_to_json_string(s.full))), model_to_json_string(s.full));
}

TEST(Json, RoundTripRandom) {
  Rng rng(4);
  for (int i = 0; i < 200; ++i) {
    const KripkeModel m = random_model(rng, FrameClass::General);
    ASSERT_EQ(model_from_json(model_to_json(m)), m);
  }
}

TEST(Json, Counts) {
  EXPECT_EQ(model_to_json(universal_model())["worlds"].size(), 192u);
  EXPECT_EQ(model_to_json(standard_models().days)["worlds"].size(), 5u);
  const auto j = model_to_json(standard_models().full);
  EXPECT_EQ(j["worlds"][5]["run"], "none");
  EXPECT_EQ(j["edges"][0][0], "w_Mo");
}

TEST(Json, Rejections) {
  EXPECT_THROW(model_from_json_string(R"({"worlds":[],"edges":[],"extra":1})"), ModelFormatError);
  EXPECT_THROW(model_from_json_string(R"({"worlds":[{"id":"a","run":"Mo","x":0}],"edges":[]})"), ModelFormatError);
  EXPECT_THROW(model_from_json_string(R"({"worlds":[{"id":"a","run":"Sa"}],"edges":[]})"), ModelFormatError);
  EXPECT_THROW(model_from_json_string(R"({"worlds":[{"id":"a","run":"Mo"}],"edges":[["a","b"]]})"), ModelFormatError);
  EXPECT_THROW(model_from_json_string(R"({"worlds":[{"id":"a","run":"Mo"},{"id":"a","run":"Tu"}],"edges":[]})"),
               ModelFormatError);
  EXPECT_THROW(model_from_json_string(R"({"worlds":[{"id":"a","run":"Mo"}],"edges":[["a"]]})"), ModelFormatError);
  EXPECT_THROW(model_from_json_string(R"({"worlds":[{"id":"","run":"Mo"}],"edges":[]})"), ModelFormatError);
  EXPECT_THROW(model_from_json_string(R"({"worlds":[]})"), ModelFormatError);
  EXPECT_THROW(model_from_json_string("[1,2"), ModelFormatError);
  EXPECT_NO_THROW(model_from_json_string(R"({"edges":[],"worlds":[{"id":"a","run":"none"}]})"));
}

TEST(Dot, Shape) {
  const std::string mg = model_to_dot(standard_models().full, "mg");
  EXPECT_EQ(count(mg, "[label="), 6u);
  EXPECT_EQ(count(mg, " -> "), 36u);
  EXPECT_NE(mg.find("\"w_none\" [label=\"w_none:none\"];"), std::string::npos);
  EXPECT_NE(mg.find("\"w_Mo\" -> \"w_Mo\";"), std::string::npos);
  const std::string u = model_to_dot(universal_model());
  EXPECT_EQ(count(u, "[label="), 192u);
  EXPECT_NE(u.find("\"{Mo,Tu}:Tu\" [label=\"{Mo,Tu}:Tu:Tu\"];"), std::string::npos);
}

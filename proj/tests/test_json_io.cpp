#include "confspace/errors.hpp"
#include "confspace/json_io.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>

using namespace confspace;
using namespace confspace::io;
using confspace::testing::make_config;
using confspace::testing::random_config;

namespace {

std::string parse_error_of(const std::function<void()>& f)
{
  try {
    f();
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

} // namespace

TEST(JsonIo, GroupRoundtrip)
{
  const auto j = Json::parse(R"({"n": 3, "generators": [[1,0,2],[0,2,1]]})");
  const auto g = group_from_json(j);
  EXPECT_EQ(g.order(), 6u);
  EXPECT_EQ(group_to_json(g), j);
  EXPECT_EQ(group_from_json(Json::parse(R"({"n": 2, "generators": []})")).order(), 1u);
  EXPECT_THROW(group_from_json(Json::parse(R"({"n": 4, "generators": [[1,0,2,3]], "cap": 1})")),
               ClosureExceedsCap);
}

TEST(JsonIo, GroupErrorsNameTheField)
{
  EXPECT_NE(parse_error_of([] { group_from_json(Json::parse(R"({"generators": []})")); })
                .find("group.n"),
            std::string::npos);
  EXPECT_NE(parse_error_of([] {
              group_from_json(Json::parse(R"({"n": 3, "generators": [[1,0,2],[0,0,1]]})"));
            }).find("group.generators[1]"),
            std::string::npos);
  EXPECT_NE(parse_error_of([] {
              group_from_json(Json::parse(R"({"n": 3, "generators": [[1,0]]})"));
            }).find("arity"),
            std::string::npos);
}

TEST(JsonIo, ConfigurationRoundtripIsExact)
{
  std::mt19937_64 rng(1);
  for (int k = 0; k < 20; ++k) {
    const auto x = random_config(rng, 4, 3);
    const auto text = to_json(x).dump();
    EXPECT_EQ(configuration_from_json(Json::parse(text)), x);
  }
  const auto msg = parse_error_of([] {
    configuration_from_json(Json::parse(R"({"n": 2, "d": 3, "points": [[0,0,0],[1,0]]})"), "a");
  });
  EXPECT_NE(msg.find("a.points[1]"), std::string::npos);
  EXPECT_THROW(configuration_from_json(Json::parse(R"({"n": 1, "d": 1, "points": [["x"]]})")),
               ParseError);
}

TEST(JsonIo, PathRoundtrip)
{
  PathSamples path;
  path.closed = true;
  path.samples = {make_config({{0, 0, 0}, {1, 0, 0}}), make_config({{1, 0, 0}, {0, 0, 0}})};
  const auto back = path_from_json(to_json(path));
  EXPECT_TRUE(back.closed);
  EXPECT_EQ(back.samples, path.samples);
  EXPECT_THROW(path_from_json(Json::parse(R"({"closed": true, "samples": []})")), ParseError);
  EXPECT_THROW(path_from_json(Json::parse(R"({"closed": 1, "samples": []})")), ParseError);

  auto mixed = to_json(path);
  mixed["samples"][1] = to_json(make_config({{0, 0}, {1, 0}}));
  EXPECT_THROW(path_from_json(mixed), ParseError);
}

TEST(JsonIo, LiftResultDeck)
{
  LiftResult r;
  r.lift.samples = {make_config({{0, 0, 0}, {1, 0, 0}}), make_config({{0, 1, 0}, {1, 0, 0}})};
  EXPECT_TRUE(to_json(r)["deck"].is_null());
  r.deck = Permutation({1, 0});
  EXPECT_EQ(to_json(r)["deck"], Json::parse("[1, 0]"));
}

TEST(JsonIo, ComplexTuple)
{
  const auto v = complex_tuple_from_json(Json::parse("[[1, 2], [3.5, -1]]"));
  EXPECT_EQ(v, (ComplexTuple{Complex(1, 2), Complex(3.5, -1)}));
  EXPECT_EQ(to_json(v), Json::parse("[[1.0, 2.0], [3.5, -1.0]]"));
  EXPECT_THROW(complex_tuple_from_json(Json::parse("[[1]]")), ParseError);
}

TEST(JsonIo, Files)
{
  const auto path = (std::filesystem::temp_directory_path() / "confspace_json_io_test.json").string();
  write_json_file(path, Json{{"a", 1}});
  EXPECT_EQ(read_json_file(path), (Json{{"a", 1}}));
  std::remove(path.c_str());
  EXPECT_THROW(read_json_file(path), ParseError);
}

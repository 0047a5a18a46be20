#include "toriclci/json_io.hpp"

#include "toriclci/corpus.hpp"
#include "toriclci/dual_cone.hpp"
#include "toriclci/errors.hpp"
#include "toriclci/ideal_builder.hpp"

#include <doctest.h>

#include <sstream>

using namespace toriclci;

TEST_CASE("input documents round-trip") {
  FreeParamMatrix m = example_fig3();
  nlohmann::json j = input_document_json(m);
  CHECK(j.dump() == R"({"d":4,"rows":[[1],[1,0],[2,-1,-1]]})");
  FreeParamMatrix back = parse_input_document(j);
  CHECK(back.d == m.d);
  REQUIRE(back.rows.size() == m.rows.size());
  for (std::size_t i = 0; i < m.rows.size(); ++i) CHECK(back.rows[i] == m.rows[i]);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_input_document(std::string("not json {")), ParseError);
  CHECK_THROWS_AS(parse_input_document(std::string("[1,2]")), ParseError);
  CHECK_THROWS_AS(parse_input_document(std::string(R"({"rows":[[1]]})")), ParseError);
  CHECK_THROWS_AS(parse_input_document(std::string(R"({"d":3})")), ParseError);
  CHECK_THROWS_AS(parse_input_document(std::string(R"({"d":3,"rows":[[1],["x",1]]})")), ParseError);
  CHECK_THROWS_AS(parse_input_document(std::string(R"({"d":3,"rows":[1,2]})")), ParseError);
}

TEST_CASE("large entries travel as strings") {
  FreeParamMatrix m = make_free_params(2, {{Int("1208925819614629174706176")}});  // 2^80
  nlohmann::json j = input_document_json(m);
  CHECK(j["rows"][0][0].is_string());
  FreeParamMatrix back = parse_input_document(j);
  CHECK(back.rows[0][0] == m.rows[0][0]);
}

TEST_CASE("ideal schema") {
  FreeParamMatrix m = example_fig3();
  IdealPresentation p = minimal_presentation(m, elimination_plan(m));
  nlohmann::json j = ideal_json(p);

  CHECK(j.at("d") == 4);
  REQUIRE(j.at("variables").is_array());
  CHECK(j.at("variables").size() == 7);
  CHECK(j.at("variables")[0] == "z1");
  CHECK(j.at("variables")[6] == "z7");

  REQUIRE(j.at("generators").is_array());
  REQUIRE(j.at("generators").size() == 3);
  const auto& g0 = j.at("generators")[0];
  CHECK(g0.at("plus") == nlohmann::json::array({1, 0, 0, 0, 0, 0, 0}));
  CHECK(g0.at("minus") == nlohmann::json::array({0, 1, 0, 0, 1, 0, 0}));

  const auto& minimal = j.at("minimal");
  CHECK(minimal.at("eliminated") == nlohmann::json{{"z1", {"z2", "z5"}}});
  REQUIRE(minimal.at("generators").size() == 2);
  CHECK(minimal.at("generators")[0].at("plus") == nlohmann::json::array({0, 1, 0, 0, 1, 0, 0}));
  CHECK(minimal.at("generators")[0].at("minus") == nlohmann::json::array({0, 0, 1, 0, 0, 1, 0}));

  CHECK(render(p, RenderFormat::json) == j.dump(2));
}

TEST_CASE("example corpus by name") {
  SUBCASE("fixed instances") {
    CHECK(input_document_json(*example_by_name("fig2")).dump() == R"({"d":3,"rows":[[2],[2,1]]})");
    CHECK(input_document_json(*example_by_name("fig3")).dump() ==
          R"({"d":4,"rows":[[1],[1,0],[2,-1,-1]]})");
    CHECK(input_document_json(*example_by_name("smooth3")).dump() ==
          R"({"d":3,"rows":[[1],[0,1]]})");
  }
  SUBCASE("parametric instances") {
    CHECK(input_document_json(*example_by_name("triangle(4)")).dump() ==
          R"({"d":3,"rows":[[4],[4,-1]]})");
    CHECK(input_document_json(*example_by_name("simplex(4,2)")).dump() ==
          R"({"d":4,"rows":[[2],[0,1],[0,0,1]]})");
    CHECK(input_document_json(*example_by_name("box(2,3)")).dump() ==
          R"({"d":3,"rows":[[2],[3,0]]})");
  }
  SUBCASE("unknown or malformed names") {
    CHECK_FALSE(example_by_name("unknown").has_value());
    CHECK_FALSE(example_by_name("triangle").has_value());
    CHECK_FALSE(example_by_name("triangle(a)").has_value());
    CHECK_FALSE(example_by_name("simplex(4)").has_value());
    CHECK_FALSE(example_by_name("box()").has_value());
  }
}

TEST_CASE("reading a document from a stream") {
  std::istringstream in(R"({"d":2,"rows":[[5]]})");
  FreeParamMatrix m = read_input_document(in);
  CHECK(m.d == 2);
  REQUIRE(m.rows.size() == 1);
  CHECK(m.rows[0][0] == 5);
}

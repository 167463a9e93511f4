#include <doctest.h>

#include <cstdlib>
#include <fstream>

#include "fsind/config.hpp"
#include "fsind/group_spec.hpp"
#include "fsind/report_io.hpp"

using namespace fsind;

TEST_CASE("named families") {
  auto c12 = group_from_spec("cyclic:12");
  CHECK(c12.order() == 12);
  CHECK(c12.contains(Permutation::parse("(1,2,3,4,5,6,7,8,9,10,11,12)")));
  CHECK(group_from_spec("tilde-sym:7").order() == 120);
  CHECK(group_from_spec("tilde-sym:5,7").degree() == 7);
  CHECK(group_from_spec("sym:6").order() == 720);
  CHECK(group_from_spec("alt:7").order() == 2520);
  CHECK(group_from_spec("sym-embed:3,6").order() == 6);
  CHECK(group_from_spec("alt-embed:5,7").order() == 60);
  CHECK(group_from_spec("sym-prime:2,6").order() == 24);
}

TEST_CASE("explicit generators") {
  auto v4 = group_from_spec("gens:(1,2)(3,4);(1,3)(2,4)@4");
  CHECK(v4.order() == 4);
  CHECK(group_from_spec("gens:(1,2)(3,4);(1,3)@4").order() == 8);
  CHECK(group_from_spec("gens:@3").order() == 1);
}

TEST_CASE("round trip") {
  for (const char* text : {"sym:6", "alt:7", "cyclic:12", "sym-embed:3,6", "alt-embed:5,7", "sym-prime:2,6",
                           "tilde-sym:7", "tilde-sym:5,7", "gens:(1,2)(3,4);(1,3)@4"}) {
    auto spec = parse_group_spec(text);
    CHECK(spec.to_string() == text);
    CHECK(parse_group_spec(spec.to_string()) == spec);
  }
  CHECK(parse_group_spec("tilde-sym:7,7").to_string() == "tilde-sym:7");
  CHECK(parse_group_spec("gens:(1 2)(3 4);(3,1)@4").to_string() == "gens:(1,2)(3,4);(1,3)@4");
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_group_spec("sym"), ParseError);
  CHECK_THROWS_AS(parse_group_spec("foo:3"), ParseError);
  CHECK_THROWS_AS(parse_group_spec("sym:3,4"), ParseError);
  CHECK_THROWS_AS(parse_group_spec("gens:(1,2)"), ParseError);
  try {
    parse_group_spec("sym-embed:3;6");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 11);
  }
  CHECK_THROWS_AS(parse_group_spec("gens:(1,5)@4"), ParseError);
}

TEST_CASE("range errors") {
  CHECK_THROWS_AS(parse_group_spec("sym-embed:7,6"), std::invalid_argument);
  CHECK_THROWS_AS(parse_group_spec("tilde-sym:3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_group_spec("sym:0"), std::invalid_argument);
}

TEST_CASE("config parsing") {
  auto c = parse_config(R"({"enumeration_bound": 5000, "seed": 9})");
  CHECK(c.limits.enumeration_bound == 5000);
  CHECK(c.limits.index_bound == 100000);
  CHECK(c.seed == 9);
  CHECK(c.threads == 0);
  CHECK_THROWS_AS(parse_config(R"({"colour": 1})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_config(R"({"seed": -1})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_config("[1]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_config("{"), std::invalid_argument);
}

TEST_CASE("config from the environment") {
  const std::string path = "fsind_test_config.json";
  {
    std::ofstream out(path);
    out << R"({"index_bound": 77, "threads": 2})";
  }
  setenv("FSIND_CONFIG", path.c_str(), 1);
  auto c = resolve_config(std::nullopt);
  CHECK(c.limits.index_bound == 77);
  CHECK(c.threads == 2);
  unsetenv("FSIND_CONFIG");
  CHECK(resolve_config(std::nullopt).limits.index_bound == 100000);
  CHECK(resolve_config(path).threads == 2);
  CHECK_THROWS_AS(load_config("does-not-exist.json"), std::invalid_argument);
  std::remove(path.c_str());
}

TEST_CASE("report formats") {
  auto r = category_scan(group_from_spec("sym:4"), group_from_spec("sym-embed:2,4"), 2);
  auto j = report_to_json(r, "sym:4", "sym-embed:2,4");
  CHECK(j["category"]["G_spec"] == "sym:4");
  CHECK(j["entries"].size() == r.entries.size());
  CHECK_FALSE(j.contains("runtime_seconds"));
  CHECK(report_to_json(r, "sym:4", "sym-embed:2,4", 0.5).contains("runtime_seconds"));
  const auto csv = report_to_csv(r);
  CHECK(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')) == r.entries.size() + 1);
  CHECK(census_to_csv({{3, 6, {34, 20}}}) == "l,n,total,null\n3,6,34,20\n");
}

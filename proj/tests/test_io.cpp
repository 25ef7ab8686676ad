#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "crit2/fixtures.hpp"
#include "crit2/groupio.hpp"
#include "crit2/named.hpp"

using namespace crit2;
using nlohmann::json;

namespace {

// identical construction parameters must reproduce the identical table
void check_roundtrip_exact(const Group& g) {
  json j = json::parse(group_to_json(g).dump());
  Group h = group_from_json(j);
  CHECK(h.n == g.n);
  CHECK(h.mul == g.mul);
  CHECK(h.gens == g.gens);
  CHECK(h.name == g.name);
}

}  // namespace

TEST_CASE("perm spec roundtrip") {
  Group g = a12_sylow();
  json j = group_to_json(g);
  CHECK(j["format"] == "perm");
  CHECK(j["degree"] == 12);
  REQUIRE(j["generators"].size() == 9);
  for (const auto& im : j["generators"]) {
    REQUIRE(im.size() == 12);
    for (const auto& e : im) {
      CHECK(e.get<uint32_t>() >= 1);  // images are 1-based
      CHECK(e.get<uint32_t>() <= 12);
    }
  }
  check_roundtrip_exact(g);
}

TEST_CASE("named spec roundtrip") {
  json j = group_to_json(dihedral(32));
  CHECK(j["format"] == "named");
  CHECK(j["family"] == "dihedral");
  CHECK(j["params"] == json::array({32}));
  check_roundtrip_exact(dihedral(32));
  check_roundtrip_exact(quaternion(16));
  check_roundtrip_exact(unitriangular(3, 4));

  json ja = group_to_json(abelian({4, 4, 4}));
  CHECK(ja["params"] == json::array({4, 4, 4}));
  check_roundtrip_exact(abelian({4, 4, 4}));
}

TEST_CASE("extension spec roundtrip") {
  Group g = on_sylow();
  json j = group_to_json(g);
  CHECK(j["format"] == "extension");
  REQUIRE(j["steps"].size() == 2);
  CHECK(j["steps"][0]["index"] == 4);
  CHECK(j["steps"][1]["index"] == 2);
  CHECK(j["base"]["format"] == "named");
  check_roundtrip_exact(g);
  check_roundtrip_exact(hs_sylow());
}

TEST_CASE("cayley fallback roundtrip") {
  Group g = direct_product(dihedral(8), quaternion(8));
  json j = group_to_json(g);
  CHECK(j["format"] == "cayley");
  CHECK(j["table"].size() == 64);
  check_roundtrip_exact(g);
}

TEST_CASE("file roundtrip and io errors") {
  std::string path = "io_test_group.json";
  Group g = fixture("sd32");
  write_group_file(g, path);
  Group h = read_group_file(path);
  CHECK(h.mul == g.mul);
  CHECK(h.name == "sd32");
  std::remove(path.c_str());

  CHECK_THROWS_AS(read_group_file("no/such/dir/x.json"), Error);

  std::ofstream(path) << "{ not json";
  try {
    read_group_file(path);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind == Err::malformed);
    // message names the offending file
    CHECK(std::string(e.what()).find(path) != std::string::npos);
  }
  std::remove(path.c_str());
}

TEST_CASE("malformed specs are rejected") {
  auto rej = [](const char* text) {
    CHECK_THROWS_AS(group_from_json(json::parse(text)), Error);
  };
  rej("{}");                                             // no format
  rej("{\"format\": \"nope\"}");                         // unknown format
  rej("{\"format\": \"perm\", \"generators\": []}");     // missing degree
  rej("{\"format\": \"perm\", \"degree\": 3, \"generators\": [[0,1,2]]}");  // 0-based images
  rej("{\"format\": \"perm\", \"degree\": 3, \"generators\": [[1,1,2]]}");  // not a bijection
  rej("{\"format\": \"cayley\", \"table\": [[0,1],[1]]}");                  // ragged
  rej("{\"format\": \"cayley\", \"table\": [[0,1],[1,1]]}");                // not Latin
  rej("{\"format\": \"named\", \"family\": \"icosahedral\"}");
  rej("{\"format\": \"named\", \"family\": \"dihedral\", \"params\": [8, 2]}");
  rej("{\"format\": \"extension\", \"base\": {\"format\": \"named\", \"family\": \"cyclic\","
      " \"params\": [4]}, \"steps\": [{\"index\": 2, \"phi\": [[0]]}]}");   // 0 in a word
  rej("{\"format\": \"extension\", \"base\": {\"format\": \"named\", \"family\": \"cyclic\","
      " \"params\": [4]}, \"steps\": [{\"index\": 2, \"phi\": [[1], [1]]}]}");  // phi arity
}

TEST_CASE("extension spec read matches direct construction") {
  const char* text =
      "{\"name\": \"d16\", \"format\": \"extension\","
      " \"base\": {\"format\": \"named\", \"family\": \"cyclic\", \"params\": [8]},"
      " \"steps\": [{\"index\": 2, \"phi\": [[-1]], \"power\": []}]}";
  Group g = group_from_json(json::parse(text));
  Group d = dihedral(16);
  CHECK(g.n == 16);
  CHECK(g.mul == d.mul);  // same BFS numbering from (rotation, reflection)
}

#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "fixtures.hpp"

using namespace hoops;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir() {
  fs::path p = fs::temp_directory_path() / "hoops-io-tests";
  fs::create_directories(p);
  return p;
}

void put_file(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

}  // namespace

TEST_CASE("json serialization is canonical") {
  json j;
  j["b"] = 1;
  j["a"] = 2;
  std::string s = serialize(j);
  CHECK(s == "{\n  \"a\": 2,\n  \"b\": 1\n}\n");
  CHECK(parse_json(s) == j);

  CHECK_THROWS_AS(parse_json("{"), argument_error);
  CHECK_THROWS_AS(parse_json(""), argument_error);
  CHECK_THROWS_AS(parse_json("{}x"), argument_error);
}

TEST_CASE("hoop documents round trip") {
  for (const auto& h : fixtures::census_through(4)) {
    json j = hoop_to_json(h);
    Hoop back = hoop_from_json(j);
    CHECK(back.same_tables(h));
    CHECK(serialize(hoop_to_json(back)) == serialize(j));
  }

  SUBCASE("labels survive") {
    HoopData d = fixtures::three_chain_data();
    d.labels = {"zero", "ha\"lf", "o\\ne"};
    json j = hoop_to_json(Hoop(d));
    REQUIRE(j.contains("labels"));
    Hoop back = hoop_from_json(j);
    CHECK(back.data().labels == d.labels);
  }

  SUBCASE("no labels key when there are none") {
    CHECK(!hoop_to_json(fixtures::two_chain()).contains("labels"));
  }
}

TEST_CASE("hoop documents reject junk") {
  json good = hoop_to_json(fixtures::three_chain());

  for (const char* key : {"size", "unit", "mul", "imp"}) {
    json j = good;
    j.erase(key);
    CHECK_THROWS_AS(hoop_from_json(j), argument_error);
  }
  {
    json j = good;
    j["size"] = "three";
    CHECK_THROWS_AS(hoop_from_json(j), argument_error);
  }
  {
    json j = good;
    j["size"] = 0;
    CHECK_THROWS_AS(hoop_from_json(j), argument_error);
  }
  {
    json j = good;
    j["mul"][1] = json::array({0, 0});  // ragged row
    CHECK_THROWS_AS(hoop_from_json(j), argument_error);
  }
  {
    json j = good;
    j["mul"][1][1] = 9;  // out of range
    CHECK_THROWS_AS(hoop_from_json(j), argument_error);
  }
  {
    json j = good;
    j["unit"] = 7;
    CHECK_THROWS_AS(hoop_from_json(j), argument_error);
  }
  {
    json j = good;
    j["labels"] = json::array({"a"});
    CHECK_THROWS_AS(hoop_from_json(j), argument_error);
  }
  {
    json j = good;
    j["labels"] = json::array({"a", "b", 3});
    CHECK_THROWS_AS(hoop_from_json(j), argument_error);
  }
  {
    // well-shaped but axiom-breaking tables get the dedicated throw
    json j = good;
    j["imp"][1][0] = 2;
    CHECK_THROWS_AS(hoop_from_json(j), invalid_hoop);
  }
  CHECK_THROWS_AS(hoop_from_json(json::array()), argument_error);
}

TEST_CASE("morphism documents") {
  Hoop l2 = fixtures::two_chain();
  Hoop g3 = fixtures::godel_chain();
  std::vector<Elem> map{1, 2};

  SUBCASE("bare array form") {
    MorphismFile m = morphism_from_json(parse_json("[1, 2]"));
    CHECK(m.map == map);
    CHECK(!m.domain);
    CHECK(!m.codomain);
  }

  SUBCASE("object form with hoops attached") {
    json j = morphism_to_json(map, &l2, &g3);
    MorphismFile m = morphism_from_json(j);
    CHECK(m.map == map);
    REQUIRE(m.domain);
    REQUIRE(m.codomain);
    CHECK(m.domain->same_tables(l2));
    CHECK(m.codomain->same_tables(g3));
  }

  SUBCASE("object form without hoops") {
    json j = morphism_to_json(map);
    CHECK(!j.contains("domain"));
    MorphismFile m = morphism_from_json(j);
    CHECK(m.map == map);
    CHECK(!m.domain);
  }

  CHECK_THROWS_AS(morphism_from_json(parse_json("{\"no\": 1}")), argument_error);
  CHECK_THROWS_AS(morphism_from_json(parse_json("[1, \"x\"]")), argument_error);
}

TEST_CASE("certificate documents round trip") {
  for (const auto& h : fixtures::census_through(4))
    for (Association assoc : {Association::left, Association::right}) {
      DecompositionCertificate cert =
          full_decomposition(h, assoc, FilterStrategy::smallest);
      json j = certificate_to_json(cert);
      DecompositionCertificate back = certificate_from_json(j);
      CHECK(verify_certificate(h, back));
      CHECK(serialize(certificate_to_json(back)) == serialize(j));
    }
}

TEST_CASE("certificate documents reject junk") {
  json good = certificate_to_json(
      full_decomposition(fixtures::godel_chain(), Association::right, FilterStrategy::smallest));

  for (const char* key : {"association", "input_hash", "iso_to_input", "tree"}) {
    json j = good;
    j.erase(key);
    CHECK_THROWS_AS(certificate_from_json(j), argument_error);
  }
  {
    json j = good;
    j["association"] = "up";
    CHECK_THROWS_AS(certificate_from_json(j), argument_error);
  }
  {
    json j = good;
    j["input_hash"] = 12;
    CHECK_THROWS_AS(certificate_from_json(j), argument_error);
  }
  {
    json j = good;
    j["tree"].erase("root");
    CHECK_THROWS_AS(certificate_from_json(j), argument_error);
  }
  {
    json j = good;
    j["tree"]["nodes"][0] = json::object({{"mv", 0}});
    CHECK_THROWS_AS(certificate_from_json(j), argument_error);
  }
  {
    json j = good;
    j["tree"]["nodes"][2] = json::object({{"left", 0}, {"right", 1}});
    CHECK_THROWS_AS(certificate_from_json(j), argument_error);
  }
}

TEST_CASE("files and paths") {
  fs::path dir = scratch_dir();
  std::string body = serialize(hoop_to_json(fixtures::square()));
  std::string p = (dir / "square.json").string();
  write_output(p, body);
  CHECK(read_input(p) == body);
  CHECK(load_hoop(p).same_tables(fixtures::square()));

  CHECK_THROWS_AS(read_input((dir / "no-such-file.json").string()), argument_error);
  CHECK_THROWS_AS(write_output((dir / "missing" / "x.json").string(), "x"), argument_error);
}

TEST_CASE("sequence manifests") {
  fs::path dir = scratch_dir();
  put_file(dir / "l2.json", serialize(hoop_to_json(fixtures::two_chain())));
  put_file(dir / "g3.json", serialize(hoop_to_json(fixtures::godel_chain())));
  put_file(dir / "incl.json", serialize(morphism_to_json(std::vector<Elem>{1, 2})));

  SUBCASE("inline entries, path entries, bare and object maps") {
    json m;
    m["hoops"] = json::array({hoop_to_json(mv_chain(1)), "l2.json", "g3.json", "l2.json",
                              hoop_to_json(mv_chain(1))});
    m["maps"] = json::array(
        {json::array({1}), "incl.json", json::array({0, 1, 1}), json::array({0, 0})});
    put_file(dir / "manifest.json", serialize(m));

    HoopSequence s = load_sequence_manifest((dir / "manifest.json").string());
    REQUIRE(s.hoops.size() == 5);
    REQUIRE(s.maps.size() == 4);
    CHECK(s.hoops[2].same_tables(fixtures::godel_chain()));
    CHECK(s.maps[1] == std::vector<Elem>{1, 2});
    CHECK(is_exact(s));
  }

  SUBCASE("absolute paths work too") {
    json m;
    m["hoops"] = json::array({(dir / "l2.json").string(), (dir / "g3.json").string()});
    m["maps"] = json::array({(dir / "incl.json").string()});
    put_file(dir / "manifest_abs.json", serialize(m));
    HoopSequence s = load_sequence_manifest((dir / "manifest_abs.json").string());
    CHECK(s.hoops[1].same_tables(fixtures::godel_chain()));
  }

  SUBCASE("rejects") {
    put_file(dir / "bad1.json", "{\"hoops\": []}");
    CHECK_THROWS_AS(load_sequence_manifest((dir / "bad1.json").string()), argument_error);
    put_file(dir / "bad2.json", "[]");
    CHECK_THROWS_AS(load_sequence_manifest((dir / "bad2.json").string()), argument_error);
  }
}

TEST_CASE("dot export") {
  // pinned output for the three chain: two of three elements idempotent
  std::string expect =
      "digraph hoop {\n"
      "  rankdir=BT;\n"
      "  n0 [label=\"0\", shape=doublecircle];\n"
      "  n1 [label=\"1\", shape=circle];\n"
      "  n2 [label=\"2\", shape=doublecircle];\n"
      "  n0 -> n1;\n"
      "  n1 -> n2;\n"
      "}\n";
  CHECK(to_dot(fixtures::three_chain()) == expect);

  SUBCASE("labels are used and escaped") {
    HoopData d = fixtures::two_chain_data();
    d.labels = {"bo\"t", "to\\p"};
    std::string dot = to_dot(Hoop(d));
    CHECK(dot.find("label=\"bo\\\"t\"") != std::string::npos);
    CHECK(dot.find("label=\"to\\\\p\"") != std::string::npos);
  }

  SUBCASE("every idempotent is double-circled, nothing else") {
    for (const auto& h : fixtures::census_through(4)) {
      std::string dot = to_dot(h);
      for (Elem x = 0; x < h.size(); ++x) {
        std::string line = "  n" + std::to_string(x) + " [label=\"" + std::to_string(x) +
                           "\", shape=" +
                           (h.mul(x, x) == x ? "doublecircle" : "circle") + "];\n";
        CHECK(dot.find(line) != std::string::npos);
      }
    }
  }
}

#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "localelab/corpus.hpp"
#include "localelab/error.hpp"
#include "localelab/io.hpp"

using namespace localelab;
using io::Json;
namespace fs = std::filesystem;

TEST_SUITE("io") {

TEST_CASE("frames, posets and spaces re-parse to equal values") {
  for (const auto& c : frame_corpus(4)) {
    const Json j = io::frame_to_json(*c.frame);
    REQUIRE(io::frame_from_json(j) == *c.frame);
    REQUIRE(io::frame_to_json(io::frame_from_json(j)) == j);
    REQUIRE(io::poset_from_json(io::poset_to_json(c.base)) == c.base);
    REQUIRE(io::detect_kind(j) == io::FileKind::Frame);
  }
  const FiniteSpace s = fixtures::sierpinski();
  const Json sj = io::space_to_json(s);
  CHECK(io::space_to_json(io::space_from_json(sj)) == sj);
  CHECK(io::detect_kind(sj) == io::FileKind::Space);
}

TEST_CASE("operators re-parse to equal tables") {
  const auto sl = share(enumerate_sublocales(fixtures::square()));
  std::mt19937_64 rng(1);
  const InteriorOperator op = random_interior(sl, rng);
  const Json j = io::operator_to_json(op, "square.json");
  const auto file = io::operator_file_from_json(j, {});
  CHECK(io::operator_table(file, *sl) == op.table);
  CHECK(io::operator_to_json(InteriorOperator{sl, io::operator_table(file, *sl)}, "square.json") == j);

  const auto frag = share(complemented_fragment(sl));
  const HOperator h = random_h(frag, rng);
  const auto hfile = io::operator_file_from_json(io::operator_to_json(h, "square.json"), {});
  CHECK(hfile.fragment);
  CHECK(io::operator_table(hfile, *sl, frag.get()) == h.table);
}

TEST_CASE("sublocale keys") {
  const Frame& sq = *fixtures::square();
  const ElemSet s{0b1010};
  CHECK(io::sublocale_key(sq, s) == "{a,1}");
  CHECK(io::parse_subset(sq, "{a,1}") == s);
  CHECK(io::parse_subset(sq, "{ 1 , a }") == s);
  CHECK(io::parse_subset(sq, "{}") == ElemSet{});
  CHECK_THROWS_AS(io::parse_subset(sq, "{a,z}"), LocaleError);
}

TEST_CASE("map files resolve paths next to the file") {
  const Json doc = Json::parse(R"({"from": "a.json", "to": "b.json", "map": {"0": "0"}})");
  const auto m = io::map_file_from_json(doc, "dir");
  CHECK(m.type == "localic");
  CHECK(m.from == fs::path("dir") / "a.json");
  CHECK(io::detect_kind(doc) == io::FileKind::Map);
}

TEST_CASE("malformed input is a parse error") {
  const fs::path p = fs::temp_directory_path() / "localelab_bad.json";
  std::ofstream(p) << "{\"elements\": [";
  try {
    io::load_json(p);
    FAIL("expected ParseError");
  } catch (const LocaleError& e) {
    CHECK(e.kind() == ErrorKind::ParseError);
  }
  fs::remove(p);
  CHECK_THROWS_AS(io::load_json(fs::temp_directory_path() / "localelab_missing.json"), LocaleError);
  CHECK_THROWS_AS(io::frame_from_json(Json::parse(R"({"elements": "x"})")), LocaleError);
}

TEST_CASE("diagrams") {
  const auto sl = share(enumerate_sublocales(fixtures::chain3()));
  const std::string dot = io::sublocale_dot(*sl);
  CHECK(dot.find("digraph") == 0);
  CHECK(dot.find("plum") != std::string::npos);
  const std::string hasse = io::hasse_dot(fixtures::chain3()->poset(), "CHAIN3");
  CHECK(hasse.find("rankdir=BT") != std::string::npos);
  const Json j = io::sublocale_lattice_to_json(*sl);
  CHECK(j.at("sublocales").size() == 4);
  CHECK(Json::parse(j.dump()) == j);
}

}

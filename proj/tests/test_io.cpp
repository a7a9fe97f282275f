#include "doctest.h"

#include <algorithm>

#include "fixtures.hpp"
#include "fintop/io.hpp"
#include "fintop/oracle.hpp"

using namespace fintop;
using namespace fixtures;

namespace {

const std::filesystem::path kData = FINTOP_DATA_DIR;

Errc parse_code(const std::string& text) {
  try {
    io::parse_space(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("document was accepted: " << text);
  return Errc::ParseError;
}

std::size_t count(const std::string& haystack, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = haystack.find(needle); pos != std::string::npos; pos = haystack.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("parse the shipped documents") {
  CHECK(io::parse_space(R"({"elements":["0","1"],"relations":[["0","1"]]})") == sierpinski());
  CHECK(io::load_space(kData / "S.json") == sierpinski());
  CHECK(io::load_space(kData / "X8.json") == x8());
  CHECK(io::load_space(kData / "indiscrete_pair.json").equivalent(0, 1));
  CHECK(io::load_space(kData / "point.json") == point());

  const auto collapse = io::load_map(kData / "collapse.map.json");
  CHECK(collapse.domain().size() == 2);
  CHECK(collapse.codomain().size() == 1);
  const auto inc = io::load_map(kData / "X8_A.map.json");
  CHECK(inc.codomain() == x8());
  CHECK(inc.values() == std::vector<Element>{0, 1, 2, 3});
}

TEST_CASE("malformed documents") {
  CHECK(parse_code(R"({"elements":["a","b"],"covers":[["a","b"],["b","a"]]})") == Errc::CoversNotAcyclic);
  CHECK(parse_code(R"({"elements":["a"],"covers":[["a","a"]]})") == Errc::CoversNotAcyclic);
  CHECK(parse_code(R"({"elements":["a","a"],"relations":[]})") == Errc::DuplicateLabel);
  CHECK(parse_code(R"({"elements":["a","b","c"],"open_sets":[["a"],["b"]]})") == Errc::NotATopology);
  CHECK(parse_code(R"({"elements":["a"],"relations":[["a","z"]]})") == Errc::UnknownLabel);
  CHECK(parse_code(R"({"elements":["a"]})") == Errc::ParseError);
  CHECK(parse_code(R"({"elements":["a"],"relations":[],"covers":[]})") == Errc::ParseError);
  CHECK(parse_code(R"({"format_version":2,"elements":[],"relations":[]})") == Errc::ParseError);
  CHECK(parse_code(R"({"elements":[1],"relations":[]})") == Errc::ParseError);
  CHECK(parse_code(R"([])") == Errc::ParseError);

  try {
    io::parse_space(R"({"elements": [)");
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("at byte") != std::string::npos);
  }
  CHECK_THROWS_AS(io::read_file(kData / "missing.json"), std::ios_base::failure);
}

TEST_CASE("round trip is normalizing") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto x = oracle::random_space({seed, seed % 9, 1, 2, seed % 2 == 0, false});
    const auto text = io::serialize_space(x);
    const auto back = io::parse_space(text);
    CHECK(back == x);
    CHECK(io::serialize_space(back) == text);
  }
  const auto from_covers = io::load_space(kData / "X8.json");
  CHECK(io::serialize_space(io::parse_space(io::serialize_space(from_covers))) == io::serialize_space(from_covers));
}

TEST_CASE("render_dot") {
  const auto s = io::render_dot(sierpinski());
  CHECK(s ==
        "digraph finite_space {\n"
        "  node [shape=circle];\n"
        "  n0 [label=\"0\"];\n"
        "  n1 [label=\"1\"];\n"
        "  n1 -> n0;\n"
        "  { rank=same; n0; }\n"
        "  { rank=same; n1; }\n"
        "}\n");

  const auto x = io::render_dot(x8());
  CHECK(count(x, "[label=") == 8);
  CHECK(count(x, " -> ") == 12);
  for (const auto& [upper, lower] : x8_covers()) {
    const auto u = x8().index_of(upper);
    const auto l = x8().index_of(lower);
    CHECK(x.find("n" + std::to_string(u) + " -> n" + std::to_string(l) + ";") != std::string::npos);
  }
  CHECK(x.find("{ rank=same; n0; n1; }") != std::string::npos);
  CHECK(x.find("{ rank=same; n2; n3; n4; n5; }") != std::string::npos);
  CHECK(x.find("{ rank=same; n6; n7; }") != std::string::npos);

  const auto ip = io::render_dot(indiscrete_pair());
  CHECK(ip.find("n0 [label=\"p,q\", shape=box];") != std::string::npos);
  CHECK(count(ip, "[label=") == 1);
  CHECK(io::render_dot(x8()) == x);
}

TEST_CASE("certificate documents") {
  const auto x = x8();
  const auto b = sub(x, {"a", "b", "d", "g"});
  const auto doc = io::retract_certificate_json(x, b, is_dbp_retract_maxcriterion(x, b));
  CHECK(doc.dump() == R"({"verdict":false,"failure":{"witness":"c","down_set_meet":["a","b"]}})");

  const auto s = sierpinski();
  const auto zero = sub(s, {"0"});
  CHECK(io::retract_certificate_json(s, zero, is_dbp_retract_maxcriterion(s, zero)).dump() ==
        R"({"verdict":true,"retraction":[["1","0"]]})");
}

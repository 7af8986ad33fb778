#include <doctest.h>

#include "topo/dsl.hpp"
#include "topo/errors.hpp"

using namespace topo;

namespace {

ParseError parse_failure(const std::string& text) {
  try {
    parse_document(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a ParseError");
  return ParseError(0, 0, "");
}

}  // namespace

TEST_CASE("parses spaces and classes") {
  const SpaceDocument doc = parse_document(R"(# two spaces
space sierpinski
points 2
opens {} {0} {0 1}   # trailing comment

space chain
points 3
subbasis {0 1}
         {1 2}
class Both = [sierpinski, chain]
class Pairs = P
)");
  REQUIRE(doc.spaces.size() == 2);
  CHECK(doc.spaces[0].space == FinSpace::sierpinski());
  CHECK(doc.spaces[0].line == 2);
  CHECK(doc.find_space("chain")->space.is_open(PointSet{1}));
  CHECK(doc.find_space("nope") == nullptr);
  REQUIRE(doc.classes.size() == 2);
  CHECK(resolve_class(doc, "Both").members().size() == 2);
  CHECK(resolve_class(doc, "Pairs").kind() == TestClass::Kind::P);
  CHECK(resolve_class(doc, "Sfin").kind() == TestClass::Kind::Sfin);
  CHECK_THROWS_AS(resolve_class(doc, "Nope"), InvalidClass);
}

TEST_CASE("empty documents and CRLF") {
  CHECK(parse_document("").spaces.empty());
  CHECK(parse_document("# nothing\n\n").spaces.empty());
  CHECK(parse_document("space s\r\npoints 1\r\nopens {} {0}\r\n").spaces.size() == 1);
}

TEST_CASE("errors carry line and column") {
  auto e = parse_failure("space s\npoints 2\nopens {} {0 5} {0 1}\n");
  CHECK(e.line() == 3);
  CHECK(e.column() == 13);

  e = parse_failure("space s\npoints 2\nopens {} {0}\n");
  CHECK(e.line() == 3);
  CHECK(std::string(e.what()).find("3:1:") == 0);

  e = parse_failure("space s\n  pionts 2\n");
  CHECK(e.line() == 2);
  CHECK(e.column() == 3);

  e = parse_failure("space s\npoints 2\nopens {} {0 {0 1}\n");
  CHECK(e.line() == 3);

  e = parse_failure("points 2\n");
  CHECK(e.line() == 1);

  e = parse_failure("space s\nopens {}\n");
  CHECK(e.line() == 2);

  e = parse_failure("space s\npoints 1\n");
  CHECK(e.line() == 1);

  e = parse_failure("space s\npoints 1\nopens {} {0}\nspace s\npoints 1\nopens {} {0}\n");
  CHECK(e.line() == 4);

  e = parse_failure("space s\npoints 1\nopens {} {0}\nclass C = [s, t]\n");
  CHECK(e.line() == 4);

  e = parse_failure("class C = Q\n");
  CHECK(e.column() == 11);

  e = parse_failure("class C = []\n");
  CHECK(e.line() == 1);

  e = parse_failure("{0}\n");
  CHECK(e.line() == 1);

  e = parse_failure("space s\npoints 1 extra\n");
  CHECK(e.line() == 2);
  CHECK(e.column() == 10);
}

TEST_CASE("format_space round trips") {
  const FinSpace x = FinSpace::make(3, {PointSet{}, PointSet{0}, PointSet{0, 1}, PointSet{0, 1, 2}});
  const std::string text = format_space("chain", x);
  CHECK(text == "space chain\npoints 3\nopens {} {0} {0 1} {0 1 2}\n");
  CHECK(parse_document(text).spaces[0].space == x);
}

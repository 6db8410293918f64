#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "gyro/corpus.hpp"
#include "gyro/io.hpp"

using namespace gyro;

namespace {

std::string fixture(const std::string& name) {
  std::ifstream in(std::string(GYRO_FIXTURE_DIR) + "/" + name);
  REQUIRE_MESSAGE(in.good(), name);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

TEST_CASE("bundled tables parse and validate") {
  const ValidationOutcome g8 = parse_gyro(fixture("g8.gyro"));
  REQUIRE(g8.ok());
  CHECK(g8.group->size() == 8);
  CHECK(g8.group->table() == corpus::g8().table());

  for (const char* name : {"z2.gyro", "z4.gyro", "k4.gyro", "s3.gyro"})
    CHECK(parse_gyro(fixture(name)).ok());

  // fixture tables agree with the built-in corpus
  CHECK(parse_gyro(fixture("s3.gyro")).group->table() ==
        corpus::s3().table());
  CHECK(parse_gyro(fixture("k4.gyro")).group->table() ==
        corpus::k4().table());
}

TEST_CASE("gyro parsing errors carry line numbers") {
  CHECK_NOTHROW(parse_gyro_table("1\n0\n"));
  CHECK_NOTHROW(parse_gyro_table("# comment\n1\n# row\n0\n"));

  CHECK_THROWS_WITH_AS(parse_gyro_table(""), "line 1: empty file",
                       ParseError);
  CHECK_THROWS_AS(parse_gyro_table("2\n0 1\n1 x\n"), ParseError);
  CHECK_THROWS_AS(parse_gyro_table("2\n0 1\n"), ParseError);      // row count
  CHECK_THROWS_AS(parse_gyro_table("2\n0 1 1\n1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_gyro_table("2\n0 7\n1 0\n"), ParseError);  // range
  CHECK_THROWS_AS(parse_gyro_table("0\n"), ParseError);
  try {
    parse_gyro_table("2\n0 1\n1 2\n");
    FAIL("expected a range error");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
  }
}

TEST_CASE("serialization round trip on canonical tables") {
  for (const FiniteGyrogroup& g :
       {corpus::g8(), corpus::z2(), corpus::z4(), corpus::s3(),
        corpus::g8_z2()}) {
    const std::string text = serialize_gyro(g);
    const ValidationOutcome back = parse_gyro(text);
    REQUIRE(back.ok());
    CHECK(back.group->table() == g.table());
    CHECK(serialize_gyro(*back.group) == text);
  }
}

TEST_CASE("topology files parse with closure completion reported") {
  const ParsedTopology coset = parse_topo(fixture("g8-coset.topo"), 8);
  CHECK(coset.topology == corpus::g8_coset_topology());
  CHECK(coset.given_opens == 4);
  CHECK(coset.completed_opens == 4);
  CHECK_FALSE(coset.completion_added_sets());

  // listing only the singletons completes to the discrete topology
  const ParsedTopology disc = parse_topo("4\n0\n1\n2\n3\n");
  CHECK(disc.topology == FiniteTopology::discrete(4));
  CHECK(disc.completion_added_sets());
  CHECK(disc.completed_opens == 16);

  // '-' and '*' shorthands give the indiscrete topology
  const ParsedTopology indisc = parse_topo("3\n-\n*\n");
  CHECK(indisc.topology == FiniteTopology::indiscrete(3));

  CHECK_THROWS_AS(parse_topo("3\n0 5\n"), ParseError);
  CHECK_THROWS_AS(parse_topo(fixture("g8-coset.topo"), 4), ParseError);
}

TEST_CASE("topology serialization round trip") {
  for (const FiniteTopology& t :
       {corpus::g8_coset_topology(), FiniteTopology::discrete(4),
        FiniteTopology::indiscrete(5)}) {
    const ParsedTopology back = parse_topo(serialize_topo(t));
    CHECK(back.topology == t);
  }
}

TEST_CASE("index sets from the command line") {
  CHECK(parse_index_set("0,1,2,3", 8, false) == mask_of({0, 1, 2, 3}));
  CHECK(parse_index_set("3,1", 8, false) == mask_of({1, 3}));

  bool added = false;
  CHECK(parse_index_set("1,2", 8, true, &added) == mask_of({0, 1, 2}));
  CHECK(added);
  CHECK(parse_index_set("0,1", 8, true, &added) == mask_of({0, 1}));
  CHECK_FALSE(added);

  CHECK_THROWS_AS(parse_index_set("1,9", 8, false), std::invalid_argument);
  CHECK_THROWS_AS(parse_index_set("1,x", 8, false), std::invalid_argument);
}

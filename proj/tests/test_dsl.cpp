#include <doctest.h>

#include "gtmm/dsl.hpp"

using namespace gtmm;

TEST_CASE("parsing the atoms") {
  CHECK(parse_group("cyc(4)").order() == 4);
  CHECK(parse_group("sym(4)").order() == 24);
  CHECK(parse_group("wr(cyc(3), 2)").order() == 18);
  CHECK(parse_group(" cyc( 4 ) ").order() == 4);
}

TEST_CASE("products, powers and nesting") {
  CHECK(parse_group("cyc(4)^3").order() == 64);
  CHECK(parse_group("cyc(3) x cyc(4)").order() == 12);
  CHECK(parse_group("wr(cyc(3)^3, 2)").order() == 1458);
  CHECK(parse_group("(cyc(2) x sym(3))^2").order() == 144);
  CHECK(parse_group("(cyc(2) x sym(3))^2").name() ==
        "cyc(2) x sym(3) x cyc(2) x sym(3)");
}

TEST_CASE("canonical printing round-trips") {
  const char* canonical[] = {
      "cyc(4)",
      "sym(5)",
      "cyc(4)^3",
      "cyc(3) x cyc(4)",
      "cyc(2)^2 x sym(3)",
      "wr(cyc(3)^3, 2)",
      "wr(cyc(2) x sym(3), 2)",
      "wr(wr(cyc(2), 2), 2)",
  };
  for (const char* text : canonical) {
    const Group g = parse_group(text);
    CHECK(g.name() == text);
    CHECK(structurally_equal(parse_group(g.name()), g));
  }
  // Non-canonical spellings normalize: repeated factors collapse to powers.
  CHECK(parse_group("cyc(4) x cyc(4) x cyc(4)").name() == "cyc(4)^3");
  CHECK(parse_group("cyc(4)^2 x cyc(4)").name() == "cyc(4)^3");
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_group("cyc()"), ParseError);
  CHECK_THROWS_AS(parse_group("cyc(4"), ParseError);
  CHECK_THROWS_AS(parse_group("frob(3)"), ParseError);
  CHECK_THROWS_AS(parse_group("cyc(4) y cyc(3)"), ParseError);
  CHECK_THROWS_AS(parse_group("wr(cyc(2))"), ParseError);
  CHECK_THROWS_AS(parse_group(""), ParseError);
  CHECK_THROWS_AS(parse_group("cyc(4))"), ParseError);
  CHECK_THROWS_AS(parse_group("cyc(0)"), DomainError);
  CHECK_THROWS_AS(parse_group("sym(25)"), ParseError);  // beyond 64-bit codes
}

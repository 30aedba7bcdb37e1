#include <doctest.h>

#include "oracles.hpp"
#include "unmix/errors.hpp"
#include "unmix/parser_io.hpp"
#include "unmix/report.hpp"

using namespace unmix;

TEST_CASE("parse polynomials") {
  auto r = make_order({"x1", "x2", "x3", "x4"});
  auto f1 = io::parse_polynomial("x1*x2^2+x2+2*x1^2", r);
  CHECK(f1.term_count() == 3);
  CHECK(f1.degree(1) == 2);
  CHECK(io::parse_polynomial("(x1+1)^2", r) == io::parse_polynomial("x1^2+2*x1+1", r));
  CHECK(io::parse_polynomial(" - - x1 ", r) == io::parse_polynomial("x1", r));
  CHECK(io::parse_polynomial("0", r).is_zero());
}

TEST_CASE("parse errors carry a position") {
  auto r = make_order({"x1", "x2", "x3", "x4"});
  CHECK_THROWS_WITH_AS(io::parse_polynomial("x9", r), doctest::Contains("unknown variable"),
                       ParseError);
  try {
    io::parse_polynomial("x1+$", r);
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.column() == 4);
  }
  CHECK_THROWS_AS(io::parse_polynomial("2x1", r), ParseError);
  CHECK_THROWS_AS(io::parse_polynomial("x1+", r), ParseError);
  CHECK_THROWS_AS(io::parse_polynomial("(x1", r), ParseError);
  CHECK_THROWS_AS(io::parse_polynomial("x1^", r), ParseError);
  CHECK_THROWS_AS(io::parse_polynomial("", r), ParseError);
}

TEST_CASE("property: characters outside the grammar are rejected") {
  auto r = make_order({"x1", "x2"});
  for (char c : std::string("!@#$%&=[]{};:,.?/\\|~`'\"<>")) {
    std::string text = "x1+";
    text += c;
    text += "x2";
    CAPTURE(text);
    try {
      io::parse_polynomial(text, r);
      FAIL("accepted");
    } catch (const ParseError& e) {
      CHECK(e.column() >= 1);
      CHECK(e.column() <= text.size());
    }
  }
}

TEST_CASE("system files") {
  auto sys = io::parse_system("vars x1\nx1\n");
  CHECK(sys.order->names() == std::vector<std::string>{"x1"});
  REQUIRE(sys.polys.size() == 1);
  CHECK(io::render_polynomial(sys.polys[0]) == "x1");

  auto crlf = io::parse_system("# name: demo\r\nvars a b\r\n\r\na*b-1\r\n");
  CHECK(crlf.name == "demo");
  CHECK(crlf.polys.size() == 1);

  CHECK_THROWS_AS(io::parse_system("x1+1\n"), ParseError);
  CHECK_THROWS_AS(io::parse_system("vars x x\nx\n"), ParseError);
  CHECK_THROWS_AS(io::parse_system("vars x\n"), ParseError);
  try {
    io::parse_system("vars x1 x2\nx1\nx1+x3\n");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("example 4.4 fixture") {
  auto sys = oracle::load_fixture("example_4_4.psys");
  CHECK(sys.order->names() == std::vector<std::string>{"x1", "x2", "x3", "x4", "x5"});
  CHECK(sys.polys.size() == 4);
}

TEST_CASE("rendering") {
  auto r = make_order({"x1", "x2", "x3", "x4"});
  CHECK(io::render_polynomial(io::parse_polynomial("x1*x2^2+x2+2*x1^2", r)) ==
        "x1*x2^2+x2+2*x1^2");
  CHECK(io::render_polynomial(Polynomial(r)) == "0");
  CHECK(io::render_polynomial(normalize(io::parse_polynomial("-x3", r))) == "x3");
  CHECK(io::render_polynomial(io::parse_polynomial("-x1-1", r)) == "-x1-1");
}

TEST_CASE("property: render and parse round trip") {
  oracle::Generator gen(77);
  auto r = gen.ring(4);
  oracle::RandomSpec spec{4, 4, 6, 20};
  for (int i = 0; i < 300; ++i) {
    auto p = gen.polynomial(r, spec);
    auto text = io::render_polynomial(p);
    CAPTURE(text);
    CHECK(io::parse_polynomial(text, r) == p);
    if (!p.is_zero()) {
      auto n = normalize(p);
      CHECK(io::parse_polynomial(io::render_polynomial(n), r) == n);
    }
  }
}

TEST_CASE("empty component list") {
  auto r = make_order({"x1", "x2"});
  CHECK(emit_result(*r, {}, Format::json) ==
        "{\n  \"vars\": [\n    \"x1\",\n    \"x2\"\n  ],\n  \"components\": []\n}\n");
  CHECK(emit_result(*r, {}, Format::text) == "vars x1 x2\ncomponents 0\n");
  CHECK_THROWS(parse_format("xml"));
}

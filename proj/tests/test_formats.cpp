#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hallkit/enumeration.hpp"
#include "hallkit/formats.hpp"
#include "hallkit/group.hpp"
#include "hallkit/report.hpp"
#include "oracles.hpp"

using namespace hallkit;

TEST_CASE("relmat examples") {
  CHECK(parse_relmat("2\n10\n01\n") == Relation::identity(2));
  CHECK(parse_relmat("2\n11\n11\n") == Relation::full(2));
  CHECK(parse_relmat("  2 \n1 0\n\n0 1\n\n") == Relation::identity(2));
  CHECK(parse_relmat("2\r\n10\r\n01\r\n") == Relation::identity(2));
}

TEST_CASE("relmat errors carry line numbers") {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      parse_relmat(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("2\n10\n1010\n") == 3);
  CHECK(line_of("2\n1x\n01\n") == 2);
  CHECK(line_of("x\n") == 1);
  CHECK(line_of("0\n") == 1);
  CHECK(line_of("2\n10\n") == 3);
  CHECK(line_of("2\n10\n01\n11\n") == 4);
  CHECK(line_of("") == 1);
}

TEST_CASE("relmat round-trips") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + static_cast<std::size_t>(t % 64);
    const auto r = oracle::random_relation(rng, n);
    const auto text = emit_relmat(r);
    CHECK(parse_relmat(text) == r);
    CHECK(emit_relmat(parse_relmat(text)) == text);
  }
}

TEST_CASE("cayley parse and emit") {
  const auto z2 = parse_cayley("e,a\n1,2\n2,1\nidentity=e\n", true);
  CHECK(z2.size() == 2);
  CHECK(z2.identity() == Index{0});
  CHECK(z2.product(1, 1) == 0);

  const auto lz = parse_cayley("a, b\n1,1\n2,2\n");
  CHECK(lz.labels() == std::vector<std::string>{"a", "b"});
  CHECK_FALSE(lz.identity());

  for (const auto& s : {z2, lz, materialize_hall(2).semigroup(), power_semigroup(cyclic_group(3).semigroup()).semigroup,
                        symmetric_group_table(3).semigroup()}) {
    const auto text = emit_cayley(s);
    CHECK(parse_cayley(text) == s);
    CHECK(emit_cayley(parse_cayley(text)) == text);
  }
}

TEST_CASE("cayley errors") {
  auto line_of = [](const std::string& text, bool require_identity = false) -> std::size_t {
    try {
      parse_cayley(text, require_identity);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("a,b\n1,2\n2\n") == 3);
  CHECK(line_of("a,b\n1,3\n2,1\n") == 2);
  CHECK(line_of("a,b\n1,x\n2,1\n") == 2);
  CHECK(line_of("a,b\n1,2\n") == 3);
  CHECK(line_of("a,b\n1,2\n2,1\nidentity=c\n") == 4);
  CHECK(line_of("a,b\n1,2\n2,1\nidentity=b\n") == 4);  // b*b = a
  CHECK(line_of("e,a\n1,2\n2,1\n", true) == 4);
  CHECK(line_of("a,\n1,1\n1,1\n") == 1);

  // x*x = y, else x: not associative.
  CHECK_THROWS_AS(parse_cayley("x,y\n2,1\n1,1\n"), AssociativityError);
  CHECK_THROWS(parse_cayley("a,a\n1,1\n1,1\n"));
}

TEST_CASE("emit_cayley refuses labels the format cannot hold") {
  const auto s = validate_table({"a,b"}, {{0}});
  CHECK_THROWS(emit_cayley(s));
}

TEST_CASE("report round-trip") {
  Report r;
  r.command = "count-hall";
  r.inputs = {{"n", 3}};
  r.results = {{"total_hall", 247}, {"nested", {{"a", {1, 2}}}}};
  r.status = Status::fail;
  r.witnesses = {{"e", "10/00"}, {"pair", {1, 2}}};
  r.message = "text";
  const auto j = to_json(r);
  CHECK(j.at("schema") == "hallkit-report v1");
  CHECK(report_from_json(j) == r);
  CHECK(report_from_json(nlohmann::json::parse(j.dump())) == r);

  Report bare;
  bare.command = "x";
  bare.status = Status::error;
  CHECK_THROWS(report_from_json(to_json(bare)));
  auto wrong = to_json(r);
  wrong["schema"] = "other";
  CHECK_THROWS(report_from_json(wrong));
  CHECK_THROWS(status_from_string("maybe"));

  const auto pretty = render(r, true);
  CHECK(pretty.find("status:  fail") != std::string::npos);
  CHECK(pretty.find("total_hall") != std::string::npos);
}

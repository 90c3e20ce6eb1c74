#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cfladder/export.hpp"
#include "cfladder/number_spec.hpp"

#include <string>
#include <vector>

using namespace cfl;

namespace {

IntPolynomial make(std::initializer_list<long> cs) {
  std::vector<Integer> v;
  for (long c : cs) v.emplace_back(c);
  return IntPolynomial(std::move(v));
}

// ladder with triplet indices up to `terms` for both numbers
Ladder pair_ladder(const AlgebraicNumber& xi, long m, int terms) {
  auto eta = reciprocal_scale(xi, m);
  return build_ladder(expand(xi, terms + 1), expand(eta, terms + 1), m);
}

std::size_t count_lines(const std::string& text, const std::string& prefix) {
  std::size_t hits = 0, pos = 0;
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string::npos) end = text.size();
    if (text.compare(pos, prefix.size(), prefix) == 0) ++hits;
    pos = end + 1;
  }
  return hits;
}

bool contains(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("rational specs parse and canonicalize") {
  auto seven = parse_number_spec("rat:7");
  REQUIRE(seven.is_rational());
  CHECK(seven.rational() == Rational(7));
  CHECK(canonical_spec(seven) == "rat:7/1");

  auto pi_conv = parse_number_spec("rat:355/113");
  CHECK(pi_conv.rational() == make_frac(355, 113));
  CHECK(canonical_spec(pi_conv) == "rat:355/113");

  CHECK(parse_number_spec("rat:-3/6").rational() == make_frac(-1, 2));
  CHECK(canonical_spec(parse_number_spec("rat:-3/6")) == "rat:-1/2");
  CHECK(parse_number_spec("rat:4/2").rational() == Rational(2));
}

TEST_CASE("radical and root specs parse to the expected numbers") {
  auto c2 = parse_number_spec("cbrt:2");
  CHECK_FALSE(c2.is_rational());
  CHECK(equals(c2, AlgebraicNumber::nth_root(2, 3)));
  CHECK(canonical_spec(c2) == "root:1,0,0,-2:1:2");

  auto s2 = parse_number_spec("sqrt:2");
  CHECK(equals(s2, AlgebraicNumber::nth_root(2, 2)));
  CHECK(canonical_spec(s2) == "root:1,0,-2:1:2");
  CHECK(equals(parse_number_spec("root:1,0,-2:1:2"), s2));

  auto phi = parse_number_spec("golden");
  CHECK(equals(phi, AlgebraicNumber::make_root(make({1, -1, -1}), 1, 2)));
  CHECK(canonical_spec(phi) == "root:1,-1,-1:1:2");

  // perfect powers collapse to rationals
  CHECK(parse_number_spec("cbrt:27").rational() == Rational(3));
  CHECK(parse_number_spec("sqrt:49").rational() == Rational(7));

  // fractional endpoints and content reduction
  auto inv_sqrt2 = parse_number_spec("root:2,0,-1:1/2:1");
  CHECK(canonical_spec(inv_sqrt2) == "root:2,0,-1:1/2:1");
  CHECK(canonical_spec(parse_number_spec("root:4,0,-2:1/2:1")) ==
        "root:2,0,-1:1/2:1");
}

TEST_CASE("canonical specs reparse to the same value") {
  const std::vector<std::string> specs = {
      "rat:355/113", "rat:7",   "cbrt:2",  "sqrt:2",
      "golden",      "cbrt:36", "root:1,0,-3:1:2",
  };
  for (const auto& s : specs) {
    CAPTURE(s);
    auto x = parse_number_spec(s);
    auto canon = canonical_spec(x);
    CHECK(equals(parse_number_spec(canon), x));
    CHECK(canonical_spec(parse_number_spec(canon)) == canon);
  }
}

TEST_CASE("malformed specs raise the parse error") {
  const std::vector<std::string> bad = {
      "",          "42",          "foo:1",        "rat:",
      "rat:a",     "rat:1/2/3",   "sqrt:two",     "cbrt:",
      "root:1,0,-2:1", "root:1,0,-2:1:2:3", "root::1:2", "golden:1",
  };
  for (const auto& s : bad) {
    CAPTURE(s);
    CHECK_THROWS_AS(parse_number_spec(s), spec_parse_error);
  }
}

TEST_CASE("grammatical specs with invalid values raise domain errors") {
  CHECK_THROWS_AS(parse_number_spec("sqrt:-1"), std::domain_error);
  CHECK_THROWS_AS(parse_number_spec("cbrt:-8"), std::domain_error);
  CHECK_THROWS_AS(parse_number_spec("rat:1/0"), std::domain_error);
  CHECK_THROWS_AS(parse_number_spec("root:1,0,-2:2:3"), std::domain_error);
  CHECK_THROWS_AS(parse_number_spec("root:1,0,-2:1/0:2"), std::domain_error);
  CHECK_THROWS_AS(parse_number_spec("root:1,0,-2:-2:2"), std::domain_error);
  CHECK_THROWS_AS(parse_number_spec("root:1,-2,1:0:2"), std::domain_error);
  // a rational root inside the interval collapses to that rational
  CHECK(parse_number_spec("root:1,0,-4:1:3").rational() == Rational(2));
}

TEST_CASE("expansion CSV puts metadata first and one row per quotient") {
  auto exp = expand(parse_number_spec("rat:355/113"), 10);
  const std::string csv = expand_csv(exp, {{"tool", kToolVersion}});
  CHECK(csv ==
        "# tool: cfladder 1.0.0\n"
        "n,b_n,p_n,q_n\n"
        "0,3,3,1\n"
        "1,7,22,7\n"
        "2,16,355,113\n");
}

TEST_CASE("expansion JSON mirrors the CSV with big integers as strings") {
  auto exp = expand(parse_number_spec("cbrt:2"), 12);
  auto doc = expand_json(exp, {{"tool", kToolVersion}, {"terms", "12"}});
  CHECK(doc["meta"]["tool"] == kToolVersion);
  CHECK(doc["meta"]["terms"] == "12");
  REQUIRE(doc["rows"].size() == 12);
  CHECK(doc["rows"][0]["n"] == 0);
  CHECK(doc["rows"][0]["b_n"] == "1");
  CHECK(doc["rows"][3]["b_n"] == "5");
  CHECK(doc["rows"][3]["p_n"] == "29");
  CHECK(doc["rows"][3]["q_n"] == "23");
}

TEST_CASE("ladder CSV carries the connection count and exact rows") {
  auto lad = pair_ladder(AlgebraicNumber::nth_root(2, 3), 2, 8);
  const std::string csv = ladder_csv(lad, {{"m", "2"}});
  CHECK(contains(csv, "# m: 2\n"));
  CHECK(contains(csv, "# connections: 6\n"));
  CHECK(contains(csv, "i,n,k,r,s,t,value,lower,upper\n"));
  CHECK(contains(csv, "1,1,2,1,2,1,1,0,2\n"));
  CHECK(contains(csv, "2,2,3,2,1,0,0,-2,0\n"));
  CHECK(count_lines(csv, "#") == 2);
  // header count matches the data rows
  std::size_t data = 0;
  for (int i = 1; i <= 9; ++i) {
    data += count_lines(csv, std::to_string(i) + ",");
  }
  CHECK(data == 6);
}

TEST_CASE("ladder JSON carries rows and count") {
  auto lad = pair_ladder(AlgebraicNumber::nth_root(2, 3), 2, 8);
  auto doc = ladder_json(lad, {{"m", "2"}});
  CHECK(doc["meta"]["connections"] == 6);
  REQUIRE(doc["rows"].size() == 6);
  CHECK(doc["rows"][1]["n"] == 2);
  CHECK(doc["rows"][1]["k"] == 3);
  CHECK(doc["rows"][1]["r"] == "2");
  CHECK(doc["rows"][1]["s"] == "1");
  CHECK(doc["rows"][1]["lower"] == "-2");
}

TEST_CASE("figure3 series lists n - k per connection") {
  auto lad = pair_ladder(AlgebraicNumber::nth_root(2, 3), 2, 8);
  const std::string csv = figure3_csv(lad, {});
  CHECK(csv ==
        "i,n_minus_k\n"
        "1,-1\n2,-1\n3,-1\n4,-1\n5,-1\n6,-1\n");
  auto doc = figure3_json(lad, {{"command", "ladder --figure3"}});
  REQUIRE(doc["rows"].size() == 6);
  CHECK(doc["rows"][5]["n_minus_k"] == -1);
}

TEST_CASE("stats CSV has one row per bucket plus the tail") {
  auto rep = kuzmin_report(expand(AlgebraicNumber::nth_root(2, 3), 1000));
  const std::string csv = stats_csv(rep, {{"sample_size", "999"}});
  CHECK(contains(csv, "# sample_size: 999\n"));
  CHECK(contains(csv, "k,count,empirical,expected,deviation\n"));
  CHECK(contains(csv, "\n>100,"));
  CHECK(count_lines(csv, ">100,") == 1);
  // 100 numbered buckets + the tail row + header + one meta line
  std::size_t lines = count_lines(csv, "");
  CHECK(lines == 103);

  auto doc = stats_json(rep, {});
  REQUIRE(doc["rows"].size() == 101);
  CHECK(doc["rows"][0]["k"] == 1);
  CHECK(doc["rows"][100]["k"] == ">100");
  CHECK(doc["rows"][0]["expected"].get<double>() ==
        doctest::Approx(0.4150374993).epsilon(1e-9));
}

TEST_CASE("doubles format with ten significant digits") {
  CHECK(format_double(0.4150374992788438) == "0.4150374993");
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(-0.25) == "-0.25");
}

TEST_CASE("the SVG drawing is deterministic and emphasizes big quotients") {
  auto lad = pair_ladder(AlgebraicNumber::nth_root(2, 3), 2, 8);
  const std::string svg = ladder_svg(lad);
  CHECK(contains(svg, "<svg xmlns=\"http://www.w3.org/2000/svg\""));
  CHECK(contains(svg, "</svg>"));
  // six connection segments
  CHECK(count_lines(svg, "<line ") == 6);
  // b_3 = 5 >= 2m + 1 is drawn emphasized
  CHECK(contains(svg, "class=\"big\">5</text>"));
  CHECK(svg == ladder_svg(lad));
}

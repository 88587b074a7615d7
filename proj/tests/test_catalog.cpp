#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "helpers.hpp"
#include "json.hpp"
#include "riopoly/catalog.hpp"
#include "riopoly/riordan.hpp"

using namespace riopoly;
using riotest::P;
using riotest::Q;
using riotest::S;
using riotest::tri;

TEST_CASE("registry lists the classical families in fixture order") {
  const std::vector<std::string> names = family_names();
  const std::vector<std::string> want = {
      "pascal",        "fibonacci", "pell",       "morgan_voyce_B",
      "morgan_voyce_b", "chebyshev_u", "chebyshev_t", "fermat",
      "boubaker",      "laguerre",  "hermite",    "pidduck",
      "mittag_leffler"};
  CHECK(names == want);
  CHECK_THROWS_AS(get_family("catalan", 5), UnknownFamily);
  CHECK_THROWS_AS(verify_family("catalan", 5), UnknownFamily);
}

TEST_CASE("get_family returns golden data and a working spec") {
  const FamilyEntry cu = get_family("chebyshev_u", 5);
  const Triangle want = tri({"1", "0,2", "-1,0,4", "0,-4,0,8", "1,0,-12,0,16"});
  CHECK(cu.golden_rows.size() == 5);
  CHECK(build_triangle(cu.spec, 5) == want);
  for (std::size_t n = 0; n < 5; ++n) {
    CHECK(cu.golden_rows[n] == want.row(n));
  }

  const FamilyEntry fer = get_family("fermat", 6);
  CHECK(fer.golden_polys[5] == P("0,36,0,-216,0,243"));

  const FamilyEntry pas = get_family("pascal", 3);
  CHECK(pas.golden_rows[0] == std::vector<Rational>{Q("1")});
  CHECK(pas.golden_rows[1] == std::vector<Rational>{Q("1"), Q("1")});
  CHECK(pas.golden_rows[2] == std::vector<Rational>{Q("1"), Q("2"), Q("1")});
  CHECK(!pas.weight.has_value());
  CHECK(!pas.provenance.empty());

  const FamilyEntry lag = get_family("laguerre", 4);
  REQUIRE(lag.weight.has_value());
  CHECK(lag.weight->h() == named_series("exp", lag.spec.f().order()));
}

TEST_CASE("every family verifies at and below its golden coverage") {
  for (const std::string& name : family_names()) {
    const FamilyEntry e = get_family(name, 1);
    const std::size_t cover = e.golden_rows.size();
    const VerifyReport full = verify_family(name, cover);
    INFO(name, ": ", full.detail);
    CHECK(full.ok);
    CHECK(full.detail == "ok");
    CHECK(verify_family(name, 3).ok);
    // Requesting more rows than stored only deepens the rebuilt spec.
    CHECK(verify_family(name, 13).ok);
  }
}

TEST_CASE("corrupted golden data is reported at its location") {
  FamilyEntry bou = get_family("boubaker", 7);
  bou.golden_rows[3][1] += 1;
  const VerifyReport r = diff_family(bou, 7);
  CHECK(!r.ok);
  CHECK(r.detail == "triangle mismatch at (n, k) = (3, 1): expected 2, got 1");

  FamilyEntry lag = get_family("laguerre", 5);
  lag.golden_polys[2] = P("1,-2,1/3");
  const VerifyReport p = diff_family(lag, 5);
  CHECK(!p.ok);
  CHECK(p.detail ==
        "polynomial mismatch at n = 2: expected 1 - 2x + 1/3x^2, got 1 - 2x + "
        "1/2x^2");

  FamilyEntry bad = get_family("pascal", 3);
  bad.golden_rows[1].push_back(Q("0"));
  CHECK(!diff_family(bad, 3).ok);
}

TEST_CASE("truncated spec fixtures match their generators") {
  const nlohmann::json reg =
      nlohmann::json::parse(std::string(families_fixture_text()));
  for (const auto& block : reg) {
    if (!block.value("spec_truncated", false)) continue;
    const std::string name = block.at("family").get<std::string>();
    const FamilyEntry e = get_family(name, 12);
    const auto check_prefix = [&](const nlohmann::json& list,
                                  const Series& gen) {
      REQUIRE(list.size() >= 1);
      const std::size_t ord = list.size() - 1;
      std::vector<Rational> stored;
      for (const auto& cell : list) {
        stored.push_back(parse_rational(cell.get<std::string>()));
      }
      CHECK(truncate(gen, ord) == Series(std::move(stored)));
    };
    check_prefix(block.at("spec").at("f"), e.spec.f());
    check_prefix(block.at("spec").at("g"), e.spec.g());
  }

  // Independently derived prefix of x over log((1+x)/(1-x)).
  const Series xol = get_family("mittag_leffler", 9).spec.g();
  CHECK(truncate(xol, 8) == S("1/2,0,-1/6,0,-2/45,0,-22/945,0,-214/14175"));
}

TEST_CASE("deep truncations keep the golden prefixes") {
  for (const std::string& name : {std::string("hermite"), std::string("pidduck"),
                                  std::string("pascal")}) {
    const FamilyEntry e = get_family(name, 15);
    CHECK(e.spec.f().order() >= 14);
    const Triangle t = build_triangle(e.spec, 15);
    const FamilyEntry small = get_family(name, 1);
    for (std::size_t n = 0; n < small.golden_rows.size(); ++n) {
      CHECK(t.row(n) == small.golden_rows[n]);
    }
  }
}

TEST_CASE("named identity checks all pass") {
  const std::vector<std::string> names = check_names();
  CHECK(names.size() == 16);
  for (const std::string& name : names) {
    const CheckResult r = run_check(name);
    INFO(name, ": ", r.detail);
    CHECK(r.name == name);
    CHECK(r.ok);
  }
  CHECK_THROWS_AS(run_check("perpetual_motion"), UnknownName);
}

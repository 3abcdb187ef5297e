#include <doctest.h>

#include "supercong/report.hpp"

using namespace supercong;
using T = CaseTag;

TEST_SUITE("report") {

TEST_CASE("config parsing") {
  const auto c = parse_config(
      "# comment\n"
      "guard_digits = 6\n"
      "workers=3\n"
      "\n"
      "output_format = csv   # trailing comment\n"
      "certificate_paths = a.cert, b.cert\n"
      "cases = G2:5, thm1_1:3:3\n");
  CHECK(c.guard_digits == 6);
  CHECK(c.workers == 3);
  CHECK(c.output_format == OutputFormat::Csv);
  CHECK(c.certificate_paths == std::vector<std::string>{"a.cert", "b.cert"});
  REQUIRE(c.cases.size() == 2);
  CHECK(c.cases[1].tag == T::GammaClosedForm);
  CHECK(c.cases[1].r == 3);
  CHECK(c.desk_cap == kDefaultDeskCap);
}

TEST_CASE("config errors name the line") {
  auto message = [](const std::string& text) {
    try {
      parse_config(text);
    } catch (const ConfigError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message("workers = 1\nbogus = 2\n") == "line 2: unknown key 'bogus'");
  CHECK(message("workers\n") == "line 1: expected key = value");
  CHECK(message("workers = two\n").find("line 1: workers: expected an integer") == 0);
  CHECK(message("output_format = xml\n").find("line 1") == 0);
  CHECK(message("guard_digits = 0\n") == "guard_digits must be at least 1");
  CHECK(message("desk_cap = 999\n") == "desk_cap must be at least 1000");
  CHECK(message("workers = 0\n") == "workers must be at least 1");
  CHECK_THROWS_AS(load_config("/nonexistent.conf"), ConfigError);
}

TEST_CASE("case lists") {
  const auto cases = parse_case_list("G2:13, lemma3_2:7:3");
  REQUIRE(cases.size() == 2);
  CHECK(cases[0].p == 13);
  CHECK(cases[1].tag == T::BoundaryValuation);
  CHECK_THROWS_AS(parse_case_list("THM_1_1:3"), ConfigError);
  CHECK_THROWS_AS(parse_case_list("nope:3"), ConfigError);
  CHECK_THROWS_AS(parse_case_list("G2"), ConfigError);
}

TEST_CASE("default battery covers every asserted case") {
  const auto battery = default_battery();
  CHECK(battery.size() == 44);
  for (const auto& c : battery) CHECK_NOTHROW(validate(c));
}

TEST_CASE("json report") {
  const auto rep = check({T::GammaClosedForm, 3, 3});
  const auto j = to_json(rep);
  std::vector<std::string> keys;
  for (const auto& item : j.items()) keys.push_back(item.key());
  const std::vector<std::string> expected = {
      "case", "p", "r", "t", "modulus_exponent", "truncation", "lhs", "rhs", "holds",
      "excess_valuation", "wall_ms", "skipped", "informational", "note",
      "strong_modulus_exponent", "strong_holds", "strong_excess_valuation", "error"};
  CHECK(keys == expected);
  CHECK(j["case"] == "THM_1_1");
  CHECK(j["lhs"] == "3^3 * 2");
  CHECK(j["holds"] == true);
  CHECK(j["t"].is_null());
  CHECK(to_json(rep, false)["wall_ms"].is_null());
  const auto g2 = to_json(check({T::VanHamme, 5, 1}));
  CHECK(g2["t"] == 1);
  CHECK(g2["r"].is_null());
}

TEST_CASE("csv report") {
  const auto csv = render_csv({check({T::VanHamme, 5, 1})}, false);
  CHECK(csv.rfind("case,p,r,t,modulus_exponent,", 0) == 0);
  CHECK(csv.find("\nG2,5,,1,3,1,5^1 * 13,5^1 * 13,true,") != std::string::npos);
}

TEST_CASE("summary lines and failure accounting") {
  const auto good = check({T::GammaClosedForm, 3, 3});
  CHECK(summary_line(good) == "THM_1_1 p=3 r=3: holds mod 3^4 (lhs 3^3 * 2, rhs 3^3 * 2)");
  CHECK_FALSE(asserted_failure(good));
  const auto boundary = check({T::BoundaryValuation, 3, 3});
  CHECK(summary_line(boundary) == "LEMMA_3_2 p=3 r=3: FAILS (minimum valuation 2, bound 4)");
  CHECK(asserted_failure(boundary));
  const auto info = check({T::GeneralEvenPower, 3, 2});
  CHECK(summary_line(info).find("[informational]") != std::string::npos);
  CHECK_FALSE(asserted_failure(info));
  CongruenceReport errored;
  errored.error = "boom";
  CHECK(asserted_failure(errored));
}

}  // TEST_SUITE

// Exercises the shared library through its C header only.
#include <doctest.h>

#include <string>

#include "semistar/semistar_c.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  ss_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("domain lifecycle and evaluation") {
  ss_domain* d = nullptr;
  REQUIRE(ss_domain_parse("family=numsgr generators=[3,4,5]", &d) == SS_OK);
  char* out = nullptr;
  REQUIRE(ss_eval(d, "v(<x^3,x^4>)", SS_FORMAT_TEXT, &out) == SS_OK);
  CHECK(take(out) == "v(<x^3, x^4>) = <x^3, x^4, x^5>\n");
  REQUIRE(ss_eval(d, "M", SS_FORMAT_JSON, &out) == SS_OK);
  CHECK(take(out).find("\"value\": \"<x^3, x^4, x^5>\"") != std::string::npos);
  REQUIRE(ss_domain_describe(d, &out) == SS_OK);
  CHECK(!take(out).empty());
  ss_domain_free(d);
  ss_domain_free(nullptr);
}

TEST_CASE("status codes and last error") {
  ss_domain* d = nullptr;
  CHECK(ss_domain_parse("family=numsgr colour=red", &d) == SS_ERR_PARSE);
  CHECK(d == nullptr);
  CHECK(std::string(ss_last_error()).find("column 15") != std::string::npos);
  CHECK(ss_domain_parse("family=numsgr generators=[4,6]", &d) == SS_ERR_SEMANTIC);
  CHECK(ss_domain_parse("family=pullback group=ZxZ_lex extension=a^2-2", &d) == SS_ERR_UNSUPPORTED);
  CHECK(ss_domain_parse(nullptr, &d) == SS_ERR_ARG);

  REQUIRE(ss_domain_parse("family=valuation group=Q", &d) == SS_OK);
  char* out = nullptr;
  CHECK(ss_eval(d, "<t(1)> : st[K](D)", SS_FORMAT_TEXT, &out) == SS_ERR_ZERO);
  CHECK(out == nullptr);
  CHECK(ss_eval(d, "<x^3>", SS_FORMAT_TEXT, &out) == SS_ERR_PARSE);
  CHECK(ss_eval(d, "M", SS_FORMAT_TEXT, nullptr) == SS_ERR_ARG);
  ss_domain_free(d);
  CHECK(std::string(ss_status_name(SS_FAIL)) == "assertion failed");
}

TEST_CASE("scenarios through the C API") {
  char* out = nullptr;
  REQUIRE(ss_scenario_names(&out) == SS_OK);
  auto names = take(out);
  CHECK(names.find("pvd-2.6\n") != std::string::npos);
  REQUIRE(ss_run_scenarios("numsgr-345,pvd-2.6", 0, 200, 4, SS_FORMAT_TEXT, &out) == SS_OK);
  auto a = take(out);
  REQUIRE(ss_run_scenarios("numsgr-345,pvd-2.6", 0, 200, 4, SS_FORMAT_TEXT, &out) == SS_OK);
  CHECK(take(out) == a);
  CHECK(a.find("0 failed") != std::string::npos);
  CHECK(ss_run_scenarios("unknown", 0, 200, 4, SS_FORMAT_TEXT, &out) == SS_ERR_SEMANTIC);
  CHECK(ss_run_scenarios("all", 0, 0, 4, SS_FORMAT_TEXT, &out) == SS_ERR_ARG);
  CHECK(std::string(ss_version()).size() > 0);
}

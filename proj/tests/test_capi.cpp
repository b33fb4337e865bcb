#include <doctest.h>

#include <json.hpp>

#include <string>

#include "asymcert.h"

using Json = nlohmann::json;

namespace {

struct Str {
  char* ptr = nullptr;
  ~Str() { ac_string_free(ptr); }
  Json json() const { return Json::parse(std::string(ptr ? ptr : "null")); }
};

struct Sys {
  ac_system* ptr = nullptr;
  ~Sys() { ac_system_free(ptr); }
};

}  // namespace

TEST_CASE("certify through the C surface") {
  const char* zeros[] = {"0", "0", "0"};
  Str out, err;
  REQUIRE(ac_certify(zeros, 3, &out.ptr, &err.ptr) == AC_OK);
  Json j = out.json();
  CHECK(j.at("trivial").get<bool>());
  CHECK(j.at("gamma").get<std::string>() == "1");

  const char* mixed[] = {"7/3", "0", "-7/3"};
  Str out2;
  REQUIRE(ac_certify(mixed, 3, &out2.ptr, nullptr) == AC_OK);
  CHECK_FALSE(out2.json().at("trivial").get<bool>());
}

TEST_CASE("certify rejects bad input") {
  const char* bad[] = {"1", "abc"};
  Str out, err;
  CHECK(ac_certify(bad, 2, &out.ptr, &err.ptr) == AC_ERR_INVALID_ARGUMENT);
  CHECK(err.ptr != nullptr);
  CHECK(ac_certify(nullptr, 0, &out.ptr, nullptr) == AC_ERR_INVALID_ARGUMENT);
}

TEST_CASE("omega chain") {
  Str out;
  REQUIRE(ac_omega_chain(5, &out.ptr, nullptr) == AC_OK);
  Json j = out.json();
  CHECK(j.at("terminal").get<std::string>() == "4");
  CHECK(j.at("determinant_nonzero").get<bool>());
  CHECK(j.at("levels").size() == 5);

  Str err;
  CHECK(ac_omega_chain(1, &out.ptr, &err.ptr) == AC_ERR_ARITHMETIC);
}

TEST_CASE("system handles and both parse formats") {
  Sys sys;
  Str err;
  REQUIRE(ac_system_parse_text("y1 + y2 <= 0\n-y1 - y2 <= 0", &sys.ptr, &err.ptr) == AC_OK);
  Str json_out;
  REQUIRE(ac_system_to_json(sys.ptr, &json_out.ptr) == AC_OK);

  Sys sys2;
  REQUIRE(ac_system_parse_json(json_out.ptr, &sys2.ptr, &err.ptr) == AC_OK);
  Str json_out2;
  REQUIRE(ac_system_to_json(sys2.ptr, &json_out2.ptr) == AC_OK);
  CHECK(json_out.json() == json_out2.json());

  Sys bad;
  Str perr;
  CHECK(ac_system_parse_text("y1 < abc", &bad.ptr, &perr.ptr) == AC_ERR_PARSE);
  CHECK(bad.ptr == nullptr);
  CHECK(perr.ptr != nullptr);
  CHECK(ac_system_parse_json("{", &bad.ptr, nullptr) == AC_ERR_PARSE);
}

TEST_CASE("solve-asym and decide with audit") {
  Sys sys;
  REQUIRE(ac_system_parse_text("y1 + y2 <= 0\n-y1 - y2 <= 0", &sys.ptr, nullptr) == AC_OK);

  Str solve_out;
  REQUIRE(ac_solve_asym(sys.ptr, nullptr, &solve_out.ptr, nullptr) == AC_OK);
  CHECK(solve_out.json().at("feasible").get<bool>());
  CHECK(solve_out.json().at("oracle").at("agree").get<bool>());

  const char* subset[] = {"y1", "y2"};
  Str decide_out;
  REQUIRE(ac_decide(sys.ptr, subset, 2, nullptr, 1, &decide_out.ptr, nullptr) == AC_OK);
  Json j = decide_out.json();
  CHECK(j.at("part1_feasible").get<bool>());
  CHECK(j.at("part2_nontrivial").get<bool>());
  CHECK(j.at("audit").at("passed").get<bool>());

  const char* bad_subset[] = {"zz"};
  Str err;
  CHECK(ac_decide(sys.ptr, bad_subset, 1, nullptr, 0, &decide_out.ptr, &err.ptr) ==
        AC_ERR_INVALID_ARGUMENT);
}

TEST_CASE("determinism: identical inputs give byte-identical JSON") {
  Sys sys;
  REQUIRE(ac_system_parse_text("y1 > 0\ny1 + y2 < 5", &sys.ptr, nullptr) == AC_OK);
  const char* subset[] = {"y2", "y1"};
  Str a, b;
  REQUIRE(ac_decide(sys.ptr, subset, 2, nullptr, 1, &a.ptr, nullptr) == AC_OK);
  REQUIRE(ac_decide(sys.ptr, subset, 2, nullptr, 1, &b.ptr, nullptr) == AC_OK);
  CHECK(std::string(a.ptr) == std::string(b.ptr));
}

TEST_CASE("pivot limit maps to its own status") {
  Sys sys;
  REQUIRE(ac_system_parse_text("y1 + y2 >= 4\ny2 - y1 >= 2", &sys.ptr, nullptr) == AC_OK);
  ac_options opt;
  ac_options_init(&opt);
  opt.pivot_limit = 1;
  Str out, err;
  CHECK(ac_solve_asym(sys.ptr, &opt, &out.ptr, &err.ptr) == AC_ERR_LIMIT);
}

TEST_CASE("selftest runs clean") {
  ac_options opt;
  ac_options_init(&opt);
  opt.seed = 7;
  opt.selftest_trials = 10;
  Str out;
  REQUIRE(ac_selftest(&opt, &out.ptr, nullptr) == AC_OK);
  CHECK(out.json().at("passed").get<bool>());
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdlib>
#include <json.hpp>

#include "bergman/error.hpp"
#include "bergman/report.hpp"
#include "bergman/suite.hpp"

using namespace bergman;
using json = nlohmann::json;

TEST_CASE("report pass rules") {
  CHECK(CheckReport::make("x", {}, 1.0, 1.0 + 1e-12, 1e-10, "exact").pass);
  CHECK_FALSE(CheckReport::make("x", {}, 1.0, 2.0, 1e-10, "exact").pass);
  CHECK(CheckReport::make("x", {}, 0.5, BoundValue{1.0}, 0.0, "exact").pass);
  CHECK_FALSE(CheckReport::make("x", {}, 1.5, BoundValue{1.0}, 0.1, "exact").pass);
  CHECK(CheckReport::make("x", {}, 3.0, std::monostate{}, 0.0, "exact").pass);
  CHECK_FALSE(CheckReport::make("x", {}, Divergent{}, std::monostate{}, 0.0, "exact").pass);
  CHECK_FALSE(CheckReport::make("x", {}, Divergent{}, BoundValue{1e300}, 0.0, "exact").pass);
  CHECK(CheckReport::make("x", {}, cplx(1, 1), cplx(1, 1 + 1e-13), 1e-12, "exact").pass);
}

TEST_CASE("resolution parsing") {
  const Resolution r = parse_resolution("32x128");
  CHECK(r.radial == 32);
  CHECK(r.angular == 128);
  CHECK_THROWS_AS(parse_resolution("32"), ParseError);
  CHECK_THROWS_AS(parse_resolution("0x8"), Error);
  CHECK_THROWS_AS(parse_resolution("8x"), ParseError);
}

TEST_CASE("json and csv lines") {
  const CheckReport r = CheckReport::make("blowup", {{"a", 0.5}, {"tag", std::string("x;y")}}, 1.25, 1.5, 1e-4, "64x256");
  const json j = json::parse(to_json_line(r));
  CHECK(j["check"] == "blowup");
  CHECK(j["params"]["resolution"] == "64x256");
  CHECK(j["params"]["a"] == 0.5);
  CHECK(j["observed"] == 1.25);
  CHECK(j["expected"] == 1.5);
  CHECK(j["tol"] == 1e-4);
  CHECK(j["pass"] == false);
  const std::string line = to_json_line(r);
  CHECK(line.find('\n') == std::string::npos);
  CHECK(line.find("\"check\"") < line.find("\"params\""));
  CHECK(line.find("\"expected\"") < line.find("\"tol\""));

  const json c = json::parse(to_json_line(CheckReport::make("c", {}, cplx(1, -2), BoundValue{3.0}, 0.0, "exact")));
  CHECK(c["observed"] == json::array({1.0, -2.0}));
  CHECK(c["expected"]["bound"] == 3.0);
  CHECK(json::parse(to_json_line(CheckReport::make("d", {}, Divergent{}, std::monostate{}, 0.0, "exact")))["observed"] ==
        "divergent");

  const std::string header = csv_header();
  const std::string row = to_csv_line(r);
  CHECK(std::count(header.begin(), header.end(), ',') == std::count(row.begin(), row.end(), ','));
  CHECK(row.rfind("blowup,", 0) == 0);
}

TEST_CASE("registry") {
  const auto& names = available_checks();
  CHECK(names.front() == "orthonormality");
  CHECK(std::find(names.begin(), names.end(), "blowup") != names.end());
  SuiteConfig cfg;
  try {
    run_check("nonexistent", cfg);
    FAIL("expected unknown check");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownCheck);
  }
}

TEST_CASE("unknown names are rejected before anything runs") {
  SuiteConfig cfg;
  cfg.checks = {"orthonormality", "nonexistent"};
  int emitted = 0;
  CHECK_THROWS_AS(run_suite(cfg, [&](const CheckReport&) { ++emitted; }), Error);
  CHECK(emitted == 0);
}

TEST_CASE("suite output is deterministic and ordered") {
  SuiteConfig cfg;
  cfg.checks = {"taylor-tail", "orthonormality", "mobius-metric", "threshold", "blowup"};
  cfg.seed = 7;
  auto run = [&](unsigned threads) {
    cfg.threads = threads;
    std::string out;
    std::vector<std::string> order;
    const int status = run_suite(cfg, [&](const CheckReport& r) {
      out += to_json_line(r) + "\n";
      if (order.empty() || order.back() != r.name) order.push_back(r.name);
    });
    CHECK(status == 0);
    CHECK(order == cfg.checks);
    return out;
  };
  const std::string a = run(1);
  const std::string b = run(4);
  CHECK(a == b);
}

TEST_CASE("orthonormality check passes") {
  SuiteConfig cfg;
  const auto reports = run_check("orthonormality", cfg);
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].pass);
  CHECK(std::get<double>(reports[0].observed) <= 1e-10);
}

TEST_CASE("thread cap from the environment") {
  setenv("BERGMAN_KIT_THREADS", "1", 1);
  CHECK(default_thread_count() == 1);
  setenv("BERGMAN_KIT_THREADS", "junk", 1);
  CHECK(default_thread_count() >= 1);
  unsetenv("BERGMAN_KIT_THREADS");
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "bergman/bergman_kit.h"

using doctest::Approx;

namespace {

bk_complex c(double re, double im = 0.0) { return bk_complex{re, im}; }

void collect(const char* line, void* user) { static_cast<std::vector<std::string>*>(user)->emplace_back(line); }

}  // namespace

TEST_CASE("version and errors") {
  CHECK(std::strlen(bk_version()) > 0);
  bk_rule* rule = nullptr;
  CHECK(bk_rule_create(0, 8, 0.0, &rule) == BK_INVALID_ARGUMENT);
  CHECK(rule == nullptr);
  CHECK(std::strlen(bk_last_error()) > 0);
  CHECK(bk_rule_create(8, 8, -1.0, &rule) != BK_OK);
  CHECK(bk_rule_create(8, 8, 0.0, nullptr) == BK_INVALID_ARGUMENT);
}

TEST_CASE("rules and integration") {
  bk_rule* rule = nullptr;
  REQUIRE(bk_rule_parse("32x128", 1.0, &rule) == BK_OK);
  CHECK(bk_rule_radial_count(rule) == 32);
  CHECK(bk_rule_angular_count(rule) == 128);
  CHECK(bk_rule_alpha(rule) == 1.0);
  bk_function* f = nullptr;
  REQUIRE(bk_function_parse("const:1", &f) == BK_OK);
  bk_complex v;
  REQUIRE(bk_integrate(f, rule, &v) == BK_OK);
  CHECK(v.re == Approx(1.0).epsilon(1e-14));
  bk_function_destroy(f);
  bk_rule_destroy(rule);
  CHECK(bk_rule_parse("32by128", 0.0, &rule) == BK_PARSE);
  CHECK(bk_required_angular_count(0.9) == 500);
  CHECK(bk_required_angular_count(0.0) == 50);
}

TEST_CASE("function descriptors") {
  bk_function* f = nullptr;
  REQUIRE(bk_function_parse("poly:+1,0,0", &f) == BK_OK);
  size_t needed = 0;
  CHECK(bk_function_canonical(f, nullptr, 0, &needed) == BK_OK);
  CHECK(needed == 6);
  std::string buf(needed + 1, '\0');
  CHECK(bk_function_canonical(f, buf.data(), buf.size(), nullptr) == BK_OK);
  CHECK(std::string(buf.c_str()) == "poly:1");
  char small[3];
  CHECK(bk_function_canonical(f, small, sizeof small, nullptr) == BK_OK);
  CHECK(std::string(small) == "po");
  CHECK(bk_function_is_analytic(f) == 1);
  bk_complex k;
  CHECK(bk_function_constant(f, &k) == BK_INVALID_ARGUMENT);
  bk_function_destroy(f);
  REQUIRE(bk_function_parse("const:2i", &f) == BK_OK);
  CHECK(bk_function_constant(f, &k) == BK_OK);
  CHECK(k.im == 2.0);
  bk_function_destroy(f);

  CHECK(bk_function_parse("ga:1.5", &f) == BK_PARSE);
  CHECK(bk_last_error_position() == 3);
  CHECK(bk_function_parse("poly:1,2,x", &f) == BK_PARSE);
  CHECK(bk_last_error_position() == 9);

  REQUIRE(bk_function_parse("conj-monomial:1", &f) == BK_OK);
  CHECK(bk_function_is_analytic(f) == 0);
  bk_complex out;
  CHECK(bk_function_eval(f, c(0.3, 0.4), &out) == BK_OK);
  CHECK(out.im == Approx(-0.4));
  bk_function_destroy(f);

  bk_complex z;
  CHECK(bk_complex_parse("1-0.5i", &z) == BK_OK);
  CHECK(z.im == -0.5);
  char text[32];
  CHECK(bk_complex_format(c(0, -1), text, sizeof text, nullptr) == BK_OK);
  CHECK(std::string(text) == "-i");
}

TEST_CASE("kernels and maps") {
  bk_complex k;
  REQUIRE(bk_kernel_disc(c(0.5), c(0.5), 0.0, &k) == BK_OK);
  CHECK(k.re == Approx(16.0 / 9.0));
  CHECK(bk_kernel_disc(c(1.0), c(0.5), 0.0, &k) == BK_DOMAIN);
  REQUIRE(bk_kernel_series(c(0.5), c(0.5), 100, &k) == BK_OK);
  CHECK(k.re == Approx(16.0 / 9.0).epsilon(1e-10));
  bk_complex value, deriv;
  REQUIRE(bk_mobius(c(0.5), c(0.5), &value, &deriv) == BK_OK);
  CHECK(std::abs(value.re) <= 1e-16);
  CHECK(deriv.re == Approx(-4.0 / 3.0));
  REQUIRE(bk_riemann_deriv(BK_DOMAIN_DISC, c(0.5), c(0.5), &k) == BK_OK);
  CHECK(k.re == Approx(4.0 / 3.0));
  REQUIRE(bk_riemann_deriv(BK_DOMAIN_SLIT_PLANE, c(-2.0, 0.5), c(-2.0, 0.5), &k) == BK_OK);
  CHECK(k.re > 0.0);
  CHECK(std::abs(k.im) <= 1e-12);
}

TEST_CASE("projections") {
  bk_rule* rule = nullptr;
  REQUIRE(bk_rule_create(64, 256, 0.0, &rule) == BK_OK);
  bk_function* f = nullptr;
  REQUIRE(bk_function_parse("conj-monomial:1", &f) == BK_OK);
  bk_complex p;
  REQUIRE(bk_project(f, 0.0, c(0.3), rule, &p) == BK_OK);
  CHECK(std::abs(p.re) <= 1e-12);
  CHECK(bk_project(f, 1.0, c(0.3), rule, &p) != BK_OK);
  bk_function_destroy(f);

  double observed = 0, expected = 0;
  REQUIRE(bk_blowup(0.5, rule, &observed, &expected) == BK_OK);
  CHECK(observed == Approx(expected).epsilon(1e-8));
  CHECK(expected == Approx(4.0 * std::log(4.0 / 3.0)));
  bk_rule_destroy(rule);

  int finite = -1;
  double value = 0;
  REQUIRE(bk_adjoint_divergence_witness(1.0, 2.0, &finite, &value) == BK_OK);
  CHECK(finite == 1);
  CHECK(value == Approx(4.0 / 3.0));
  REQUIRE(bk_adjoint_divergence_witness(-0.5, 2.0, &finite, &value) == BK_OK);
  CHECK(finite == 0);
}

TEST_CASE("estimates") {
  bk_function* f = nullptr;
  REQUIRE(bk_function_parse("poly:0,1", &f) == BK_OK);
  double mean = 0;
  REQUIRE(bk_integral_mean(f, 0.5, 2.0, 64, &mean) == BK_OK);
  CHECK(mean == Approx(0.5));
  bk_function_destroy(f);

  double integral = 0, ratio = 0;
  REQUIRE(bk_forelli_rudin(c(0.0), 2.0, 1.5, 64, 256, &integral, &ratio) == BK_OK);
  CHECK(integral == Approx(2.0).epsilon(1e-10));
  CHECK(bk_forelli_rudin(c(0.0), 1.5, 2.0, 64, 256, &integral, &ratio) != BK_OK);

  bk_schur_result s;
  bk_record* rec = nullptr;
  REQUIRE(bk_schur(0.0, 2.0, 64, 256, &s, &rec) == BK_OK);
  CHECK(s.diverged == 0);
  CHECK(std::isfinite(s.bound));
  CHECK(s.projection_bound == Approx(s.bound));
  REQUIRE(rec != nullptr);
  CHECK(bk_record_pass(rec) == 1);
  bk_record_destroy(rec);
}

TEST_CASE("records") {
  bk_record* rec = nullptr;
  REQUIRE(bk_record_create("demo", &rec) == BK_OK);
  CHECK(bk_record_param_double(rec, "a", 0.5) == BK_OK);
  CHECK(bk_record_param_int(rec, "n", 3) == BK_OK);
  CHECK(bk_record_param_string(rec, "f", "poly:1") == BK_OK);
  CHECK(bk_record_param_bool(rec, "flag", 1) == BK_OK);
  CHECK(bk_record_param_complex(rec, "z", c(0.1, 0.2)) == BK_OK);
  CHECK(bk_record_resolution(rec, "8x8") == BK_OK);
  CHECK(bk_record_observed_double(rec, 1.0) == BK_OK);
  CHECK(bk_record_expected_double(rec, 1.5) == BK_OK);
  CHECK(bk_record_tolerance(rec, 0.1) == BK_OK);
  CHECK(bk_record_pass(rec) == 0);
  CHECK(bk_record_tolerance(rec, 0.5) == BK_OK);
  CHECK(bk_record_pass(rec) == 1);
  CHECK(bk_record_expected_bound(rec, 0.9) == BK_OK);
  CHECK(bk_record_pass(rec) == 1);
  CHECK(bk_record_observed_divergent(rec) == BK_OK);
  CHECK(bk_record_pass(rec) == 0);

  size_t needed = 0;
  REQUIRE(bk_record_format(rec, BK_FORMAT_JSON, nullptr, 0, &needed) == BK_OK);
  std::string json(needed + 1, '\0');
  REQUIRE(bk_record_format(rec, BK_FORMAT_JSON, json.data(), json.size(), nullptr) == BK_OK);
  CHECK(std::string(json.c_str()).rfind("{\"check\":\"demo\"", 0) == 0);
  CHECK(json.find("\"divergent\"") != std::string::npos);
  CHECK(bk_record_param_double(nullptr, "a", 1.0) == BK_INVALID_ARGUMENT);
  bk_record_destroy(rec);
  CHECK(std::string(bk_csv_header()).rfind("check,", 0) == 0);
}

TEST_CASE("suite") {
  CHECK(bk_check_count() > 20);
  CHECK(std::string(bk_check_name(0)) == "orthonormality");
  CHECK(bk_check_name(bk_check_count()) == nullptr);

  const char* names[] = {"orthonormality", "taylor-tail"};
  bk_suite_config cfg{};
  cfg.checks = names;
  cfg.check_count = 2;
  cfg.seed = 7;
  std::vector<std::string> lines;
  int status = -1;
  REQUIRE(bk_suite_run(&cfg, collect, &lines, &status) == BK_OK);
  CHECK(status == 0);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0].find("orthonormality") != std::string::npos);

  const char* bad[] = {"orthonormality", "nonexistent"};
  cfg.checks = bad;
  lines.clear();
  CHECK(bk_suite_run(&cfg, collect, &lines, &status) == BK_UNKNOWN_CHECK);
  CHECK(lines.empty());
  CHECK(bk_suite_run(&cfg, nullptr, nullptr, &status) == BK_INVALID_ARGUMENT);

  cfg.checks = names;
  cfg.check_count = 1;
  cfg.format = BK_FORMAT_CSV;
  REQUIRE(bk_suite_run(&cfg, collect, &lines, &status) == BK_OK);
  CHECK(lines.back().rfind("orthonormality,", 0) == 0);
}

// bergman-kit: command-line front end over the C API.
//
// Exit status: 0 when every emitted record passes, 1 on a failed record or a
// numerical failure, 2 on usage errors, bad input or unknown check names.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bergman/bergman_kit.h"

namespace {

struct Failure : std::runtime_error {
  bk_status status;
  Failure(bk_status s, const std::string& what) : std::runtime_error(what), status(s) {}
};

void check(bk_status s) {
  if (s != BK_OK) throw Failure(s, bk_last_error());
}

int exit_code_for(bk_status s) { return (s == BK_INTEGRATION || s == BK_INTERNAL) ? 1 : 2; }

bk_complex parse_complex(const std::string& text) {
  bk_complex z{};
  check(bk_complex_parse(text.c_str(), &z));
  return z;
}

double cabs(bk_complex z) { return std::hypot(z.re, z.im); }

struct RuleDeleter {
  void operator()(bk_rule* r) const { bk_rule_destroy(r); }
};
struct FunctionDeleter {
  void operator()(bk_function* f) const { bk_function_destroy(f); }
};
using RulePtr = std::unique_ptr<bk_rule, RuleDeleter>;
using FunctionPtr = std::unique_ptr<bk_function, FunctionDeleter>;

struct RuleSize {
  int radial;
  int angular;
};

RuleSize parse_rule(const std::string& text) {
  bk_rule* raw = nullptr;
  check(bk_rule_parse(text.c_str(), 0.0, &raw));
  RulePtr r(raw);
  return {bk_rule_radial_count(r.get()), bk_rule_angular_count(r.get())};
}

// The angular count is raised to resolve points as far out as max_abs.
RulePtr make_rule(RuleSize size, double alpha, double max_abs) {
  bk_rule* raw = nullptr;
  check(bk_rule_create(size.radial, std::max(size.angular, bk_required_angular_count(max_abs)), alpha, &raw));
  return RulePtr(raw);
}

std::string resolution_of(const bk_rule* r) {
  return std::to_string(bk_rule_radial_count(r)) + "x" + std::to_string(bk_rule_angular_count(r));
}

FunctionPtr parse_function(const std::string& text) {
  bk_function* raw = nullptr;
  check(bk_function_parse(text.c_str(), &raw));
  return FunctionPtr(raw);
}

std::string canonical(const bk_function* f) {
  std::size_t n = 0;
  check(bk_function_canonical(f, nullptr, 0, &n));
  std::string s(n + 1, '\0');
  check(bk_function_canonical(f, s.data(), s.size(), &n));
  s.resize(n);
  return s;
}

class Output {
 public:
  void open(const std::string& path, bk_format format) {
    format_ = format;
    if (!path.empty()) {
      file_ = std::fopen(path.c_str(), "w");
      if (!file_) throw Failure(BK_INVALID_ARGUMENT, "cannot open output file '" + path + "'");
    }
    if (format_ == BK_FORMAT_CSV) line(bk_csv_header());
  }
  ~Output() {
    if (file_) std::fclose(file_);
  }
  void line(const char* s) {
    std::FILE* f = file_ ? file_ : stdout;
    std::fputs(s, f);
    std::fputc('\n', f);
  }
  bk_format format() const { return format_; }

 private:
  std::FILE* file_ = nullptr;
  bk_format format_ = BK_FORMAT_JSON;
};

class Record {
 public:
  explicit Record(const char* name) { check(bk_record_create(name, &rec_)); }
  explicit Record(bk_record* owned) : rec_(owned) {}
  ~Record() { bk_record_destroy(rec_); }
  Record(const Record&) = delete;
  Record& operator=(const Record&) = delete;

  Record& param(const char* k, double v) { return done(bk_record_param_double(rec_, k, v)); }
  Record& param(const char* k, int64_t v) { return done(bk_record_param_int(rec_, k, v)); }
  Record& param(const char* k, bk_complex v) { return done(bk_record_param_complex(rec_, k, v)); }
  Record& param(const char* k, const std::string& v) { return done(bk_record_param_string(rec_, k, v.c_str())); }
  Record& observed(double v) { return done(bk_record_observed_double(rec_, v)); }
  Record& observed(bk_complex v) { return done(bk_record_observed_complex(rec_, v)); }
  Record& expected(double v) { return done(bk_record_expected_double(rec_, v)); }
  Record& expected(bk_complex v) { return done(bk_record_expected_complex(rec_, v)); }
  Record& tolerance(double v) { return done(bk_record_tolerance(rec_, v)); }
  Record& resolution(const std::string& v) { return done(bk_record_resolution(rec_, v.c_str())); }

  // Writes the record; returns whether it passed.
  bool emit(Output& out) const {
    std::size_t n = 0;
    check(bk_record_format(rec_, out.format(), nullptr, 0, &n));
    std::string s(n + 1, '\0');
    check(bk_record_format(rec_, out.format(), s.data(), s.size(), &n));
    s.resize(n);
    out.line(s.c_str());
    return bk_record_pass(rec_) != 0;
  }

 private:
  Record& done(bk_status s) {
    check(s);
    return *this;
  }
  bk_record* rec_ = nullptr;
};

struct OutputOptions {
  std::string format = "json";
  bool json = false;
  bool csv = false;
  std::string path;

  void add(CLI::App* app) {
    app->add_option("--format", format, "Record format")->check(CLI::IsMember({"json", "csv"}));
    app->add_flag("--json", json, "Same as --format json");
    app->add_flag("--csv", csv, "Same as --format csv");
    app->add_option("--output", path, "Write records to this file instead of stdout");
  }
  bk_format resolve() const {
    if (json && csv) throw Failure(BK_INVALID_ARGUMENT, "--json and --csv are exclusive");
    if (csv) return BK_FORMAT_CSV;
    if (json) return BK_FORMAT_JSON;
    return format == "csv" ? BK_FORMAT_CSV : BK_FORMAT_JSON;
  }
};

int status_of(bool all_pass) { return all_pass ? 0 : 1; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bergman-space numerics and verification suite"};
  app.require_subcommand(1);
  app.set_version_flag("--version", bk_version());

  OutputOptions out_opts;
  std::string rule_text = "64x256";
  double alpha = 0.0;

  // kernel
  auto* kernel = app.add_subcommand("kernel", "Evaluate the weighted disc kernel");
  std::string k_at, k_zeta;
  std::size_t k_terms = 0;
  double k_tol = 1e-8;
  kernel->add_option("--at", k_at, "Point z")->required();
  kernel->add_option("--zeta", k_zeta, "Second point (default: z)");
  kernel->add_option("--alpha", alpha, "Weight exponent");
  kernel->add_option("--terms", k_terms, "Compare a truncated series against the closed form (alpha 0)");
  kernel->add_option("--tol", k_tol, "Tolerance for the series comparison");
  out_opts.add(kernel);

  // project
  auto* proj = app.add_subcommand("project", "Evaluate the weighted projection at a point");
  std::string p_f, p_at;
  double p_tol = 1e-8;
  proj->add_option("--f", p_f, "Function descriptor, e.g. poly:1,0,0.5")->required();
  proj->add_option("--at", p_at, "Point z")->required();
  proj->add_option("--alpha", alpha, "Weight exponent");
  proj->add_option("--rule", rule_text, "Rule size RADIALxANGULAR");
  proj->add_option("--tol", p_tol, "Tolerance against f(z) for analytic f");
  out_opts.add(proj);

  // adjoint
  auto* adj = app.add_subcommand("adjoint", "Evaluate the adjoint projection at a point");
  std::string a_g, a_at;
  double a_tol = 1e-8;
  adj->add_option("--g", a_g, "Function descriptor")->required();
  adj->add_option("--at", a_at, "Point z")->required();
  adj->add_option("--alpha", alpha, "Weight exponent");
  adj->add_option("--rule", rule_text, "Rule size RADIALxANGULAR");
  adj->add_option("--tol", a_tol, "Tolerance for constant g");
  out_opts.add(adj);

  // blowup
  auto* blow = app.add_subcommand("blowup", "Projection of the unimodular witness g_a at a");
  std::vector<double> b_a{0.5, 0.9, 0.99};
  std::optional<double> b_tol;
  blow->add_option("--a", b_a, "Values of a in (0,1)")->delimiter(',');
  blow->add_option("--rule", rule_text, "Rule size RADIALxANGULAR");
  blow->add_option("--tol", b_tol, "Tolerance (default 1e-4, 1e-3 for a >= 0.99)");
  out_opts.add(blow);

  // conformal
  auto* conf = app.add_subcommand("conformal", "Riemann map derivative from the Bergman kernel");
  std::string c_domain = "disc", c_base = "0.5";
  std::vector<std::string> c_at;
  double c_tol = 1e-10;
  conf->add_option("--domain", c_domain, "disc or slit")->check(CLI::IsMember({"disc", "slit"}));
  conf->add_option("--base", c_base, "Base point sent to 0");
  conf->add_option("--at", c_at, "Evaluation points")->required()->delimiter(',');
  conf->add_option("--tol", c_tol, "Tolerance against the disc oracle");
  out_opts.add(conf);

  // schur
  auto* schur = app.add_subcommand("schur", "Schur-test certificate for the weighted projection");
  double s_p = 2.0;
  schur->add_option("--alpha", alpha, "Weight exponent");
  schur->add_option("--p", s_p, "Exponent p > 1");
  schur->add_option("--rule", rule_text, "Rule size RADIALxANGULAR");
  out_opts.add(schur);

  // means
  auto* means = app.add_subcommand("means", "Integral means F(r) on circles");
  std::string m_f;
  double m_p = 2.0, m_max_r = 0.95;
  int m_count = 20, m_angular = 256;
  std::vector<double> m_radii;
  means->add_option("--f", m_f, "Function descriptor")->required();
  means->add_option("--p", m_p, "Exponent p > 0");
  means->add_option("--radii", m_radii, "Explicit radii")->delimiter(',');
  means->add_option("--count", m_count, "Number of equispaced radii in [0, max-r]");
  means->add_option("--max-r", m_max_r, "Largest radius");
  means->add_option("--angular", m_angular, "Trapezoid points");
  out_opts.add(means);

  // forelli-rudin
  auto* fr = app.add_subcommand("forelli-rudin", "Integral against |1 - conj(z) zeta|^-s with weight t-2");
  double f_s = 3.0, f_t = 2.0;
  std::vector<std::string> f_at{"0", "0.5", "0.9", "0.95"};
  fr->add_option("--s", f_s, "Exponent s");
  fr->add_option("--t", f_t, "Exponent t, 1 < t < s");
  fr->add_option("--at", f_at, "Points z")->delimiter(',');
  fr->add_option("--rule", rule_text, "Rule size RADIALxANGULAR");
  out_opts.add(fr);

  // verify
  auto* verify = app.add_subcommand("verify", "Run the verification suite");
  bool v_all = false, v_list = false;
  std::vector<std::string> v_checks;
  std::uint64_t v_seed = 0;
  unsigned v_threads = 0;
  verify->add_flag("--all", v_all, "Run every check");
  verify->add_option("--checks", v_checks, "Comma-separated check names")->delimiter(',');
  verify->add_flag("--list", v_list, "List check names and exit");
  verify->add_option("--seed", v_seed, "Seed for random test polynomials");
  verify->add_option("--threads", v_threads, "Worker threads (0: default)");
  verify->add_option("--rule", rule_text, "Rule size RADIALxANGULAR");
  out_opts.add(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Output out;
    auto open_output = [&] { out.open(out_opts.path, out_opts.resolve()); };

    if (kernel->parsed()) {
      const bk_complex z = parse_complex(k_at);
      const bk_complex w = k_zeta.empty() ? z : parse_complex(k_zeta);
      open_output();
      Record r("kernel");
      r.param("alpha", alpha).param("z", z).param("zeta", w).resolution("exact");
      bk_complex closed{};
      check(bk_kernel_disc(z, w, alpha, &closed));
      if (k_terms > 0) {
        if (alpha != 0.0) throw Failure(BK_INVALID_ARGUMENT, "--terms requires --alpha 0");
        bk_complex series{};
        check(bk_kernel_series(z, w, k_terms, &series));
        r.param("terms", static_cast<int64_t>(k_terms)).observed(series).expected(closed).tolerance(k_tol);
      } else {
        r.observed(closed);
      }
      return status_of(r.emit(out));
    }

    if (proj->parsed()) {
      const FunctionPtr f = parse_function(p_f);
      const bk_complex z = parse_complex(p_at);
      const RulePtr rule = make_rule(parse_rule(rule_text), alpha, cabs(z));
      open_output();
      bk_complex v{};
      check(bk_project(f.get(), alpha, z, rule.get(), &v));
      Record r("project");
      r.param("f", canonical(f.get())).param("alpha", alpha).param("z", z).resolution(resolution_of(rule.get()));
      r.observed(v);
      if (bk_function_is_analytic(f.get())) {
        bk_complex fz{};
        check(bk_function_eval(f.get(), z, &fz));
        r.expected(fz).tolerance(p_tol);
      }
      return status_of(r.emit(out));
    }

    if (adj->parsed()) {
      const FunctionPtr g = parse_function(a_g);
      const bk_complex z = parse_complex(a_at);
      const RulePtr rule = make_rule(parse_rule(rule_text), 0.0, cabs(z));
      open_output();
      bk_complex v{};
      check(bk_adjoint(g.get(), alpha, z, rule.get(), &v));
      Record r("adjoint");
      r.param("g", canonical(g.get())).param("alpha", alpha).param("z", z).resolution(resolution_of(rule.get()));
      r.observed(v);
      bk_complex c{};
      if (bk_function_constant(g.get(), &c) == BK_OK) {
        const double scale = (alpha + 1.0) * std::pow(1.0 - (z.re * z.re + z.im * z.im), alpha);
        r.expected(bk_complex{c.re * scale, c.im * scale}).tolerance(a_tol);
      }
      return status_of(r.emit(out));
    }

    if (blow->parsed()) {
      const RuleSize size = parse_rule(rule_text);
      std::vector<RulePtr> rules;
      for (const double a : b_a) rules.push_back(make_rule(size, 0.0, a));
      open_output();
      bool all = true;
      for (std::size_t i = 0; i < b_a.size(); ++i) {
        double observed = 0.0, expected = 0.0;
        check(bk_blowup(b_a[i], rules[i].get(), &observed, &expected));
        Record r("blowup");
        r.param("a", b_a[i]).resolution(resolution_of(rules[i].get()));
        r.observed(observed).expected(expected).tolerance(b_tol.value_or(b_a[i] < 0.99 ? 1e-4 : 1e-3));
        all = r.emit(out) && all;
      }
      return status_of(all);
    }

    if (conf->parsed()) {
      const bk_complex base = parse_complex(c_base);
      std::vector<bk_complex> pts;
      for (const auto& s : c_at) pts.push_back(parse_complex(s));
      const bk_domain domain = c_domain == "slit" ? BK_DOMAIN_SLIT_PLANE : BK_DOMAIN_DISC;
      open_output();
      bool all = true;
      for (const bk_complex z : pts) {
        bk_complex d{};
        check(bk_riemann_deriv(domain, base, z, &d));
        Record r("conformal");
        r.param("domain", c_domain).param("base", base).param("z", z).resolution("exact").observed(d);
        if (domain == BK_DOMAIN_DISC) {
          // (1-|a|^2)/(1-conj(a) z)^2
          const double dr = 1.0 - (base.re * z.re + base.im * z.im);
          const double di = -(base.re * z.im - base.im * z.re);
          const double sr = dr * dr - di * di, si = 2.0 * dr * di;
          const double num = 1.0 - (base.re * base.re + base.im * base.im);
          const double den = sr * sr + si * si;
          r.expected(bk_complex{num * sr / den, -num * si / den}).tolerance(c_tol);
        }
        all = r.emit(out) && all;
      }
      return status_of(all);
    }

    if (schur->parsed()) {
      const RuleSize size = parse_rule(rule_text);
      open_output();
      bk_schur_result res{};
      bk_record* raw = nullptr;
      check(bk_schur(alpha, s_p, size.radial, size.angular, &res, &raw));
      const Record r(raw);
      return status_of(r.emit(out));
    }

    if (means->parsed()) {
      const FunctionPtr f = parse_function(m_f);
      if (m_radii.empty()) {
        if (m_count < 2) throw Failure(BK_INVALID_ARGUMENT, "--count must be at least 2");
        for (int i = 0; i < m_count; ++i) m_radii.push_back(m_max_r * i / (m_count - 1));
      }
      const std::string fname = canonical(f.get());
      std::vector<double> values;
      for (const double r : m_radii) {
        double v = 0.0;
        check(bk_integral_mean(f.get(), r, m_p, m_angular, &v));
        values.push_back(v);
      }
      open_output();
      bool all = true;
      const std::string res = "M=" + std::to_string(m_angular);
      for (std::size_t i = 0; i < values.size(); ++i) {
        Record r("integral-mean");
        r.param("f", fname).param("p", m_p).param("r", m_radii[i]).resolution(res).observed(values[i]);
        all = r.emit(out) && all;
      }
      int64_t violations = 0;
      for (std::size_t i = 0; i < values.size(); ++i)
        for (std::size_t j = i + 1; j < values.size(); ++j)
          if (m_radii[i] < m_radii[j] && values[i] > values[j] + 1e-10) ++violations;
      Record summary("integral-means");
      summary.param("f", fname).param("p", m_p).param("radii", static_cast<int64_t>(values.size()));
      summary.resolution(res).observed(static_cast<double>(violations)).expected(0.0).tolerance(0.0);
      all = summary.emit(out) && all;
      return status_of(all);
    }

    if (fr->parsed()) {
      const RuleSize size = parse_rule(rule_text);
      std::vector<bk_complex> pts;
      for (const auto& s : f_at) pts.push_back(parse_complex(s));
      open_output();
      bool all = true;
      for (const bk_complex z : pts) {
        double integral = 0.0, ratio = 0.0;
        check(bk_forelli_rudin(z, f_s, f_t, size.radial, size.angular, &integral, &ratio));
        const int angular = std::max(size.angular, bk_required_angular_count(cabs(z)));
        Record r("forelli-rudin");
        r.param("s", f_s).param("t", f_t).param("z", z).param("integral", integral);
        r.resolution(std::to_string(size.radial) + "x" + std::to_string(angular)).observed(ratio);
        all = r.emit(out) && all;
      }
      return status_of(all);
    }

    if (verify->parsed()) {
      if (v_list) {
        for (std::size_t i = 0; i < bk_check_count(); ++i) std::puts(bk_check_name(i));
        return 0;
      }
      if (v_all == !v_checks.empty()) throw Failure(BK_INVALID_ARGUMENT, "give exactly one of --all and --checks");
      const RuleSize size = parse_rule(rule_text);
      std::vector<const char*> names;
      for (const auto& c : v_checks) names.push_back(c.c_str());
      bk_suite_config cfg{};
      cfg.checks = names.empty() ? nullptr : names.data();
      cfg.check_count = names.size();
      cfg.radial_count = size.radial;
      cfg.angular_count = size.angular;
      cfg.seed = v_seed;
      cfg.threads = v_threads;
      cfg.format = out_opts.resolve();
      // Reject unknown names before creating the output file.
      for (const auto& c : v_checks) {
        bool known = false;
        for (std::size_t i = 0; i < bk_check_count() && !known; ++i) known = c == bk_check_name(i);
        if (!known) throw Failure(BK_UNKNOWN_CHECK, "unknown check '" + c + "'");
      }
      open_output();
      int status = 0;
      check(bk_suite_run(
          &cfg, [](const char* line, void* user) { static_cast<Output*>(user)->line(line); }, &out, &status));
      return status;
    }
  } catch (const Failure& e) {
    std::fprintf(stderr, "bergman-kit: %s\n", e.what());
    return exit_code_for(e.status);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "bergman-kit: %s\n", e.what());
    return 1;
  }
  return 2;
}

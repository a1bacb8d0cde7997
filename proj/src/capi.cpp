#include "bergman/bergman_kit.h"

#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "bergman/bounds.hpp"
#include "bergman/error.hpp"
#include "bergman/function_spec.hpp"
#include "bergman/kernel.hpp"
#include "bergman/projection.hpp"
#include "bergman/quadrature.hpp"
#include "bergman/suite.hpp"

using namespace bergman;

struct bk_rule {
  QuadRule rule;
};

struct bk_function {
  FunctionSpec spec;
  Samplable fn;
};

struct bk_record {
  CheckReport report;
};

namespace {

thread_local std::string g_error;
thread_local std::size_t g_error_position = 0;

cplx to_cplx(bk_complex z) { return {z.re, z.im}; }
bk_complex from_cplx(cplx z) { return {z.real(), z.imag()}; }

void require(const void* p, const char* what) {
  if (!p) throw Error(ErrorCode::InvalidArgument, std::string(what) + " is null");
}

template <class F>
bk_status guarded(F&& body) {
  g_error.clear();
  g_error_position = 0;
  try {
    body();
    return BK_OK;
  } catch (const ParseError& e) {
    g_error = e.what();
    g_error_position = e.position();
    return BK_PARSE;
  } catch (const Error& e) {
    g_error = e.what();
    return static_cast<bk_status>(e.code());
  } catch (const std::bad_alloc&) {
    g_error = "out of memory";
    return BK_INTERNAL;
  } catch (const std::exception& e) {
    g_error = e.what();
    return BK_INTERNAL;
  } catch (...) {
    g_error = "unknown failure";
    return BK_INTERNAL;
  }
}

void copy_out(const std::string& s, char* buf, std::size_t cap, std::size_t* needed) {
  if (needed) *needed = s.size();
  if (buf && cap > 0) {
    const std::size_t n = std::min(cap - 1, s.size());
    std::memcpy(buf, s.data(), n);
    buf[n] = '\0';
  }
}

void finish(CheckReport& r) { r.pass = evaluate_pass(r.observed, r.expected, r.tolerance); }

template <class V>
bk_status add_param(bk_record* rec, const char* key, V v) {
  return guarded([&] {
    require(rec, "rec");
    require(key, "key");
    rec->report.params.emplace_back(key, ParamValue(std::move(v)));
  });
}

template <class F>
bk_status edit(bk_record* rec, F&& f) {
  return guarded([&] {
    require(rec, "rec");
    f(rec->report);
    finish(rec->report);
  });
}

}  // namespace

extern "C" {

const char* bk_last_error(void) { return g_error.c_str(); }
size_t bk_last_error_position(void) { return g_error_position; }
const char* bk_version(void) { return "1.0.0"; }

bk_status bk_rule_create(int radial_count, int angular_count, double alpha, bk_rule** out) {
  return guarded([&] {
    require(out, "out");
    *out = new bk_rule{QuadRule::build(radial_count, angular_count, Weight(alpha))};
  });
}

bk_status bk_rule_parse(const char* text, double alpha, bk_rule** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    const Resolution r = parse_resolution(text);
    *out = new bk_rule{QuadRule::build(r.radial, r.angular, Weight(alpha))};
  });
}

void bk_rule_destroy(bk_rule* rule) { delete rule; }
int bk_rule_radial_count(const bk_rule* rule) { return rule ? rule->rule.radial_count() : 0; }
int bk_rule_angular_count(const bk_rule* rule) { return rule ? rule->rule.angular_count() : 0; }
double bk_rule_alpha(const bk_rule* rule) { return rule ? rule->rule.alpha() : 0.0; }

bk_status bk_integrate(const bk_function* f, const bk_rule* rule, bk_complex* out) {
  return guarded([&] {
    require(f, "f");
    require(rule, "rule");
    require(out, "out");
    *out = from_cplx(integrate(f->fn, rule->rule));
  });
}

int bk_required_angular_count(double abs_z) {
  int n = 0;
  guarded([&] { n = required_angular_count(abs_z); });
  return n;
}

bk_status bk_function_parse(const char* text, bk_function** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    FunctionSpec spec = FunctionSpec::parse(text);
    Samplable fn = spec.to_samplable();
    *out = new bk_function{std::move(spec), std::move(fn)};
  });
}

void bk_function_destroy(bk_function* f) { delete f; }

bk_status bk_function_canonical(const bk_function* f, char* buf, size_t cap, size_t* needed) {
  return guarded([&] {
    require(f, "f");
    copy_out(f->spec.to_string(), buf, cap, needed);
  });
}

bk_status bk_function_eval(const bk_function* f, bk_complex z, bk_complex* out) {
  return guarded([&] {
    require(f, "f");
    require(out, "out");
    *out = from_cplx(f->fn(to_cplx(z)));
  });
}

int bk_function_is_analytic(const bk_function* f) {
  if (!f) return 0;
  const auto& k = f->spec.kind();
  return std::holds_alternative<spec::Poly>(k) || std::holds_alternative<spec::NormKernel>(k) ||
         std::holds_alternative<spec::Const>(k);
}

bk_status bk_function_constant(const bk_function* f, bk_complex* out) {
  return guarded([&] {
    require(f, "f");
    require(out, "out");
    const auto* c = std::get_if<spec::Const>(&f->spec.kind());
    if (!c) throw Error(ErrorCode::InvalidArgument, "descriptor is not a constant");
    *out = from_cplx(c->c);
  });
}

bk_status bk_complex_parse(const char* text, bk_complex* out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = from_cplx(parse_complex(text));
  });
}

bk_status bk_complex_format(bk_complex z, char* buf, size_t cap, size_t* needed) {
  return guarded([&] { copy_out(format_complex(to_cplx(z)), buf, cap, needed); });
}

bk_status bk_kernel_disc(bk_complex z, bk_complex zeta, double alpha, bk_complex* out) {
  return guarded([&] {
    require(out, "out");
    *out = from_cplx(k_disc(DiscPoint(to_cplx(z)), DiscPoint(to_cplx(zeta)), Weight(alpha)));
  });
}

bk_status bk_kernel_series(bk_complex z, bk_complex zeta, size_t terms, bk_complex* out) {
  return guarded([&] {
    require(out, "out");
    *out = from_cplx(k_series(DiscPoint(to_cplx(z)), DiscPoint(to_cplx(zeta)), terms));
  });
}

bk_status bk_mobius(bk_complex a, bk_complex w, bk_complex* value, bk_complex* deriv) {
  return guarded([&] {
    const MobiusValue m = mobius(DiscPoint(to_cplx(a)), DiscPoint(to_cplx(w)));
    if (value) *value = from_cplx(m.value);
    if (deriv) *deriv = from_cplx(m.deriv);
  });
}

bk_status bk_riemann_deriv(bk_domain domain, bk_complex base, bk_complex z, bk_complex* out) {
  return guarded([&] {
    require(out, "out");
    KernelFn k;
    switch (domain) {
      case BK_DOMAIN_DISC:
        k = disc_kernel();
        break;
      case BK_DOMAIN_SLIT_PLANE:
        k = slit_plane_kernel();
        break;
      default:
        throw Error(ErrorCode::InvalidArgument, "unknown domain");
    }
    *out = from_cplx(riemann_deriv(k, to_cplx(base), to_cplx(z)));
  });
}

bk_status bk_project(const bk_function* f, double alpha, bk_complex z, const bk_rule* rule, bk_complex* out) {
  return guarded([&] {
    require(f, "f");
    require(rule, "rule");
    require(out, "out");
    *out = from_cplx(project(f->fn, Weight(alpha), DiscPoint(to_cplx(z)), rule->rule));
  });
}

bk_status bk_adjoint(const bk_function* g, double alpha, bk_complex z, const bk_rule* rule, bk_complex* out) {
  return guarded([&] {
    require(g, "g");
    require(rule, "rule");
    require(out, "out");
    *out = from_cplx(adjoint(g->fn, Weight(alpha), DiscPoint(to_cplx(z)), rule->rule));
  });
}

bk_status bk_blowup(double a, const bk_rule* rule, double* observed, double* expected) {
  return guarded([&] {
    require(rule, "rule");
    const BlowupPair bp = blowup_witness(a, rule->rule);
    if (observed) *observed = bp.observed;
    if (expected) *expected = bp.expected;
  });
}

bk_status bk_adjoint_divergence_witness(double alpha, double q, int* finite, double* value) {
  return guarded([&] {
    require(finite, "finite");
    const auto w = adjoint_divergence_witness(Weight(alpha), Exponent(q));
    *finite = w.has_value();
    if (value) *value = w.value_or(0.0);
  });
}

bk_status bk_integral_mean(const bk_function* f, double r, double p, int angular_count, double* out) {
  return guarded([&] {
    require(f, "f");
    require(out, "out");
    *out = integral_mean(f->fn, r, Exponent(p), angular_count);
  });
}

bk_status bk_forelli_rudin(bk_complex z, double s, double t, int radial_count, int angular_count, double* integral,
                           double* ratio) {
  return guarded([&] {
    const DiscPoint zp(to_cplx(z));
    const QuadRule rule =
        QuadRule::build(radial_count, std::max(angular_count, required_angular_count(zp.abs())), Weight(t - 2.0));
    const ForelliRudin fr = forelli_rudin(zp, s, t, rule);
    if (integral) *integral = fr.integral;
    if (ratio) *ratio = fr.ratio;
  });
}

bk_status bk_schur(double alpha, double p, int radial_count, int angular_count, bk_schur_result* out,
                   bk_record** record) {
  return guarded([&] {
    const Weight w(alpha);
    const Exponent pe(p);
    const auto grid = polar_grid_v1();
    SchurCertificate cert =
        schur_report(projection_majorant(w), projection_schur_params(w, pe), radial_count, angular_count, grid);
    if (out) {
      out->diverged = !cert.bound.has_value();
      out->c_a = cert.c_a.value_or(0.0);
      out->c_b = cert.c_b.value_or(0.0);
      out->bound = cert.bound.value_or(0.0);
      out->projection_bound = cert.bound ? (alpha + 1.0) * *cert.bound : 0.0;
    }
    if (record) *record = new bk_record{std::move(cert.report)};
  });
}

bk_status bk_record_create(const char* name, bk_record** out) {
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    auto* rec = new bk_record{};
    rec->report.name = name;
    rec->report.expected = std::monostate{};
    *out = rec;
  });
}

void bk_record_destroy(bk_record* rec) { delete rec; }


bk_status bk_record_param_double(bk_record* rec, const char* key, double v) { return add_param(rec, key, v); }
bk_status bk_record_param_int(bk_record* rec, const char* key, int64_t v) {
  return add_param(rec, key, static_cast<std::int64_t>(v));
}
bk_status bk_record_param_complex(bk_record* rec, const char* key, bk_complex v) {
  return add_param(rec, key, to_cplx(v));
}
bk_status bk_record_param_string(bk_record* rec, const char* key, const char* v) {
  if (!v) return add_param(rec, key, std::string());
  return add_param(rec, key, std::string(v));
}
bk_status bk_record_param_bool(bk_record* rec, const char* key, int v) { return add_param(rec, key, v != 0); }

bk_status bk_record_observed_double(bk_record* rec, double v) {
  return edit(rec, [&](CheckReport& r) { r.observed = v; });
}
bk_status bk_record_observed_complex(bk_record* rec, bk_complex v) {
  return edit(rec, [&](CheckReport& r) { r.observed = to_cplx(v); });
}
bk_status bk_record_observed_divergent(bk_record* rec) {
  return edit(rec, [&](CheckReport& r) { r.observed = Divergent{}; });
}
bk_status bk_record_expected_double(bk_record* rec, double v) {
  return edit(rec, [&](CheckReport& r) { r.expected = v; });
}
bk_status bk_record_expected_complex(bk_record* rec, bk_complex v) {
  return edit(rec, [&](CheckReport& r) { r.expected = to_cplx(v); });
}
bk_status bk_record_expected_bound(bk_record* rec, double v) {
  return edit(rec, [&](CheckReport& r) { r.expected = BoundValue{v}; });
}
bk_status bk_record_tolerance(bk_record* rec, double tol) {
  return edit(rec, [&](CheckReport& r) {
    if (!(tol >= 0.0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be >= 0");
    r.tolerance = tol;
  });
}
bk_status bk_record_resolution(bk_record* rec, const char* resolution) {
  return edit(rec, [&](CheckReport& r) { r.resolution = resolution ? resolution : ""; });
}

int bk_record_pass(const bk_record* rec) {
  return rec && evaluate_pass(rec->report.observed, rec->report.expected, rec->report.tolerance);
}

bk_status bk_record_format(const bk_record* rec, bk_format format, char* buf, size_t cap, size_t* needed) {
  return guarded([&] {
    require(rec, "rec");
    CheckReport r = rec->report;
    finish(r);
    copy_out(format_report(r, format == BK_FORMAT_CSV ? OutputFormat::Csv : OutputFormat::Json), buf, cap, needed);
  });
}

const char* bk_csv_header(void) {
  static const std::string header = csv_header();
  return header.c_str();
}

size_t bk_check_count(void) { return available_checks().size(); }

const char* bk_check_name(size_t index) {
  const auto& names = available_checks();
  return index < names.size() ? names[index].c_str() : nullptr;
}

bk_status bk_suite_run(const bk_suite_config* config, bk_line_fn sink, void* user, int* exit_status) {
  return guarded([&] {
    require(config, "config");
    if (!sink) throw Error(ErrorCode::InvalidArgument, "sink is null");
    SuiteConfig cfg;
    if (config->check_count == 0) {
      cfg.checks = available_checks();
    } else {
      require(config->checks, "checks");
      for (std::size_t i = 0; i < config->check_count; ++i) {
        require(config->checks[i], "check name");
        cfg.checks.emplace_back(config->checks[i]);
      }
    }
    if (config->radial_count) cfg.resolution.radial = config->radial_count;
    if (config->angular_count) cfg.resolution.angular = config->angular_count;
    if (cfg.resolution.radial < 1 || cfg.resolution.angular < 1)
      throw Error(ErrorCode::InvalidArgument, "rule sizes must be positive");
    cfg.seed = config->seed;
    cfg.threads = config->threads;
    cfg.format = config->format == BK_FORMAT_CSV ? OutputFormat::Csv : OutputFormat::Json;
    const int status = run_suite(cfg, [&](const CheckReport& r) { sink(format_report(r, cfg.format).c_str(), user); });
    if (exit_status) *exit_status = status;
  });
}

}  // extern "C"

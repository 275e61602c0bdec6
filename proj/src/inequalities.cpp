#include "fracineq/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace fracineq {

InequalityReport make_inequality_report(double lhs, double rhs, double err_estimate,
                                        bool bounds_exact, const CheckConfig& cfg) {
  InequalityReport r;
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = rhs - lhs;
  r.tol_slack = cfg.slack_rel_tol * std::max(1.0, rhs);
  r.pass = std::isfinite(r.slack) && r.slack >= -r.tol_slack;
  if (rhs > 0.0) {
    r.tightness = lhs / rhs;
  } else {
    r.tightness = lhs <= r.tol_slack ? 0.0 : std::numeric_limits<double>::infinity();
  }
  r.err_estimate = err_estimate;
  r.bounds_exact = bounds_exact;
  return r;
}

DerivativeBounds derivative_bounds(const FunctionSpec& f, const Interval& iv) {
  if (auto exact = f.exact_bounds(iv)) return *exact;

  constexpr int kGrid = 10001;
  constexpr double kWiden = 0.01;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < kGrid; ++i) {
    const double t = iv.a() + iv.length() * i / (kGrid - 1);
    const double d = f.f_prime(t);
    lo = std::min(lo, d);
    hi = std::max(hi, d);
  }
  lo -= kWiden * std::abs(lo);
  hi += kWiden * std::abs(hi);
  return DerivativeBounds{std::max(std::abs(lo), std::abs(hi)), lo, hi, false};
}

namespace {

void check_x(const Interval& iv, double x) {
  if (!std::isfinite(x) || !iv.contains(x)) throw DomainError("x outside [a, b]");
}

// ½f(x) - [(x-b)f(b) - (x-a)f(a)]/(2(b-a)) - mean, shared by the Cheng and
// alpha = 1 checks.
struct HalfPointDeviation {
  double value;
  double err;
  std::vector<Term> terms;
};

HalfPointDeviation half_point_deviation(const FunctionSpec& f, const Interval& iv, double x,
                                        const QuadratureConfig& cfg) {
  const double a = iv.a();
  const double b = iv.b();
  const TermValue mean = mean_value(f, iv, cfg);
  const double boundary = ((x - b) * f.f(b) - (x - a) * f.f(a)) / (2.0 * iv.length());
  const double half_fx = 0.5 * f.f(x);
  return {half_fx - boundary - mean.value,
          mean.err,
          {{"f(x)/2", half_fx},
           {"-[(x-b)f(b)-(x-a)f(a)]/(2(b-a))", -boundary},
           {"-mean", -mean.value}}};
}

}  // namespace

InequalityReport classic_ostrowski_check(const FunctionSpec& f, const Interval& iv, double x,
                                         const CheckConfig& cfg) {
  check_x(iv, x);
  const DerivativeBounds db = derivative_bounds(f, iv);
  const TermValue mean = mean_value(f, iv, cfg.quad);
  const double fx = f.f(x);
  const double len = iv.length();
  const double off = x - 0.5 * (iv.a() + iv.b());
  const double rhs = (0.25 + off * off / (len * len)) * len * db.M;
  InequalityReport r =
      make_inequality_report(std::abs(fx - mean.value), rhs, mean.err, db.exact, cfg);
  r.lhs_terms = {{"f(x)", fx}, {"-mean", -mean.value}};
  return r;
}

InequalityReport cheng_check(const FunctionSpec& f, const Interval& iv, double x,
                             const CheckConfig& cfg) {
  check_x(iv, x);
  const DerivativeBounds db = derivative_bounds(f, iv);
  HalfPointDeviation dev = half_point_deviation(f, iv, x, cfg.quad);
  const double u = x - iv.a();
  const double v = iv.b() - x;
  const double rhs = (db.Gamma_hi - db.gamma_lo) * (u * u + v * v) / (8.0 * iv.length());
  InequalityReport r = make_inequality_report(std::abs(dev.value), rhs, dev.err, db.exact, cfg);
  r.lhs_terms = std::move(dev.terms);
  return r;
}

InequalityReport dragomir_check(const FunctionSpec& f, const Interval& iv, double x,
                                const CheckConfig& cfg) {
  check_x(iv, x);
  const DerivativeBounds db = derivative_bounds(f, iv);
  const TermValue mean = mean_value(f, iv, cfg.quad);
  const double len = iv.length();
  const double fx = f.f(x);
  const double secant =
      (f.f(iv.b()) - f.f(iv.a())) / len * (x - 0.5 * (iv.a() + iv.b()));
  const double rhs = 0.25 * len * (db.Gamma_hi - db.gamma_lo);
  InequalityReport r =
      make_inequality_report(std::abs(fx - secant - mean.value), rhs, mean.err, db.exact, cfg);
  r.lhs_terms = {{"f(x)", fx}, {"-secant term", -secant}, {"-mean", -mean.value}};
  return r;
}

double frac_paper_bracket(const Interval& iv, double x, double alpha) {
  const double a = iv.a();
  const double b = iv.b();
  return (std::pow(b - a, alpha) * (x - a) + std::pow(b - x, alpha) * (a + b - 2.0 * x)) /
         (2.0 * alpha);
}

TermValue frac_sharp_bracket(const Interval& iv, double x, double alpha,
                             const QuadratureConfig& cfg) {
  const double a = iv.a();
  const double b = iv.b();
  const double left_mid = 0.5 * (a + x);
  const double right_mid = 0.5 * (b + x);
  auto g = [&](double t) { return t < x ? std::abs(t - left_mid) : std::abs(t - right_mid); };
  std::vector<double> bp;
  for (double p : {left_mid, x, right_mid}) {
    if (p > a && p < b) bp.push_back(p);
  }
  const QuadResult q = integrate_weighted(g, a, b, alpha, bp, cfg);
  return TermValue{require_converged(q, "sharp bracket"), q.err_estimate};
}

InequalityReport theorem_frac_check(const FunctionSpec& f, const FracPoint& pt,
                                    const CheckConfig& cfg) {
  const Interval& iv = pt.interval();
  const double x = pt.x();
  const double alpha = pt.alpha();
  const DerivativeBounds db = derivative_bounds(f, iv);

  // The absolute expression equals ½ (f(x) - the four non-kernel terms of the
  // fractional Montgomery identity).
  const FracMontgomeryTerms t = frac_montgomery_terms(f, pt, cfg.quad);
  const double inner =
      0.5 * (t.fx - t.mean_term.value - t.p2f_term.value - t.jm1_term.value - t.fa_term.value);
  const double err =
      0.5 * (t.mean_term.err + t.p2f_term.err + t.jm1_term.err + t.fa_term.err);

  const double w = std::pow(iv.b() - x, 1.0 - alpha) / iv.length();
  const double paper = frac_paper_bracket(iv, x, alpha);
  const double rhs = db.M * w * paper;

  InequalityReport r = make_inequality_report(std::abs(inner), rhs, err, db.exact, cfg);
  r.lhs_terms = {{"f(x)/2", 0.5 * t.fx},
                 {"-(a+1)G(a)(b-x)^(1-a)/(2(b-a)) J^a f(b)", -0.5 * t.mean_term.value},
                 {"+1/2 J^(a-1)(P2 f)(b)", -0.5 * t.p2f_term.value},
                 {"+(b-x)^(2-a)G(a)/(2(b-a)) J^(a-1) f(b)", -0.5 * t.jm1_term.value},
                 {"+(b-x)^(1-a)(x-a)/(2(b-a)^(2-a)) f(a)", -0.5 * t.fa_term.value}};

  const TermValue sharp = frac_sharp_bracket(iv, x, alpha, cfg.quad);
  r.paper_bracket = paper;
  r.sharp_bracket = sharp.value;
  r.bracket_ratio = sharp.value > 0.0 ? paper / sharp.value
                                      : std::numeric_limits<double>::quiet_NaN();
  return r;
}

InequalityReport remark2_check(const FunctionSpec& f, const Interval& iv, double x,
                               const CheckConfig& cfg) {
  check_x(iv, x);
  const DerivativeBounds db = derivative_bounds(f, iv);
  HalfPointDeviation dev = half_point_deviation(f, iv, x, cfg.quad);
  const double u = x - iv.a();
  const double v = iv.b() - x;
  const double rhs = db.M * (u * u + v * v) / (2.0 * iv.length());
  InequalityReport r = make_inequality_report(std::abs(dev.value), rhs, dev.err, db.exact, cfg);
  r.lhs_terms = std::move(dev.terms);
  return r;
}

}  // namespace fracineq

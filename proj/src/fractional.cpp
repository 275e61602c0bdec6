#include "fracineq/fractional.hpp"

#include <cmath>
#include <string>

namespace fracineq {

Interval::Interval(double a, double b) : a_(a), b_(b) {
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError("Interval: endpoints must be finite");
  }
  if (!(a < b)) throw DomainError("Interval: requires a < b");
}

void check_endpoint_guard(const Interval& iv, double x, double alpha, double endpoint_guard) {
  if (alpha > 1.0 && x > iv.b() - endpoint_guard * iv.length()) {
    throw DomainError("endpoint guard: x = " + std::to_string(x) +
                      " is within the relative zone " + std::to_string(endpoint_guard) +
                      " of b for alpha > 1");
  }
}

FracPoint::FracPoint(Interval iv, double x, double alpha, double endpoint_guard)
    : iv_(iv), x_(x), alpha_(alpha) {
  if (!std::isfinite(alpha) || alpha < 1.0) {
    throw DomainError("FracPoint: alpha must be >= 1");
  }
  if (!iv.contains(x)) throw DomainError("FracPoint: x outside [a, b]");
  check_endpoint_guard(iv, x, alpha, endpoint_guard);
}

QuadResult rl_integral_result(const Integrand& f, double a, double alpha, double x,
                              const QuadratureConfig& cfg,
                              std::span<const double> breakpoints) {
  if (!std::isfinite(alpha) || alpha < 0.0) {
    throw DomainError("rl_integral: alpha must be >= 0");
  }
  if (!std::isfinite(a) || !std::isfinite(x) || x < a) {
    throw DomainError("rl_integral: requires a <= x");
  }
  if (alpha == 0.0) return QuadResult{f(x), 0.0, 0, true};
  if (x == a) return QuadResult{};

  QuadResult r = integrate_weighted(f, a, x, alpha, breakpoints, cfg);
  const double g = gamma_function(alpha);
  r.value /= g;
  r.err_estimate /= g;
  return r;
}

double rl_integral(const Integrand& f, double a, double alpha, double x,
                   const QuadratureConfig& cfg, std::span<const double> breakpoints) {
  return require_converged(rl_integral_result(f, a, alpha, x, cfg, breakpoints),
                           "rl_integral");
}

double rl_monomial_oracle(double a, double alpha, double beta, double x) {
  if (!(alpha > 0.0)) throw DomainError("rl_monomial_oracle: alpha must be > 0");
  if (!(beta >= 0.0)) throw DomainError("rl_monomial_oracle: beta must be >= 0");
  if (!(x >= a)) throw DomainError("rl_monomial_oracle: requires x >= a");
  return gamma_function(beta + 1.0) / gamma_function(alpha + beta + 1.0) * std::pow(x - a, alpha + beta);
}

namespace {

void check_point(const Interval& iv, double x, double t, const char* who) {
  if (!iv.contains(x)) throw DomainError(std::string(who) + ": x outside [a, b]");
  if (!iv.contains(t)) throw DomainError(std::string(who) + ": t outside [a, b]");
}

void check_alpha(double alpha, const char* who) {
  if (!std::isfinite(alpha) || alpha < 1.0) {
    throw DomainError(std::string(who) + ": alpha must be >= 1");
  }
}

}  // namespace

double fractional_prefactor(const Interval& iv, double x, double alpha) {
  return std::pow(iv.b() - x, 1.0 - alpha) * gamma_function(alpha) / iv.length();
}

double kernel_p1(const Interval& iv, double x, double t) {
  check_point(iv, x, t, "kernel_p1");
  return t < x ? (t - iv.a()) / iv.length() : (t - iv.b()) / iv.length();
}

double kernel_p2(const Interval& iv, double x, double t, double alpha, double endpoint_guard) {
  check_alpha(alpha, "kernel_p2");
  check_point(iv, x, t, "kernel_p2");
  check_endpoint_guard(iv, x, alpha, endpoint_guard);
  if (alpha == 1.0) return kernel_p1(iv, x, t);
  return kernel_p1(iv, x, t) * std::pow(iv.b() - x, 1.0 - alpha) * gamma_function(alpha);
}

double kernel_k1(const Interval& iv, double x, double t, double alpha, double endpoint_guard) {
  check_alpha(alpha, "kernel_k1");
  check_point(iv, x, t, "kernel_k1");
  check_endpoint_guard(iv, x, alpha, endpoint_guard);
  const double shift = t < x ? 0.5 * (iv.a() + x) : 0.5 * (iv.b() + x);
  return (t - shift) * fractional_prefactor(iv, x, alpha);
}

double kernel_k(const Interval& iv, double x, double t) {
  check_point(iv, x, t, "kernel_k");
  return t < x ? t - 0.5 * (iv.a() + x) : t - 0.5 * (iv.b() + x);
}

}  // namespace fracineq

#pragma once

#include <span>

#include "fracineq/numerics.hpp"

namespace fracineq {

/// Closed interval [a, b] with a < b, both finite.
class Interval {
 public:
  Interval(double a, double b);

  double a() const { return a_; }
  double b() const { return b_; }
  double length() const { return b_ - a_; }
  bool contains(double t) const { return t >= a_ && t <= b_; }

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  double a_;
  double b_;
};

/// Evaluation point of the fractional identities: x in [a, b], order alpha >= 1.
///
/// For alpha > 1 the factor (b - x)^(1 - alpha) diverges as x -> b, so x must
/// also satisfy x <= b - endpoint_guard * (b - a).
class FracPoint {
 public:
  FracPoint(Interval iv, double x, double alpha,
            double endpoint_guard = QuadratureConfig{}.endpoint_guard);

  const Interval& interval() const { return iv_; }
  double x() const { return x_; }
  double alpha() const { return alpha_; }

 private:
  Interval iv_;
  double x_;
  double alpha_;
};

/// Throws DomainError if x is too close to b for order alpha.
void check_endpoint_guard(const Interval& iv, double x, double alpha, double endpoint_guard);

/// Riemann-Liouville integral J_a^alpha f(x) together with its quadrature
/// error estimate. alpha == 0 is the identity operator; x == a gives 0.
/// Breakpoints are forwarded to the quadrature (kernel jumps of f).
QuadResult rl_integral_result(const Integrand& f, double a, double alpha, double x,
                              const QuadratureConfig& cfg,
                              std::span<const double> breakpoints = {});

/// J_a^alpha f(x). Throws ConvergenceError if the quadrature fails.
double rl_integral(const Integrand& f, double a, double alpha, double x,
                   const QuadratureConfig& cfg, std::span<const double> breakpoints = {});

/// Exact J_a^alpha of t -> (t - a)^beta:  Γ(β+1)/Γ(α+β+1) · (x - a)^(α+β).
double rl_monomial_oracle(double a, double alpha, double beta, double x);

// Peano kernels. Branches are [a, x) and [x, b].

/// (t-a)/(b-a) on [a,x), (t-b)/(b-a) on [x,b].
double kernel_p1(const Interval& iv, double x, double t);

/// kernel_p1 scaled by (b-x)^(1-alpha) Γ(alpha).
double kernel_p2(const Interval& iv, double x, double t, double alpha,
                 double endpoint_guard = QuadratureConfig{}.endpoint_guard);

/// (t - (a+x)/2) on [a,x), (t - (b+x)/2) on [x,b], times (b-x)^(1-alpha) Γ(alpha)/(b-a).
double kernel_k1(const Interval& iv, double x, double t, double alpha,
                 double endpoint_guard = QuadratureConfig{}.endpoint_guard);

/// The alpha = 1 kernel without the 1/(b-a) factor:
/// (t - (a+x)/2) on [a,x), (t - (b+x)/2) on [x,b].
double kernel_k(const Interval& iv, double x, double t);

/// (b-x)^(1-alpha) Γ(alpha) / (b-a), the common prefactor of P2 and K1.
double fractional_prefactor(const Interval& iv, double x, double alpha);

}  // namespace fracineq

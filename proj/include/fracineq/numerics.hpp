#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>

namespace fracineq {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Adaptive quadrature ran out of subdivisions before meeting its tolerance.
/// Carries the best estimate so callers can still inspect it.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double best, double err)
      : std::runtime_error(what), best_estimate(best), err_estimate(err) {}
  double best_estimate;
  double err_estimate;
};

struct QuadratureConfig {
  double abs_tol = 1e-10;
  double rel_tol = 1e-9;
  int max_subdivisions = 2000;
  // Relative exclusion zone near b for fractional evaluation points.
  double endpoint_guard = 1e-6;

  /// Throws DomainError when a field is out of range.
  void validate() const;
};

struct QuadResult {
  double value = 0.0;
  double err_estimate = 0.0;
  std::size_t subdivisions_used = 0;
  bool converged = true;
};

using Integrand = std::function<double(double)>;

/// Gamma function for real z > 0 (Lanczos N=13, g≈6.0247 rational form).
double gamma_function(double z);

/// Adaptive 7/15-point Gauss-Kronrod integration of g over [lo, hi].
///
/// The interval is split at every breakpoint before refinement. Refinement
/// always bisects the interval with the largest error estimate (lowest index
/// on ties), so results are reproducible bit for bit for a fixed config.
/// On exhaustion the best estimate is returned with converged == false.
QuadResult integrate(const Integrand& g, double lo, double hi,
                     std::span<const double> breakpoints,
                     const QuadratureConfig& cfg);

/// Computes  ∫_lo^b (b - t)^(mu-1) g(t) dt.
///
/// For mu != 1 the substitution s = (b - t)^mu removes the algebraic factor:
/// the integral becomes (1/mu) ∫_0^{(b-lo)^mu} g(b - s^(1/mu)) ds. Breakpoints
/// in t are mapped through the same substitution.
QuadResult integrate_weighted(const Integrand& g, double lo, double b, double mu,
                              std::span<const double> breakpoints,
                              const QuadratureConfig& cfg);

/// Returns r.value, or throws ConvergenceError naming `what`.
double require_converged(const QuadResult& r, const char* what);

}  // namespace fracineq

#pragma once

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fracineq/fractional.hpp"

namespace fracineq {

/// Bounds on f' over an interval: |f'| <= M and gamma_lo <= f' <= Gamma_hi.
struct DerivativeBounds {
  double M = 0.0;
  double gamma_lo = 0.0;
  double Gamma_hi = 0.0;
  bool exact = false;
};

/// Closed-form J_a^alpha f(x) evaluator, arguments (a, alpha, x).
using ClosedRl = std::function<double(double, double, double)>;

/// A test function with its derivative and oracle data.
struct FunctionSpec {
  std::string id;
  std::function<double(double)> f;
  std::function<double(double)> f_prime;
  // Exact derivative bounds, one entry per supported interval.
  std::vector<std::pair<Interval, DerivativeBounds>> bounds_for;
  std::optional<ClosedRl> closed_rl;
  std::string description;

  /// Declared exact bounds for iv, if iv is a supported interval.
  std::optional<DerivativeBounds> exact_bounds(const Interval& iv) const;
};

class UnknownFunctionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class RegistrationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Registration-time self-check of a FunctionSpec: f' against a central
/// difference of f and the declared bounds against f', at 101 points on every
/// supported interval. Throws RegistrationError naming the worst sample point.
void self_check(const FunctionSpec& spec);

/// Registry of FunctionSpecs keyed by id. Populate at startup, then share
/// read-only.
class Registry {
 public:
  /// Registry preloaded with the shipped corpus.
  static Registry with_builtins();

  void register_spec(FunctionSpec spec);
  const FunctionSpec& lookup(const std::string& id) const;
  bool contains(const std::string& id) const { return specs_.count(id) != 0; }
  /// All ids, sorted.
  std::vector<std::string> ids() const;

 private:
  std::map<std::string, FunctionSpec> specs_;
};

/// Shared immutable registry of the shipped corpus.
const Registry& builtin_registry();

/// The seven functions of the default verification grid.
std::vector<std::string> default_function_ids();

/// FunctionSpec for the polynomial sum_k coeffs[k] t^k (degree <= 4), with
/// exact derivative bounds on the given intervals and a closed-form J_a^alpha.
FunctionSpec make_polynomial(std::string id, std::vector<double> coeffs,
                             const std::vector<Interval>& supported,
                             std::string description = {});

/// Exact min/max of the derivative of a polynomial (degree <= 4) on iv.
DerivativeBounds polynomial_derivative_bounds(const std::vector<double>& coeffs,
                                              const Interval& iv);

}  // namespace fracineq

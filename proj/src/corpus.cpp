#include "fracineq/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace fracineq {

std::optional<DerivativeBounds> FunctionSpec::exact_bounds(const Interval& iv) const {
  for (const auto& [supported, bounds] : bounds_for) {
    if (supported == iv) return bounds;
  }
  return std::nullopt;
}

void self_check(const FunctionSpec& spec) {
  if (spec.id.empty()) throw RegistrationError("FunctionSpec: empty id");
  if (!spec.f || !spec.f_prime) {
    throw RegistrationError("FunctionSpec '" + spec.id + "': missing evaluator");
  }
  constexpr int kSamples = 101;
  constexpr double kDerivTol = 1e-6;
  constexpr double kBoundSlack = 1e-12;

  for (const auto& [iv, bounds] : spec.bounds_for) {
    if (bounds.gamma_lo > bounds.Gamma_hi) {
      throw RegistrationError("FunctionSpec '" + spec.id + "': gamma_lo > Gamma_hi");
    }
    const double h = 1e-5 * iv.length();
    double worst_err = 0.0;
    double worst_t = iv.a();
    for (int i = 0; i < kSamples; ++i) {
      const double t = iv.a() + iv.length() * i / (kSamples - 1);
      const double d = spec.f_prime(t);
      const double fd = (spec.f(t + h) - spec.f(t - h)) / (2.0 * h);
      const double err = std::abs(fd - d) / std::max(1.0, std::abs(d));
      if (err > worst_err) {
        worst_err = err;
        worst_t = t;
      }
      const double slack = kBoundSlack * std::max(1.0, std::abs(d));
      if (d < bounds.gamma_lo - slack || d > bounds.Gamma_hi + slack ||
          std::abs(d) > bounds.M + slack) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "FunctionSpec '" << spec.id << "': f'(" << t << ") = " << d
            << " violates declared bounds on [" << iv.a() << ", " << iv.b() << "]";
        throw RegistrationError(msg.str());
      }
    }
    if (worst_err > kDerivTol) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "FunctionSpec '" << spec.id << "': f' disagrees with a central difference of f;"
          << " worst sample t = " << worst_t << " on [" << iv.a() << ", " << iv.b()
          << "], relative error " << worst_err;
      throw RegistrationError(msg.str());
    }
  }
}

void Registry::register_spec(FunctionSpec spec) {
  if (specs_.count(spec.id) != 0) {
    throw RegistrationError("duplicate function id '" + spec.id + "'");
  }
  self_check(spec);
  std::string id = spec.id;
  specs_.emplace(std::move(id), std::move(spec));
}

const FunctionSpec& Registry::lookup(const std::string& id) const {
  auto it = specs_.find(id);
  if (it == specs_.end()) {
    std::string msg = "unknown function id '" + id + "'; available:";
    for (const auto& [k, v] : specs_) msg += " " + k;
    throw UnknownFunctionError(msg);
  }
  return it->second;
}

std::vector<std::string> Registry::ids() const {
  std::vector<std::string> out;
  out.reserve(specs_.size());
  for (const auto& [k, v] : specs_) out.push_back(k);
  return out;
}

namespace {

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

double horner(const std::vector<double>& c, double t) {
  double r = 0.0;
  for (std::size_t i = c.size(); i-- > 0;) r = r * t + c[i];
  return r;
}

std::vector<double> derivative(const std::vector<double>& c) {
  std::vector<double> d;
  for (std::size_t k = 1; k < c.size(); ++k) d.push_back(static_cast<double>(k) * c[k]);
  return d;
}

DerivativeBounds from_range(double lo, double hi) {
  return DerivativeBounds{std::max(std::abs(lo), std::abs(hi)), lo, hi, true};
}

std::vector<Interval> standard_intervals() {
  return {Interval(0.0, 1.0), Interval(1.0, 3.0), Interval(0.0, std::numbers::pi),
          Interval(-1.0, 1.0)};
}

FunctionSpec make_exp() {
  FunctionSpec s;
  s.id = "exp";
  s.description = "exp(t)";
  s.f = [](double t) { return std::exp(t); };
  s.f_prime = [](double t) { return std::exp(t); };
  for (const Interval& iv : standard_intervals()) {
    s.bounds_for.emplace_back(iv, from_range(std::exp(iv.a()), std::exp(iv.b())));
  }
  return s;
}

// Range of cos on [a, b]: endpoints plus any interior multiples of pi.
DerivativeBounds cos_range(const Interval& iv) {
  double lo = std::min(std::cos(iv.a()), std::cos(iv.b()));
  double hi = std::max(std::cos(iv.a()), std::cos(iv.b()));
  const double first = std::ceil(iv.a() / std::numbers::pi);
  for (double k = first; k * std::numbers::pi <= iv.b(); k += 1.0) {
    if (std::fmod(std::abs(k), 2.0) == 0.0) {
      hi = 1.0;
    } else {
      lo = -1.0;
    }
  }
  return from_range(lo, hi);
}

FunctionSpec make_sin() {
  FunctionSpec s;
  s.id = "sin";
  s.description = "sin(t)";
  s.f = [](double t) { return std::sin(t); };
  s.f_prime = [](double t) { return std::cos(t); };
  for (const Interval& iv : standard_intervals()) s.bounds_for.emplace_back(iv, cos_range(iv));
  return s;
}

}  // namespace

DerivativeBounds polynomial_derivative_bounds(const std::vector<double>& coeffs,
                                              const Interval& iv) {
  if (coeffs.size() > 5) {
    throw DomainError("polynomial_derivative_bounds: degree must be <= 4");
  }
  const std::vector<double> d1 = derivative(coeffs);
  const std::vector<double> d2 = derivative(d1);

  std::vector<double> candidates = {iv.a(), iv.b()};
  // Critical points of f' are the real roots of f'' (degree <= 2).
  const double c0 = d2.size() > 0 ? d2[0] : 0.0;
  const double c1 = d2.size() > 1 ? d2[1] : 0.0;
  const double c2 = d2.size() > 2 ? d2[2] : 0.0;
  if (c2 != 0.0) {
    const double disc = c1 * c1 - 4.0 * c2 * c0;
    if (disc >= 0.0) {
      const double sq = std::sqrt(disc);
      // Numerically stable pair of roots.
      const double q = -0.5 * (c1 + std::copysign(sq, c1));
      if (q != 0.0) {
        candidates.push_back(q / c2);
        candidates.push_back(c0 / q);
      } else {
        candidates.push_back(0.0);
      }
    }
  } else if (c1 != 0.0) {
    candidates.push_back(-c0 / c1);
  }

  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (double t : candidates) {
    if (!iv.contains(t)) continue;
    const double v = horner(d1, t);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return from_range(lo, hi);
}

FunctionSpec make_polynomial(std::string id, std::vector<double> coeffs,
                             const std::vector<Interval>& supported, std::string description) {
  if (coeffs.empty()) coeffs.push_back(0.0);
  FunctionSpec s;
  s.id = std::move(id);
  s.description = std::move(description);
  s.f = [coeffs](double t) { return horner(coeffs, t); };
  s.f_prime = [d = derivative(coeffs)](double t) { return horner(d, t); };
  for (const Interval& iv : supported) {
    s.bounds_for.emplace_back(iv, polynomial_derivative_bounds(coeffs, iv));
  }
  // t^k = sum_j C(k,j) a^(k-j) (t-a)^j, then apply the monomial formula termwise.
  s.closed_rl = [coeffs](double a, double alpha, double x) {
    if (alpha == 0.0) return horner(coeffs, x);
    double total = 0.0;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      if (coeffs[k] == 0.0) continue;
      const int deg = static_cast<int>(k);
      for (int j = 0; j <= deg; ++j) {
        total += coeffs[k] * binomial(deg, j) * std::pow(a, deg - j) *
                 rl_monomial_oracle(a, alpha, j, x);
      }
    }
    return total;
  };
  return s;
}

Registry Registry::with_builtins() {
  Registry r;
  const auto ivs = standard_intervals();
  r.register_spec(make_polynomial("const1", {1.0}, ivs, "1"));
  r.register_spec(make_polynomial("poly1", {0.0, 1.0}, ivs, "t"));
  r.register_spec(make_polynomial("poly2", {0.0, 0.0, 1.0}, ivs, "t^2"));
  r.register_spec(make_polynomial("poly3", {0.0, 0.0, 0.0, 1.0}, ivs, "t^3"));
  r.register_spec(make_polynomial("poly4", {0.0, 0.0, 0.0, 0.0, 1.0}, ivs, "t^4"));
  r.register_spec(make_exp());
  r.register_spec(make_sin());
  r.register_spec(make_polynomial("affine1", {2.0, -3.0}, ivs, "2 - 3t"));
  r.register_spec(make_polynomial("mix3", {1.0, -2.0, 3.0, -0.5}, ivs, "1 - 2t + 3t^2 - 0.5t^3"));
  return r;
}

const Registry& builtin_registry() {
  static const Registry registry = Registry::with_builtins();
  return registry;
}

std::vector<std::string> default_function_ids() {
  return {"const1", "poly1", "poly2", "poly3", "poly4", "exp", "sin"};
}

}  // namespace fracineq

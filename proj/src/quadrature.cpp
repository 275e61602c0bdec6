#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "fracineq/numerics.hpp"

namespace fracineq {

void QuadratureConfig::validate() const {
  if (!(abs_tol > 0.0)) throw DomainError("QuadratureConfig: abs_tol must be > 0");
  if (!(rel_tol > 0.0)) throw DomainError("QuadratureConfig: rel_tol must be > 0");
  if (max_subdivisions < 1) {
    throw DomainError("QuadratureConfig: max_subdivisions must be >= 1");
  }
  if (!(endpoint_guard > 0.0 && endpoint_guard < 0.01)) {
    throw DomainError("QuadratureConfig: endpoint_guard must lie in (0, 0.01)");
  }
}

namespace {

// 15-point Kronrod abscissae; odd indices are the embedded 7-point Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

struct Segment {
  double lo;
  double hi;
  double value;
  double err;
  std::size_t id;
  bool splittable;
};

struct ByError {
  bool operator()(const Segment& x, const Segment& y) const {
    // max-heap on err; the older segment wins ties
    if (x.err != y.err) return x.err < y.err;
    return x.id > y.id;
  }
};

Segment gk15(const Integrand& g, double lo, double hi, std::size_t id) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  constexpr double uflow = std::numeric_limits<double>::min();

  const double centr = 0.5 * (lo + hi);
  const double hlgth = 0.5 * (hi - lo);
  const double dhlgth = std::abs(hlgth);

  std::array<double, 7> fv1{};
  std::array<double, 7> fv2{};

  const double fc = g(centr);
  double resg = fc * kWg[3];
  double resk = fc * kWgk[7];
  double resabs = std::abs(resk);

  for (int j = 0; j < 3; ++j) {
    const int jtw = 2 * j + 1;
    const double absc = hlgth * kXgk[jtw];
    const double f1 = g(centr - absc);
    const double f2 = g(centr + absc);
    fv1[jtw] = f1;
    fv2[jtw] = f2;
    resg += kWg[j] * (f1 + f2);
    resk += kWgk[jtw] * (f1 + f2);
    resabs += kWgk[jtw] * (std::abs(f1) + std::abs(f2));
  }
  for (int j = 0; j < 4; ++j) {
    const int jtwm1 = 2 * j;
    const double absc = hlgth * kXgk[jtwm1];
    const double f1 = g(centr - absc);
    const double f2 = g(centr + absc);
    fv1[jtwm1] = f1;
    fv2[jtwm1] = f2;
    resk += kWgk[jtwm1] * (f1 + f2);
    resabs += kWgk[jtwm1] * (std::abs(f1) + std::abs(f2));
  }

  const double reskh = resk * 0.5;
  double resasc = kWgk[7] * std::abs(fc - reskh);
  for (int j = 0; j < 7; ++j) {
    resasc += kWgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));
  }

  const double result = resk * hlgth;
  resabs *= dhlgth;
  resasc *= dhlgth;
  double abserr = std::abs((resk - resg) * hlgth);
  if (resasc != 0.0 && abserr != 0.0) {
    abserr = resasc * std::min(1.0, std::pow(200.0 * abserr / resasc, 1.5));
  }
  if (resabs > uflow / (50.0 * eps)) {
    abserr = std::max(eps * 50.0 * resabs, abserr);
  }

  if (!std::isfinite(result) || !std::isfinite(abserr)) {
    throw DomainError("integrate: integrand is not finite on the interval");
  }

  const double mid = centr;
  const bool splittable = mid > lo && mid < hi;
  return Segment{lo, hi, result, abserr, id, splittable};
}

}  // namespace

QuadResult integrate(const Integrand& g, double lo, double hi,
                     std::span<const double> breakpoints,
                     const QuadratureConfig& cfg) {
  cfg.validate();
  if (!std::isfinite(lo) || !std::isfinite(hi)) {
    throw DomainError("integrate: limits must be finite");
  }
  if (!(lo < hi)) throw DomainError("integrate: requires lo < hi");

  std::vector<double> cuts;
  cuts.reserve(breakpoints.size() + 2);
  cuts.push_back(lo);
  for (double p : breakpoints) {
    if (!(p >= lo && p <= hi)) {
      throw DomainError("integrate: breakpoint outside [lo, hi]");
    }
    if (p > lo && p < hi) cuts.push_back(p);
  }
  cuts.push_back(hi);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::priority_queue<Segment, std::vector<Segment>, ByError> heap;
  std::size_t next_id = 0;
  double total = 0.0;
  double total_err = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    Segment s = gk15(g, cuts[i], cuts[i + 1], next_id++);
    total += s.value;
    total_err += s.err;
    heap.push(s);
  }

  std::vector<Segment> frozen;  // too narrow to bisect further
  std::size_t bisections = 0;
  auto tolerance = [&] { return std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total)); };

  while (total_err > tolerance() && !heap.empty() &&
         bisections < static_cast<std::size_t>(cfg.max_subdivisions)) {
    Segment worst = heap.top();
    heap.pop();
    if (!worst.splittable) {
      frozen.push_back(worst);
      continue;
    }
    const double mid = 0.5 * (worst.lo + worst.hi);
    Segment left = gk15(g, worst.lo, mid, next_id++);
    Segment right = gk15(g, mid, worst.hi, next_id++);
    total += left.value + right.value - worst.value;
    total_err += left.err + right.err - worst.err;
    heap.push(left);
    heap.push(right);
    ++bisections;
  }
  const bool met = total_err <= tolerance();

  // Re-sum left to right; the running totals only drive the stopping test.
  std::vector<Segment> all = std::move(frozen);
  while (!heap.empty()) {
    all.push_back(heap.top());
    heap.pop();
  }
  std::sort(all.begin(), all.end(), [](const Segment& x, const Segment& y) {
    return x.lo < y.lo;
  });
  QuadResult out;
  for (const Segment& s : all) {
    out.value += s.value;
    out.err_estimate += s.err;
  }
  out.subdivisions_used = bisections;
  out.converged = met;
  return out;
}

QuadResult integrate_weighted(const Integrand& g, double lo, double b, double mu,
                              std::span<const double> breakpoints,
                              const QuadratureConfig& cfg) {
  if (!std::isfinite(mu) || !(mu > 0.0)) {
    throw DomainError("integrate_weighted: mu must be finite and > 0");
  }
  if (!(lo < b)) throw DomainError("integrate_weighted: requires lo < b");
  if (mu == 1.0) return integrate(g, lo, b, breakpoints, cfg);

  const double inv_mu = 1.0 / mu;
  const double upper = std::pow(b - lo, mu);
  std::vector<double> mapped;
  mapped.reserve(breakpoints.size());
  for (double p : breakpoints) {
    if (!(p >= lo && p <= b)) {
      throw DomainError("integrate_weighted: breakpoint outside [lo, b]");
    }
    mapped.push_back(std::min(upper, std::pow(b - p, mu)));
  }

  auto h = [&](double s) {
    // Clamp so rounding in s^(1/mu) cannot step outside [lo, b].
    const double t = std::max(lo, b - std::pow(s, inv_mu));
    return g(t);
  };
  // The 1/mu prefactor scales the error too; tighten abs_tol to compensate.
  QuadratureConfig inner = cfg;
  inner.abs_tol = cfg.abs_tol * mu;
  QuadResult r = integrate(h, 0.0, upper, mapped, inner);
  r.value *= inv_mu;
  r.err_estimate *= inv_mu;
  return r;
}

double require_converged(const QuadResult& r, const char* what) {
  if (!r.converged) {
    throw ConvergenceError(std::string(what) + ": quadrature did not converge (best " +
                               std::to_string(r.value) + ", err " +
                               std::to_string(r.err_estimate) + ")",
                           r.value, r.err_estimate);
  }
  return r.value;
}

}  // namespace fracineq

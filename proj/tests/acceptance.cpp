// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "fracineq/sweep.hpp"

using namespace fracineq;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

double x_at(const Interval& iv, double frac) { return iv.a() + frac * iv.length(); }

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& title, const Outcome& o) {
  std::printf("[%s] AC%d %s: %s\n", o.pass ? "PASS" : "FAIL", id, title.c_str(),
              o.detail.c_str());
  if (!o.pass) ++failures;
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

const FunctionSpec& fn(const std::string& id) { return builtin_registry().lookup(id); }

Outcome monomial_oracle() {
  const auto t0 = Clock::now();
  const QuadratureConfig cfg;
  int total = 0;
  int ok = 0;
  double worst = 0.0;
  for (auto [a, b] : {std::pair{0.0, 1.0}, std::pair{1.0, 3.0}}) {
    for (double beta : {0.0, 1.0, 2.0, 3.0}) {
      for (double alpha : {1.0, 1.5, 2.0, 2.7}) {
        for (double x : {0.5 * (a + b), b - 0.1 * (b - a)}) {
          auto g = [=](double t) { return std::pow(t - a, beta); };
          const double want = rl_monomial_oracle(a, alpha, beta, x);
          const double got = rl_integral(g, a, alpha, x, cfg);
          const double e = std::abs(got - want) / std::abs(want);
          worst = std::max(worst, e);
          ++total;
          ok += e <= 1e-8;
        }
      }
    }
  }
  const double secs = seconds_since(t0);
  return {ok == total && secs < 5.0,
          std::to_string(ok) + "/" + std::to_string(total) + " within 1e-8, worst rel err " +
              fmt("%.2e", worst) + ", " + fmt("%.3f", secs) + " s"};
}

Outcome identity_suite() {
  const auto t0 = Clock::now();
  SweepSpec spec = SweepSpec::default_grid();
  spec.tasks = {Task::eq9, Task::lemma_frac, Task::eq10, Task::eq11, Task::remark1, Task::classic};
  const SweepResult r = run_sweep(spec);
  double worst = 0.0;
  for (const SweepRow& row : r.rows) {
    if (row.errored()) continue;
    const double tol =
        std::max(spec.cfg.quad.abs_tol, spec.cfg.rel_tol_identity * row.scale_or_tightness);
    worst = std::max(worst, std::abs(row.residual_or_slack) / tol);
  }
  const double secs = seconds_since(t0);
  const bool pass = r.summary.passed == r.summary.total && secs < 120.0;
  return {pass, std::to_string(r.summary.passed) + "/" + std::to_string(r.summary.total) +
                    " rows pass, worst residual/tolerance " + fmt("%.2e", worst) + ", " +
                    fmt("%.3f", secs) + " s"};
}

Outcome order_one_reduction() {
  const CheckConfig cfg;
  const SweepSpec grid = SweepSpec::default_grid();
  int total = 0;
  int ok = 0;
  double worst = 0.0;
  for (const std::string& id : grid.function_ids) {
    for (const Interval& iv : grid.intervals) {
      for (double frac : grid.x_fractions) {
        const double x = x_at(iv, frac);
        const FracPoint pt(iv, x, 1.0);
        const IdentityReport five = montgomery_frac_residual(fn(id), pt, cfg);
        const IdentityReport half = remark1_residual(fn(id), iv, x, cfg);
        const double e1 =
            std::abs(five.rhs - 2.0 * half.rhs) / std::max(five.scale, 2.0 * half.scale);
        const IdentityReport lemma = lemma_frac_residual(fn(id), pt, cfg);
        const IdentityReport classic = montgomery_classic_residual(fn(id), iv, x, cfg);
        const double e2 =
            std::abs(lemma.rhs - classic.rhs) / std::max(lemma.scale, classic.scale);
        worst = std::max({worst, e1, e2});
        total += 2;
        ok += (e1 <= 1e-10) + (e2 <= 1e-10);
      }
    }
  }
  return {ok == total, std::to_string(ok) + "/" + std::to_string(total) +
                           " comparisons within 1e-10 scaled, worst " + fmt("%.2e", worst)};
}

Outcome inequality_suite() {
  SweepSpec spec = SweepSpec::default_grid();
  spec.tasks = {Task::frac, Task::cheng, Task::dragomir, Task::ostrowski, Task::remark2};
  const SweepResult r = run_sweep(spec);
  const Registry& reg = builtin_registry();
  int inexact = 0;
  double worst = INFINITY;
  for (const SweepRow& row : r.rows) {
    if (!reg.lookup(row.function_id).exact_bounds(Interval(row.a, row.b))) ++inexact;
    if (!row.errored()) {
      worst = std::min(worst, row.residual_or_slack / std::max(1.0, row.rhs));
    }
  }
  const bool pass = r.summary.passed == r.summary.total && inexact == 0;
  return {pass, std::to_string(r.summary.passed) + "/" + std::to_string(r.summary.total) +
                    " rows hold, " + std::to_string(inexact) +
                    " without exact bounds, smallest normalized slack " + fmt("%.3e", worst)};
}

Outcome reference_values() {
  const CheckConfig cfg;
  double worst_mid = 0.0;
  int mid_total = 0;
  int mid_ok = 0;
  for (const std::string& id : default_function_ids()) {
    for (const Interval& iv : SweepSpec::default_grid().intervals) {
      const double mid = 0.5 * (iv.a() + iv.b());
      const InequalityReport r = theorem_frac_check(fn(id), FracPoint(iv, mid, 1.0), cfg);
      const double want = derivative_bounds(fn(id), iv).M * iv.length() / 4.0;
      const double e = want == 0.0 ? std::abs(r.rhs) : std::abs(r.rhs - want) / want;
      worst_mid = std::max(worst_mid, e);
      ++mid_total;
      mid_ok += e <= 1e-12;
    }
  }
  double worst_id = 0.0;
  int id_total = 0;
  int id_ok = 0;
  for (const Interval& iv : SweepSpec::default_grid().intervals) {
    for (int i = 0; i <= 10000; ++i) {
      const double x = x_at(iv, i / 10000.0);
      const double a = iv.a();
      const double b = iv.b();
      const double lhs = (b - a) * (x - a) + (b - x) * (a + b - 2.0 * x);
      const double rhs = (x - a) * (x - a) + (b - x) * (b - x);
      const double e = std::abs(lhs - rhs) / rhs;
      worst_id = std::max(worst_id, e);
      ++id_total;
      id_ok += e <= 1e-12;
    }
  }
  return {mid_ok == mid_total && id_ok == id_total,
          "midpoint bound " + std::to_string(mid_ok) + "/" + std::to_string(mid_total) +
              " (worst " + fmt("%.2e", worst_mid) + "), bracket identity " +
              std::to_string(id_ok) + "/" + std::to_string(id_total) + " (worst " +
              fmt("%.2e", worst_id) + ")"};
}

Outcome sharpness() {
  const CheckConfig cfg;
  int total = 0;
  int ok = 0;
  double worst = 0.0;
  for (const char* id : {"poly1", "affine1"}) {
    for (const Interval& iv : SweepSpec::default_grid().intervals) {
      for (double x : {iv.a(), iv.b()}) {
        const InequalityReport r = classic_ostrowski_check(fn(id), iv, x, cfg);
        const double e = std::abs(r.tightness - 1.0);
        worst = std::max(worst, e);
        ++total;
        ok += e <= 1e-9;
      }
    }
  }
  return {ok == total, std::to_string(ok) + "/" + std::to_string(total) +
                           " endpoint probes at tightness 1, worst deviation " +
                           fmt("%.2e", worst)};
}

Outcome bracket_dominance() {
  const QuadratureConfig cfg;
  const SweepSpec grid = SweepSpec::default_grid();
  int total = 0;
  int dominated = 0;
  int order_one = 0;
  int order_one_ok = 0;
  double min_ratio = INFINITY;
  double worst_two = 0.0;
  for (const Interval& iv : grid.intervals) {
    for (double alpha : grid.alpha_grid) {
      for (double frac : grid.x_fractions) {
        const double x = x_at(iv, frac);
        const double paper = frac_paper_bracket(iv, x, alpha);
        const double sharp = frac_sharp_bracket(iv, x, alpha, cfg).value;
        const double ratio = paper / sharp;
        min_ratio = std::min(min_ratio, ratio);
        ++total;
        dominated += paper >= sharp;
        if (alpha == 1.0) {
          const double e = std::abs(ratio - 2.0) / 2.0;
          worst_two = std::max(worst_two, e);
          ++order_one;
          order_one_ok += e <= 1e-9;
        }
      }
    }
  }
  return {dominated == total && order_one_ok == order_one,
          "dominance " + std::to_string(dominated) + "/" + std::to_string(total) +
              " (min ratio " + fmt("%.6f", min_ratio) + "), order-1 ratio 2 " +
              std::to_string(order_one_ok) + "/" + std::to_string(order_one) + " (worst " +
              fmt("%.2e", worst_two) + ")"};
}

Outcome determinism() {
  const SweepSpec spec = SweepSpec::default_grid();
  const std::string first = emit_csv(run_sweep(spec).rows);
  const std::string second = emit_csv(run_sweep(spec).rows);

  SweepSpec single;
  single.tasks = {Task::eq9};
  single.function_ids = {"poly1"};
  single.intervals = {Interval(0, 1)};
  single.alpha_grid = {1.0};
  single.x_fractions = {0.5};
  std::ifstream in(std::string(FRACINEQ_GOLDEN_DIR) + "/eq9_poly1.csv", std::ios::binary);
  std::stringstream golden;
  golden << in.rdbuf();
  const bool golden_ok = !golden.str().empty() && emit_csv(run_sweep(single).rows) == golden.str();
  const bool same = first == second;
  return {same && golden_ok, std::string("repeat runs ") + (same ? "identical" : "differ") + " (" +
                                 std::to_string(first.size()) + " bytes), golden " +
                                 (golden_ok ? "match" : "mismatch")};
}

}  // namespace

int main() {
  report(1, "monomial oracle agreement", monomial_oracle());
  report(2, "identity suite over the default grid", identity_suite());
  report(3, "order-1 reduction equivalence", order_one_reduction());
  report(4, "inequality suite over the default grid", inequality_suite());
  report(5, "order-1 midpoint bound and bracket identity", reference_values());
  report(6, "classical bound sharpness for linear f", sharpness());
  report(7, "bracket dominance", bracket_dominance());
  report(8, "determinism and golden artifact", determinism());

  // Informational: the order-1 identity without the 1/(b-a) normalization.
  const IdentityReport raw = remark1_residual(fn("poly2"), Interval(1, 3), 2.0, CheckConfig{},
                                              RemarkForm::as_printed);
  std::printf("[INFO] unnormalized order-1 identity, t^2 on [1,3] at x=2: residual %.6g (%s)\n",
              raw.residual, raw.pass ? "holds" : "does not hold");

  const auto t0 = Clock::now();
  const SweepResult full = run_sweep(SweepSpec::default_grid());
  std::printf("[INFO] full default sweep: %zu rows, %zu passed, %.3f s\n", full.summary.total,
              full.summary.passed, seconds_since(t0));

  std::printf("%d of 8 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}

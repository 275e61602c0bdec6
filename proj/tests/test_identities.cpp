#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "fracineq/identities.hpp"
#include "oracles.hpp"

using namespace fracineq;
using doctest::Approx;

namespace {

const std::vector<Interval> kIntervals = {Interval(0, 1), Interval(1, 3)};
const std::vector<double> kAlphas = {1.0, 1.25, 1.5, 2.0, 2.5, 3.0};
const std::vector<double> kFractions = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};

const FunctionSpec& fn(const std::string& id) { return builtin_registry().lookup(id); }

double x_at(const Interval& iv, double frac) { return iv.a() + frac * iv.length(); }

// g(t) = f(t - s): the same function translated right by s.
FunctionSpec shifted(const FunctionSpec& f, double s) {
  FunctionSpec g;
  g.id = f.id + "_shift";
  g.f = [h = f.f, s](double t) { return h(t - s); };
  g.f_prime = [h = f.f_prime, s](double t) { return h(t - s); };
  return g;
}

}  // namespace

TEST_CASE("classic identity: t^2 on [0,1] at x = 0.3") {
  const CheckConfig cfg;
  const IdentityReport r = montgomery_classic_residual(fn("poly2"), Interval(0, 1), 0.3, cfg);
  CHECK(r.lhs == Approx(0.09).epsilon(1e-15));
  REQUIRE(r.rhs_terms.size() == 2);
  CHECK(r.rhs_terms[0].value == Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(r.rhs_terms[1].value == Approx(0.09 - 1.0 / 3.0).epsilon(1e-12));
  CHECK(r.pass);
  CHECK(std::abs(r.residual) <= 1e-14);
}

TEST_CASE("report bookkeeping") {
  const CheckConfig cfg;
  const IdentityReport r = make_identity_report({{"l", 2.0}}, {{"r1", 5.0}, {"r2", -3.0}}, 0.0, cfg);
  CHECK(r.lhs == 2.0);
  CHECK(r.rhs == 2.0);
  CHECK(r.residual == 0.0);
  CHECK(r.scale == 5.0);
  CHECK(r.tolerance == Approx(5e-7));
  CHECK(r.pass);
  const IdentityReport bad = make_identity_report({{"l", 1.0}}, {{"r", 1.0 + 1e-6}}, 0.0, cfg);
  CHECK_FALSE(bad.pass);
  const IdentityReport nan = make_identity_report({{"l", NAN}}, {{"r", 1.0}}, 0.0, cfg);
  CHECK_FALSE(nan.pass);
}

TEST_CASE("fractional identities: worked points") {
  const CheckConfig cfg;
  const Interval iv(0, 1);
  const FracPoint pt(iv, 0.25, 2.0);
  for (const char* id : {"poly1", "poly3", "exp"}) {
    INFO(id);
    CHECK(lemma_frac_residual(fn(id), pt, cfg).pass);
    CHECK(montgomery_frac_residual(fn(id), pt, cfg).pass);
    CHECK(eq10_residual(fn(id), pt, cfg).pass);
    CHECK(eq11_residual(fn(id), pt, cfg).pass);
  }
  // J^2 f(1) for f = t is 1/6, so the mean term is 3 · 1 · (1/0.75) · (1/6).
  const FracMontgomeryTerms t = frac_montgomery_terms(fn("poly1"), pt, cfg.quad);
  CHECK(t.fx == 0.25);
  CHECK(t.mean_term.value == Approx(3.0 / 0.75 / 6.0).epsilon(1e-12));
  // f(a) = 0 for f = t.
  CHECK(t.fa_term.value == 0.0);
  // J^1 f(1) = 1/2, coefficient (b-x)^0 Γ(2)/(b-a) = 1.
  CHECK(t.jm1_term.value == Approx(-0.5).epsilon(1e-12));
}

TEST_CASE("fractional integrals of exp at b from the corpus evaluators") {
  const QuadratureConfig cfg;
  const Interval iv(0, 1);
  CHECK(j_f(fn("exp"), FracPoint(iv, 0.5, 2.5), cfg).value ==
        Approx(0.41006630714405061).epsilon(1e-10));
  CHECK(j_m1_f(fn("exp"), FracPoint(iv, 0.5, 2.5), cfg).value ==
        Approx(1.1623190852077257).epsilon(1e-10));
  CHECK(j_m1_f(fn("exp"), FracPoint(iv, 0.5, 1.5), cfg).value ==
        Approx(2.2906982523032382).epsilon(1e-10));
  // Order 0 is the identity at b.
  CHECK(j_m1_f(fn("exp"), FracPoint(iv, 0.5, 1.0), cfg).value == std::exp(1.0));
}

TEST_CASE("every identity holds over the default grid") {
  const CheckConfig cfg;
  int checked = 0;
  for (const std::string& id : default_function_ids()) {
    for (const Interval& iv : kIntervals) {
      for (double frac : kFractions) {
        const double x = x_at(iv, frac);
        INFO(id << " [" << iv.a() << "," << iv.b() << "] x=" << x);
        CHECK(montgomery_classic_residual(fn(id), iv, x, cfg).pass);
        CHECK(remark1_residual(fn(id), iv, x, cfg).pass);
        for (double alpha : kAlphas) {
          INFO("alpha=" << alpha);
          const FracPoint pt(iv, x, alpha);
          CHECK(lemma_frac_residual(fn(id), pt, cfg).pass);
          CHECK(montgomery_frac_residual(fn(id), pt, cfg).pass);
          CHECK(eq10_residual(fn(id), pt, cfg).pass);
          CHECK(eq11_residual(fn(id), pt, cfg).pass);
          ++checked;
        }
      }
    }
  }
  CHECK(checked == 7 * 2 * 9 * 6);
}

TEST_CASE("chain property: five-term residual = lemma - 2k·parts - 2·shift") {
  // The five-term identity follows from the three-term lemma by substituting
  // the kernel split and the integration by parts. Every shared term is
  // evaluated by the same deterministic quadrature call, so the residuals
  // must satisfy the same linear relation up to rounding.
  const CheckConfig cfg;
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const auto ids = default_function_ids();
  for (int trial = 0; trial < 150; ++trial) {
    const FunctionSpec& f = fn(ids[trial % ids.size()]);
    const Interval& iv = kIntervals[trial % 2];
    const double alpha = 1.0 + 2.0 * u(rng);
    const double x = x_at(iv, 0.02 + 0.95 * u(rng));
    const FracPoint pt(iv, x, alpha);
    const IdentityReport r9 = montgomery_frac_residual(f, pt, cfg);
    const IdentityReport rz = lemma_frac_residual(f, pt, cfg);
    const IdentityReport r10 = eq10_residual(f, pt, cfg);
    const IdentityReport r11 = eq11_residual(f, pt, cfg);
    const double k = std::pow(iv.b() - x, 1.0 - alpha) / (2.0 * iv.length());
    const double predicted = rz.residual - 2.0 * k * r11.residual - 2.0 * r10.residual;
    const double scale = std::max({r9.scale, rz.scale, r10.scale, k * r11.scale});
    INFO(f.id << " alpha=" << alpha << " x=" << x);
    CHECK(std::abs(r9.residual - predicted) <= 1e-12 * scale);
  }
}

TEST_CASE("covariance under translation of the interval") {
  const CheckConfig cfg;
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (const std::string& id : default_function_ids()) {
    const double s = -3.0 + 6.0 * u(rng);
    const FunctionSpec g = shifted(fn(id), s);
    const Interval iv(1, 3);
    const Interval moved(1 + s, 3 + s);
    for (double alpha : {1.0, 1.5, 2.5}) {
      const double x = 1.0 + 2.0 * (0.1 + 0.8 * u(rng));
      const IdentityReport base = montgomery_frac_residual(fn(id), FracPoint(iv, x, alpha), cfg);
      const IdentityReport trans = montgomery_frac_residual(g, FracPoint(moved, x + s, alpha), cfg);
      INFO(id << " s=" << s << " alpha=" << alpha);
      CHECK(trans.pass);
      CHECK(std::abs(trans.lhs - base.lhs) <= 1e-9 * base.scale);
      REQUIRE(trans.rhs_terms.size() == base.rhs_terms.size());
      for (std::size_t i = 0; i < base.rhs_terms.size(); ++i) {
        CHECK(std::abs(trans.rhs_terms[i].value - base.rhs_terms[i].value) <= 1e-9 * base.scale);
      }
    }
  }
}

TEST_CASE("order 1 reduces to the classical identities") {
  const CheckConfig cfg;
  for (const std::string& id : default_function_ids()) {
    for (const Interval& iv : kIntervals) {
      for (double frac : kFractions) {
        const double x = x_at(iv, frac);
        const FracPoint pt(iv, x, 1.0);
        INFO(id << " [" << iv.a() << "," << iv.b() << "] x=" << x);

        const IdentityReport lemma = lemma_frac_residual(fn(id), pt, cfg);
        const IdentityReport classic = montgomery_classic_residual(fn(id), iv, x, cfg);
        CHECK(std::abs(lemma.rhs - classic.rhs) <= 1e-10 * std::max(lemma.scale, classic.scale));

        const IdentityReport five = montgomery_frac_residual(fn(id), pt, cfg);
        const IdentityReport half = remark1_residual(fn(id), iv, x, cfg);
        CHECK(std::abs(five.rhs - 2.0 * half.rhs) <= 1e-10 * std::max(five.scale, 2 * half.scale));
      }
    }
  }
}

TEST_CASE("alpha-1 identity without the 1/(b-a) normalization") {
  const CheckConfig cfg;
  // On a unit-length interval both forms coincide.
  CHECK(remark1_residual(fn("poly2"), Interval(0, 1), 0.4, cfg, RemarkForm::as_printed).pass);
  // Affine f has a vanishing kernel integral, so both forms hold anywhere.
  CHECK(remark1_residual(fn("poly1"), Interval(1, 3), 1.7, cfg, RemarkForm::as_printed).pass);
  // Otherwise the unnormalized form fails.
  const IdentityReport wide =
      remark1_residual(fn("poly2"), Interval(1, 3), 2.0, cfg, RemarkForm::as_printed);
  CHECK_FALSE(wide.pass);
  CHECK(remark1_residual(fn("poly2"), Interval(1, 3), 2.0, cfg).pass);
  // t^2 on [0,2] at x = 1: the unnormalized right side is 2/3 against f(x)/2 = 1/2.
  const IdentityReport ex =
      remark1_residual(fn("poly2"), Interval(0, 2), 1.0, cfg, RemarkForm::as_printed);
  CHECK(ex.lhs == 0.5);
  CHECK(ex.rhs == Approx(2.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("x outside the interval is rejected") {
  const CheckConfig cfg;
  CHECK_THROWS_AS(montgomery_classic_residual(fn("poly1"), Interval(0, 1), 1.5, cfg), DomainError);
  CHECK_THROWS_AS(remark1_residual(fn("poly1"), Interval(0, 1), -0.1, cfg), DomainError);
}

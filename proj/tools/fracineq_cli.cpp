// fracineq: command-line front end for the fractional Montgomery identity and
// Ostrowski-Grüss inequality checks.
//
//   fracineq list-functions
//   fracineq verify <task> --fn exp --a 0 --b 1 --alpha 1.5 --x 0.25
//   fracineq sweep <task|all> [--fn ...] [--a ... --b ...] [--alpha ...]
//                  [--x fractions...] [--format csv|json] [--out file]
//
// Exit codes: 0 all checks pass, 1 any check fails or errors, 2 usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fracineq/sweep.hpp"

namespace {

using namespace fracineq;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void print_terms(const char* heading, const std::vector<Term>& terms) {
  std::cout << heading << "\n";
  for (const Term& t : terms) {
    std::printf("  %-48s % .17g\n", t.name.c_str(), t.value);
  }
}

void print_identity(const IdentityReport& r) {
  print_terms("left side:", r.lhs_terms);
  print_terms("right side:", r.rhs_terms);
  std::cout << "lhs           " << fmt(r.lhs) << "\n"
            << "rhs           " << fmt(r.rhs) << "\n"
            << "residual      " << fmt(r.residual) << "\n"
            << "scale         " << fmt(r.scale) << "\n"
            << "tolerance     " << fmt(r.tolerance) << "\n"
            << "err_estimate  " << fmt(r.err_estimate) << "\n"
            << "pass          " << (r.pass ? "true" : "false") << "\n";
}

void print_inequality(const InequalityReport& r) {
  print_terms("inside |.|:", r.lhs_terms);
  std::cout << "lhs           " << fmt(r.lhs) << "\n"
            << "rhs           " << fmt(r.rhs) << "\n"
            << "slack         " << fmt(r.slack) << "\n"
            << "tightness     " << fmt(r.tightness) << "\n"
            << "tol_slack     " << fmt(r.tol_slack) << "\n"
            << "err_estimate  " << fmt(r.err_estimate) << "\n"
            << "bounds_exact  " << (r.bounds_exact ? "true" : "false") << "\n";
  if (r.paper_bracket) {
    std::cout << "paper_bracket " << fmt(*r.paper_bracket) << "\n"
              << "sharp_bracket " << fmt(*r.sharp_bracket) << "\n"
              << "bracket_ratio " << fmt(*r.bracket_ratio) << "\n";
  }
  std::cout << "pass          " << (r.pass ? "true" : "false") << "\n";
}

Task require_task(const std::string& name) {
  if (auto t = parse_task(name)) return *t;
  std::string msg = "unknown task '" + name + "'; expected one of:";
  for (Task t : all_tasks()) msg += " " + std::string(task_name(t));
  throw UsageError(msg);
}

struct VerifyArgs {
  std::string task;
  std::string fn = "poly2";
  double a = 0.0;
  double b = 1.0;
  double alpha = 1.0;
  double x = 0.5;
};

int run_verify(const VerifyArgs& args, const CheckConfig& cfg) {
  const Task task = require_task(args.task);
  const Registry& reg = builtin_registry();
  const FunctionSpec* f = nullptr;
  try {
    f = &reg.lookup(args.fn);
  } catch (const UnknownFunctionError& e) {
    throw UsageError(e.what());
  }
  std::optional<Interval> iv;
  try {
    iv.emplace(args.a, args.b);
    cfg.quad.validate();
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }

  std::cout << "task " << task_name(task) << "  function " << f->id << "  [a, b] = ["
            << fmt(iv->a()) << ", " << fmt(iv->b()) << "]  x = " << fmt(args.x);
  if (task_uses_alpha(task)) std::cout << "  alpha = " << fmt(args.alpha);
  std::cout << "\n";

  try {
    auto pt = [&] { return FracPoint(*iv, args.x, args.alpha, cfg.quad.endpoint_guard); };
    bool pass = false;
    auto ident = [&](const IdentityReport& r) { print_identity(r); pass = r.pass; };
    auto ineq = [&](const InequalityReport& r) { print_inequality(r); pass = r.pass; };
    switch (task) {
      case Task::classic: ident(montgomery_classic_residual(*f, *iv, args.x, cfg)); break;
      case Task::lemma_frac: ident(lemma_frac_residual(*f, pt(), cfg)); break;
      case Task::eq9: ident(montgomery_frac_residual(*f, pt(), cfg)); break;
      case Task::eq10: ident(eq10_residual(*f, pt(), cfg)); break;
      case Task::eq11: ident(eq11_residual(*f, pt(), cfg)); break;
      case Task::remark1: ident(remark1_residual(*f, *iv, args.x, cfg)); break;
      case Task::ostrowski: ineq(classic_ostrowski_check(*f, *iv, args.x, cfg)); break;
      case Task::cheng: ineq(cheng_check(*f, *iv, args.x, cfg)); break;
      case Task::dragomir: ineq(dragomir_check(*f, *iv, args.x, cfg)); break;
      case Task::frac: ineq(theorem_frac_check(*f, pt(), cfg)); break;
      case Task::remark2: ineq(remark2_check(*f, *iv, args.x, cfg)); break;
    }
    return pass ? kExitPass : kExitFail;
  } catch (const std::exception& e) {
    std::cout << "error         " << e.what() << "\n";
    return kExitFail;
  }
}

struct SweepArgs {
  std::string task;
  std::vector<std::string> fns;
  std::vector<double> as;
  std::vector<double> bs;
  std::vector<double> alphas;
  std::vector<double> xs;
  std::string format = "csv";
  std::string out;
  bool serial = false;
};

int run_sweep_cmd(const SweepArgs& args, const CheckConfig& cfg) {
  SweepSpec spec = SweepSpec::default_grid();
  spec.cfg = cfg;
  if (args.task == "all") {
    spec.tasks = all_tasks();
  } else {
    spec.tasks = {require_task(args.task)};
  }
  if (!args.fns.empty()) spec.function_ids = args.fns;
  if (!args.as.empty() || !args.bs.empty()) {
    if (args.as.size() != args.bs.size()) {
      throw UsageError("--a and --b must be given the same number of times");
    }
    spec.intervals.clear();
    try {
      for (std::size_t i = 0; i < args.as.size(); ++i) spec.intervals.emplace_back(args.as[i], args.bs[i]);
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
  }
  if (!args.alphas.empty()) spec.alpha_grid = args.alphas;
  if (!args.xs.empty()) spec.x_fractions = args.xs;

  try {
    spec.validate(builtin_registry());
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }

  const SweepResult res = args.serial ? run_sweep_serial(spec) : run_sweep(spec);
  const std::string text =
      args.format == "json" ? emit_json(spec, res.rows, res.summary) : emit_csv(res.rows);

  if (args.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream os(args.out, std::ios::binary);
    if (!os) throw UsageError("cannot open output file " + args.out);
    os << text;
  }

  for (const SweepRow& r : res.rows) {
    if (r.errored()) {
      std::cerr << "error: " << task_name(r.task) << " " << r.function_id << " [" << fmt(r.a)
                << ", " << fmt(r.b) << "] x=" << fmt(r.x);
      if (r.alpha) std::cerr << " alpha=" << fmt(*r.alpha);
      std::cerr << ": " << r.error << "\n";
    }
  }
  const SweepSummary& s = res.summary;
  std::cerr << "total " << s.total << "  passed " << s.passed << "  failed " << s.failed
            << "  errored " << s.errored << "\n";
  return (s.failed == 0 && s.errored == 0) ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical verification of fractional Montgomery identities and "
               "Ostrowski-Grüss type inequalities"};
  app.require_subcommand(1);

  CheckConfig cfg;
  auto add_tolerances = [&](CLI::App* sub) {
    sub->add_option("--abs-tol", cfg.quad.abs_tol, "Absolute quadrature tolerance")
        ->capture_default_str();
    sub->add_option("--rel-tol", cfg.quad.rel_tol, "Relative quadrature tolerance")
        ->capture_default_str();
    sub->add_option("--rel-tol-identity", cfg.rel_tol_identity,
                    "Scaled tolerance for identity residuals")
        ->capture_default_str();
  };

  app.add_subcommand("list-functions", "List the registered test functions");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Evaluate one check at a single point");
  verify->add_option("task", va.task, "Task name")->required();
  verify->add_option("--fn", va.fn, "Function id")->capture_default_str();
  verify->add_option("--a", va.a, "Left endpoint")->capture_default_str();
  verify->add_option("--b", va.b, "Right endpoint")->capture_default_str();
  verify->add_option("--alpha", va.alpha, "Fractional order (>= 1)")->capture_default_str();
  verify->add_option("--x", va.x, "Evaluation point in [a, b]")->capture_default_str();
  add_tolerances(verify);

  SweepArgs sa;
  auto* sweep = app.add_subcommand("sweep", "Run a check over a parameter grid");
  sweep->add_option("task", sa.task, "Task name, or 'all'")->required();
  sweep->add_option("--fn", sa.fns, "Function ids (default: the seven corpus functions)");
  sweep->add_option("--a", sa.as, "Left endpoints, paired with --b (default: 0 1)");
  sweep->add_option("--b", sa.bs, "Right endpoints, paired with --a (default: 1 3)");
  sweep->add_option("--alpha", sa.alphas, "Alpha grid (default: 1 1.25 1.5 2 2.5 3)");
  sweep->add_option("--x", sa.xs, "x grid as fractions of b - a in (0, 1) (default: 0.1 ... 0.9)");
  sweep->add_option("--format", sa.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sweep->add_option("--out", sa.out, "Output file (default: stdout)");
  sweep->add_flag("--serial", sa.serial, "Use the single-threaded reference sweep");
  add_tolerances(sweep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (app.got_subcommand("list-functions")) {
      const Registry& reg = builtin_registry();
      for (const std::string& id : reg.ids()) {
        const FunctionSpec& f = reg.lookup(id);
        std::cout << id << "\t" << f.description << "\tintervals:";
        for (const auto& [iv, bounds] : f.bounds_for) {
          std::cout << " [" << fmt(iv.a()) << ", " << fmt(iv.b()) << "]";
        }
        std::cout << (f.closed_rl ? "\tclosed-form J" : "") << "\n";
      }
      return kExitPass;
    }
    if (app.got_subcommand(verify)) return run_verify(va, cfg);
    return run_sweep_cmd(sa, cfg);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
}

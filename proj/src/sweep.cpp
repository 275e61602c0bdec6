#include "fracineq/sweep.hpp"

#include <array>
#include <cmath>
#include <exception>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fracineq {

namespace {

struct TaskInfo {
  Task task;
  std::string_view name;
  bool identity;
  bool uses_alpha;
};

constexpr std::array<TaskInfo, 11> kTasks = {{
    {Task::classic, "classic", true, false},
    {Task::lemma_frac, "lemma_frac", true, true},
    {Task::eq9, "eq9", true, true},
    {Task::eq10, "eq10", true, true},
    {Task::eq11, "eq11", true, true},
    {Task::remark1, "remark1", true, false},
    {Task::ostrowski, "ostrowski", false, false},
    {Task::cheng, "cheng", false, false},
    {Task::dragomir, "dragomir", false, false},
    {Task::frac, "frac", false, true},
    {Task::remark2, "remark2", false, false},
}};

const TaskInfo& info(Task t) {
  for (const TaskInfo& i : kTasks) {
    if (i.task == t) return i;
  }
  throw DomainError("unknown task");
}

struct GridPoint {
  Task task;
  const FunctionSpec* f;
  Interval iv;
  std::optional<double> alpha;
  double x;
};

std::vector<GridPoint> enumerate(const SweepSpec& spec, const Registry& registry) {
  std::vector<GridPoint> pts;
  for (Task task : spec.tasks) {
    std::vector<std::optional<double>> alphas;
    if (task_uses_alpha(task)) {
      alphas.assign(spec.alpha_grid.begin(), spec.alpha_grid.end());
    } else {
      alphas.push_back(std::nullopt);
    }
    for (const std::string& id : spec.function_ids) {
      const FunctionSpec& f = registry.lookup(id);
      for (const Interval& iv : spec.intervals) {
        for (const auto& alpha : alphas) {
          for (double frac : spec.x_fractions) {
            pts.push_back({task, &f, iv, alpha, iv.a() + frac * iv.length()});
          }
        }
      }
    }
  }
  return pts;
}

void fill(SweepRow& row, const IdentityReport& r) {
  row.lhs = r.lhs;
  row.rhs = r.rhs;
  row.residual_or_slack = r.residual;
  row.scale_or_tightness = r.scale;
  row.pass = r.pass;
  row.err_estimate = r.err_estimate;
}

void fill(SweepRow& row, const InequalityReport& r) {
  row.lhs = r.lhs;
  row.rhs = r.rhs;
  row.residual_or_slack = r.slack;
  row.scale_or_tightness = r.tightness;
  row.pass = r.pass;
  row.err_estimate = r.err_estimate;
}

}  // namespace

std::string_view task_name(Task t) { return info(t).name; }

std::optional<Task> parse_task(std::string_view name) {
  for (const TaskInfo& i : kTasks) {
    if (i.name == name) return i.task;
  }
  return std::nullopt;
}

bool is_identity_task(Task t) { return info(t).identity; }
bool task_uses_alpha(Task t) { return info(t).uses_alpha; }

const std::vector<Task>& all_tasks() {
  static const std::vector<Task> tasks = [] {
    std::vector<Task> v;
    for (const TaskInfo& i : kTasks) v.push_back(i.task);
    return v;
  }();
  return tasks;
}

void SweepSpec::validate(const Registry& registry) const {
  cfg.quad.validate();
  if (tasks.empty()) throw DomainError("sweep: no task selected");
  if (function_ids.empty()) throw DomainError("sweep: empty function list");
  if (intervals.empty()) throw DomainError("sweep: empty interval list");
  if (x_fractions.empty()) throw DomainError("sweep: empty x grid");
  for (const std::string& id : function_ids) registry.lookup(id);
  for (double frac : x_fractions) {
    if (!(frac > 0.0 && frac < 1.0)) {
      throw DomainError("sweep: x fractions must lie in (0, 1)");
    }
  }
  bool any_alpha = false;
  for (Task t : tasks) any_alpha = any_alpha || task_uses_alpha(t);
  if (any_alpha) {
    if (alpha_grid.empty()) throw DomainError("sweep: empty alpha grid");
    for (double alpha : alpha_grid) {
      if (!std::isfinite(alpha) || alpha < 1.0) {
        throw DomainError("sweep: alpha values must be >= 1");
      }
    }
  }
}

SweepSpec SweepSpec::default_grid() {
  SweepSpec s;
  s.tasks = all_tasks();
  s.function_ids = default_function_ids();
  s.intervals = {Interval(0.0, 1.0), Interval(1.0, 3.0)};
  s.alpha_grid = {1.0, 1.25, 1.5, 2.0, 2.5, 3.0};
  s.x_fractions = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  return s;
}

SweepRow evaluate_point(Task task, const FunctionSpec& f, const Interval& iv,
                        std::optional<double> alpha, double x, const CheckConfig& cfg) {
  SweepRow row;
  row.task = task;
  row.function_id = f.id;
  row.a = iv.a();
  row.b = iv.b();
  row.alpha = task_uses_alpha(task) ? alpha : std::nullopt;
  row.x = x;
  try {
    auto point = [&] {
      if (!alpha) throw DomainError("task requires alpha");
      return FracPoint(iv, x, *alpha, cfg.quad.endpoint_guard);
    };
    switch (task) {
      case Task::classic: fill(row, montgomery_classic_residual(f, iv, x, cfg)); break;
      case Task::lemma_frac: fill(row, lemma_frac_residual(f, point(), cfg)); break;
      case Task::eq9: fill(row, montgomery_frac_residual(f, point(), cfg)); break;
      case Task::eq10: fill(row, eq10_residual(f, point(), cfg)); break;
      case Task::eq11: fill(row, eq11_residual(f, point(), cfg)); break;
      case Task::remark1: fill(row, remark1_residual(f, iv, x, cfg)); break;
      case Task::ostrowski: fill(row, classic_ostrowski_check(f, iv, x, cfg)); break;
      case Task::cheng: fill(row, cheng_check(f, iv, x, cfg)); break;
      case Task::dragomir: fill(row, dragomir_check(f, iv, x, cfg)); break;
      case Task::frac: fill(row, theorem_frac_check(f, point(), cfg)); break;
      case Task::remark2: fill(row, remark2_check(f, iv, x, cfg)); break;
    }
  } catch (const std::exception& e) {
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    row.lhs = row.rhs = row.residual_or_slack = row.scale_or_tightness = nan;
    row.err_estimate = nan;
    row.pass = false;
    row.error = e.what();
    if (row.error.empty()) row.error = "evaluation failed";
  }
  return row;
}

std::size_t sweep_size(const SweepSpec& spec) {
  std::size_t n = 0;
  const std::size_t per_alpha =
      spec.function_ids.size() * spec.intervals.size() * spec.x_fractions.size();
  for (Task t : spec.tasks) n += per_alpha * (task_uses_alpha(t) ? spec.alpha_grid.size() : 1);
  return n;
}

SweepResult run_sweep_serial(const SweepSpec& spec, const Registry& registry) {
  spec.validate(registry);
  const std::vector<GridPoint> pts = enumerate(spec, registry);
  SweepResult out;
  out.rows.reserve(pts.size());
  for (const GridPoint& p : pts) {
    out.rows.push_back(evaluate_point(p.task, *p.f, p.iv, p.alpha, p.x, spec.cfg));
  }
  out.summary = summarize(out.rows);
  return out;
}

SweepResult run_sweep(const SweepSpec& spec, const Registry& registry) {
  spec.validate(registry);
  const std::vector<GridPoint> pts = enumerate(spec, registry);
  SweepResult out;
  out.rows.resize(pts.size());
  const auto n = static_cast<std::ptrdiff_t>(pts.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const GridPoint& p = pts[static_cast<std::size_t>(i)];
    out.rows[static_cast<std::size_t>(i)] =
        evaluate_point(p.task, *p.f, p.iv, p.alpha, p.x, spec.cfg);
  }
  out.summary = summarize(out.rows);
  return out;
}

SweepSummary summarize(const std::vector<SweepRow>& rows) {
  SweepSummary s;
  s.total = rows.size();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const SweepRow& r = rows[i];
    if (r.errored()) {
      ++s.errored;
      continue;
    }
    if (r.pass) {
      ++s.passed;
    } else {
      ++s.failed;
    }
    if (is_identity_task(r.task)) {
      const double v = std::abs(r.residual_or_slack);
      if (!s.worst_residual || v > s.worst_residual->value) s.worst_residual = WorstCase{i, v};
    } else {
      const double v = r.residual_or_slack;
      if (!s.worst_slack || v < s.worst_slack->value) s.worst_slack = WorstCase{i, v};
    }
  }
  return s;
}

}  // namespace fracineq

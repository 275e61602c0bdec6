#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fracineq/corpus.hpp"
#include "fracineq/identities.hpp"
#include "fracineq/inequalities.hpp"

namespace fracineq {

enum class Task {
  // identities
  classic,
  lemma_frac,
  eq9,
  eq10,
  eq11,
  remark1,
  // inequalities
  ostrowski,
  cheng,
  dragomir,
  frac,
  remark2,
};

std::string_view task_name(Task t);
std::optional<Task> parse_task(std::string_view name);
bool is_identity_task(Task t);
bool task_uses_alpha(Task t);
const std::vector<Task>& all_tasks();

/// A verification grid. Rows are produced in the nested order
/// task, function, interval, alpha, x.
struct SweepSpec {
  std::vector<Task> tasks;
  std::vector<std::string> function_ids;
  std::vector<Interval> intervals;
  std::vector<double> alpha_grid;   // ignored by alpha-free tasks
  std::vector<double> x_fractions;  // x = a + fraction * (b - a), fraction in (0, 1)
  CheckConfig cfg;

  /// Throws DomainError / UnknownFunctionError on an invalid spec.
  void validate(const Registry& registry) const;

  /// All tasks, the seven default functions, [0,1] and [1,3],
  /// alpha in {1, 1.25, 1.5, 2, 2.5, 3}, nine interior x fractions.
  static SweepSpec default_grid();
};

struct SweepRow {
  Task task = Task::classic;
  std::string function_id;
  double a = 0.0;
  double b = 0.0;
  std::optional<double> alpha;  // empty for alpha-free tasks
  double x = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double residual_or_slack = 0.0;
  double scale_or_tightness = 0.0;
  bool pass = false;
  double err_estimate = 0.0;
  std::string error;  // non-empty marks a grid point that could not be evaluated

  bool errored() const { return !error.empty(); }
};

struct WorstCase {
  std::size_t row = 0;
  double value = 0.0;
};

struct SweepSummary {
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t errored = 0;
  std::optional<WorstCase> worst_residual;  // largest |residual| over identity rows
  std::optional<WorstCase> worst_slack;     // smallest slack over inequality rows
};

struct SweepResult {
  std::vector<SweepRow> rows;
  SweepSummary summary;
};

/// Evaluates one grid point; evaluation failures become an error-marked row.
SweepRow evaluate_point(Task task, const FunctionSpec& f, const Interval& iv,
                        std::optional<double> alpha, double x, const CheckConfig& cfg);

/// Number of rows run_sweep will produce.
std::size_t sweep_size(const SweepSpec& spec);

/// Parallel sweep (OpenMP when available). Each grid point writes into its
/// own pre-indexed slot, so the result equals run_sweep_serial exactly.
SweepResult run_sweep(const SweepSpec& spec, const Registry& registry = builtin_registry());

/// Single-threaded reference sweep.
SweepResult run_sweep_serial(const SweepSpec& spec,
                             const Registry& registry = builtin_registry());

SweepSummary summarize(const std::vector<SweepRow>& rows);

inline constexpr std::string_view kCsvHeader =
    "task,function,a,b,alpha,x,lhs,rhs,residual_or_slack,scale_or_tightness,pass,err_estimate";

/// CSV with kCsvHeader, '\n' line endings and 17 significant digits.
std::string emit_csv(const std::vector<SweepRow>& rows);

/// JSON document with top-level keys "spec", "rows" and "summary".
std::string emit_json(const SweepSpec& spec, const std::vector<SweepRow>& rows,
                      const SweepSummary& summary);

/// %.17g rendering used by the CSV writer; empty for NaN.
std::string format_number(double v);

}  // namespace fracineq

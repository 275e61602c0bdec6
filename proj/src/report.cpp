#include <cmath>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "fracineq/sweep.hpp"

namespace fracineq {

std::string format_number(double v) {
  if (std::isnan(v)) return {};
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string emit_csv(const std::vector<SweepRow>& rows) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const SweepRow& r : rows) {
    out += task_name(r.task);
    out += ',';
    out += r.function_id;
    for (double v : {r.a, r.b}) {
      out += ',';
      out += format_number(v);
    }
    out += ',';
    if (r.alpha) out += format_number(*r.alpha);
    out += ',';
    out += format_number(r.x);
    for (double v : {r.lhs, r.rhs, r.residual_or_slack, r.scale_or_tightness}) {
      out += ',';
      out += format_number(v);
    }
    out += ',';
    out += r.errored() ? "error" : (r.pass ? "true" : "false");
    out += ',';
    out += format_number(r.err_estimate);
    out += '\n';
  }
  return out;
}

namespace {

using nlohmann::ordered_json;

ordered_json number_or_null(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

ordered_json worst_json(const std::optional<WorstCase>& w, const std::vector<SweepRow>& rows) {
  if (!w) return nullptr;
  const SweepRow& r = rows[w->row];
  ordered_json j;
  j["row"] = w->row;
  j["task"] = task_name(r.task);
  j["function"] = r.function_id;
  j["a"] = r.a;
  j["b"] = r.b;
  j["alpha"] = r.alpha ? ordered_json(*r.alpha) : ordered_json(nullptr);
  j["x"] = r.x;
  j["value"] = number_or_null(w->value);
  return j;
}

}  // namespace

std::string emit_json(const SweepSpec& spec, const std::vector<SweepRow>& rows,
                      const SweepSummary& summary) {
  ordered_json doc;

  ordered_json js;
  ordered_json tasks = ordered_json::array();
  for (Task t : spec.tasks) tasks.push_back(task_name(t));
  js["tasks"] = tasks;
  js["functions"] = spec.function_ids;
  ordered_json ivs = ordered_json::array();
  for (const Interval& iv : spec.intervals) ivs.push_back({iv.a(), iv.b()});
  js["intervals"] = ivs;
  js["alpha_grid"] = spec.alpha_grid;
  js["x_fractions"] = spec.x_fractions;
  js["config"] = {
      {"abs_tol", spec.cfg.quad.abs_tol},
      {"rel_tol", spec.cfg.quad.rel_tol},
      {"max_subdivisions", spec.cfg.quad.max_subdivisions},
      {"endpoint_guard", spec.cfg.quad.endpoint_guard},
      {"rel_tol_identity", spec.cfg.rel_tol_identity},
      {"slack_rel_tol", spec.cfg.slack_rel_tol},
  };
  doc["spec"] = js;

  ordered_json jrows = ordered_json::array();
  for (const SweepRow& r : rows) {
    ordered_json j;
    j["task"] = task_name(r.task);
    j["function"] = r.function_id;
    j["a"] = r.a;
    j["b"] = r.b;
    j["alpha"] = r.alpha ? ordered_json(*r.alpha) : ordered_json(nullptr);
    j["x"] = r.x;
    j["lhs"] = number_or_null(r.lhs);
    j["rhs"] = number_or_null(r.rhs);
    j["residual_or_slack"] = number_or_null(r.residual_or_slack);
    j["scale_or_tightness"] = number_or_null(r.scale_or_tightness);
    j["pass"] = r.pass;
    j["err_estimate"] = number_or_null(r.err_estimate);
    j["error"] = r.errored() ? ordered_json(r.error) : ordered_json(nullptr);
    jrows.push_back(std::move(j));
  }
  doc["rows"] = std::move(jrows);

  doc["summary"] = {
      {"total", summary.total},
      {"passed", summary.passed},
      {"failed", summary.failed},
      {"errored", summary.errored},
      {"worst_case",
       {{"residual", worst_json(summary.worst_residual, rows)},
        {"slack", worst_json(summary.worst_slack, rows)}}},
  };
  return doc.dump(2) + "\n";
}

}  // namespace fracineq

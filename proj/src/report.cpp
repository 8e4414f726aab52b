#include "taycheck/report.hpp"

#include <cmath>
#include <cstdio>
#include <iomanip>
#include <sstream>

namespace taycheck {

namespace {

Json tool_json() {
  return Json{{"name", kToolName}, {"version", kToolVersion}};
}

Json problem_json(const ProblemSpec& spec, const ProblemInfo& info) {
  return Json{{"file", info.path},
              {"sha256", info.sha256},
              {"kind", spec.kind == ProblemKind::Pde ? "pde" : "dde"},
              {"space", spec.space},
              {"fields", spec.fields},
              {"params", spec.params}};
}

Json rational_list(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(rational_str(v));
  return out;
}

Json bindings_json(const Bindings& b) {
  Json out = Json::object();
  for (const auto& [name, value] : b) out[name] = rational_str(value);
  return out;
}

Json witness_json(const std::optional<Witness>& w) {
  if (!w) return nullptr;
  return Json{{"bindings", bindings_json(w->bindings)}, {"magnitude", real_str(w->magnitude, 20)}};
}

Json check_json(const ExprCheck& c) {
  return Json{{"field", c.field},
              {"expression", to_string(c.expr)},
              {"verdict",
               Json{{"state", to_string(c.verdict.state)},
                    {"symbolic", c.verdict.symbolic},
                    {"samples_used", c.verdict.samples_used},
                    {"poles_skipped", c.verdict.poles_skipped},
                    {"witness", witness_json(c.verdict.witness)}}},
              {"scan",
               Json{{"samples_evaluated", c.samples_evaluated},
                    {"poles_skipped", c.poles_skipped},
                    {"worst", witness_json(c.worst)}}}};
}

Json finite_or_str(double v) {
  if (std::isfinite(v)) return v;
  return v > 0 ? "inf" : "-inf";
}

// text helpers

std::string header_line(const Json& report) {
  const auto& tool = report.at("tool");
  std::ostringstream os;
  os << tool.at("name").get<std::string>() << " " << tool.at("version").get<std::string>() << " "
     << report.at("command").get<std::string>() << " "
     << report.at("problem").at("file").get<std::string>() << "\n";
  return os.str();
}

void render_witness(std::ostringstream& os, const char* label, const Json& w) {
  if (w.is_null()) return;
  os << "    " << label << ": ";
  bool first = true;
  for (const auto& [name, value] : w.at("bindings").items()) {
    if (!first) os << ", ";
    os << name << " = " << value.get<std::string>();
    first = false;
  }
  os << "  ->  " << w.at("magnitude").get<std::string>() << "\n";
}

void render_checks(std::ostringstream& os, const char* title, const Json& checks) {
  for (const auto& c : checks) {
    const auto& verdict = c.at("verdict");
    os << "  " << title << " " << c.at("field").get<std::string>() << ": "
       << verdict.at("state").get<std::string>()
       << (verdict.at("symbolic").get<bool>() ? " (symbolic)" : " (sampled)") << "\n";
    render_witness(os, "witness", verdict.at("witness"));
    const auto& scan = c.at("scan");
    render_witness(os, "worst sample", scan.at("worst"));
    os << "    evaluated " << scan.at("samples_evaluated").get<int>() << ", poles "
       << scan.at("poles_skipped").get<int>() << "\n";
  }
}

}  // namespace

Json solve_report(const ProblemSpec& spec, const ProblemInfo& info,
                  const std::map<std::string, TimeSeries>& series,
                  const ResidualOrderResult& residual) {
  Json fields = Json::array();
  for (const auto& name : spec.fields) {
    const TimeSeries& ts = series.at(name);
    Json coeffs = Json::array();
    for (const auto& c : ts.coeffs) coeffs.push_back(to_string(c));
    fields.push_back(Json{{"field", name}, {"coefficients", coeffs}});
  }
  Json samples = Json::array();
  for (const auto& [t, r] : residual.samples) samples.push_back(Json::array({t, r}));
  int order = series.empty() ? 0 : series.begin()->second.order();
  return Json{{"tool", tool_json()},
              {"command", "solve"},
              {"problem", problem_json(spec, info)},
              {"order", order},
              {"fields", fields},
              {"residual_order",
               Json{{"exact", residual.exact}, {"slope", residual.slope}, {"samples", samples}}}};
}

Json verify_report(const ProblemSpec& spec, const ProblemInfo& info, const SamplePlan& plan,
                   const ClaimReport& rep, const ScanResult* scan) {
  Json param_sets = Json::array();
  for (const auto& b : plan.param_sets) param_sets.push_back(bindings_json(b));

  Json equations = Json::array();
  for (const auto& c : rep.equations) equations.push_back(check_json(c));
  Json initial = Json::array();
  for (const auto& c : rep.initial_conditions) initial.push_back(check_json(c));

  Json out{{"tool", tool_json()},
           {"command", "verify"},
           {"problem", problem_json(spec, info)},
           {"claim", rep.claim},
           {"status", to_string(rep.status)},
           {"precision", rep.precision},
           {"seed", rep.seed},
           {"samples",
            Json{{"space", rational_list(plan.space)},
                 {"times", rational_list(plan.times)},
                 {"param_sets", param_sets}}},
           {"equations", equations},
           {"initial_conditions", initial}};

  if (scan) {
    Json rows = Json::array();
    for (const auto& row : scan->rows) {
      Json dev = Json::object();
      Json below = Json::object();
      Json probe = Json::object();
      for (const auto& [f, v] : row.ic_deviation) dev[f] = real_str(v, 20);
      for (const auto& [f, v] : row.ic_below) below[f] = v;
      for (const auto& [f, v] : row.probe) probe[f] = real_str(v, 20);
      rows.push_back(Json{{"value", rational_str(row.value)},
                          {"max_residual", real_str(row.max_residual, 20)},
                          {"residual_below", row.residual_below},
                          {"ic_deviation", dev},
                          {"ic_below", below},
                          {"probe", probe}});
    }
    Json changes = Json::array();
    for (const auto& [field, lo, hi] : scan->sign_changes)
      changes.push_back(
          Json{{"field", field}, {"between", Json::array({rational_str(lo), rational_str(hi)})}});
    out["parameter_scan"] =
        Json{{"symbol", scan->symbol}, {"rows", rows}, {"sign_changes", changes}};
  }
  return out;
}

Json compare_report(const ProblemSpec& spec, const ProblemInfo& info, int order, double tol,
                    const GridSolution& ref, const ValidityResult& window) {
  Json errors = Json::array();
  for (const auto& [t, e] : window.errors) errors.push_back(Json::array({t, e}));
  return Json{{"tool", tool_json()},
              {"command", "compare"},
              {"problem", problem_json(spec, info)},
              {"order", order},
              {"tol", finite_or_str(tol)},
              {"t_max", ref.times.empty() ? 0.0 : ref.times.back()},
              {"grid",
               Json{{"nodes", ref.space.size()},
                    {"h", ref.h},
                    {"dt", ref.dt},
                    {"trust_radius", ref.trust_radius},
                    {"boundary", ref.boundary}}},
              {"params", bindings_json(ref.params)},
              {"t_star", window.t_star},
              {"errors", errors}};
}

std::string dump_json(const Json& report) { return report.dump(2) + "\n"; }

std::string solve_text(const Json& report) {
  std::ostringstream os;
  os << header_line(report);
  os << "order " << report.at("order").get<int>() << "\n";
  for (const auto& f : report.at("fields")) {
    os << "\n" << f.at("field").get<std::string>() << ":\n";
    int j = 0;
    for (const auto& c : f.at("coefficients"))
      os << "  t^" << j++ << ": " << c.get<std::string>() << "\n";
  }
  const auto& ro = report.at("residual_order");
  if (ro.at("exact").get<bool>())
    os << "\nresidual: exact at every sampled time\n";
  else
    os << "\nresidual decay slope " << std::setprecision(4) << ro.at("slope").get<double>()
       << " over " << ro.at("samples").size() << " times\n";
  return os.str();
}

std::string verify_text(const Json& report) {
  std::ostringstream os;
  os << header_line(report);
  os << "claim " << report.at("claim").get<std::string>() << ": "
     << report.at("status").get<std::string>() << "\n";
  const auto& samples = report.at("samples");
  os << "precision " << report.at("precision").get<unsigned>() << " digits, seed "
     << report.at("seed").get<std::uint64_t>() << ", " << samples.at("space").size()
     << " space points x " << samples.at("times").size() << " times x "
     << samples.at("param_sets").size() << " parameter sets\n\n";
  render_checks(os, "equation", report.at("equations"));
  render_checks(os, "initial", report.at("initial_conditions"));

  if (report.contains("parameter_scan")) {
    const auto& scan = report.at("parameter_scan");
    os << "\nscan over " << scan.at("symbol").get<std::string>() << ":\n";
    for (const auto& row : scan.at("rows")) {
      os << "  " << scan.at("symbol").get<std::string>() << " = "
         << row.at("value").get<std::string>() << ": max residual "
         << row.at("max_residual").get<std::string>();
      for (const auto& [f, v] : row.at("ic_deviation").items()) {
        os << ", ic " << f << " " << v.get<std::string>();
        if (row.at("ic_below").at(f).get<bool>()) os << " (below threshold)";
      }
      os << "\n";
    }
    for (const auto& ch : scan.at("sign_changes"))
      os << "  deviation of " << ch.at("field").get<std::string>() << " changes sign between "
         << ch.at("between")[0].get<std::string>() << " and "
         << ch.at("between")[1].get<std::string>() << "\n";
  }
  os << "\nstatus: " << report.at("status").get<std::string>() << "\n";
  return os.str();
}

std::string compare_text(const Json& report) {
  std::ostringstream os;
  os << header_line(report);
  os << "order " << report.at("order").get<int>() << ", tol ";
  const auto& tol = report.at("tol");
  if (tol.is_string())
    os << tol.get<std::string>();
  else
    os << tol.get<double>();
  const auto& grid = report.at("grid");
  os << ", horizon " << report.at("t_max").get<double>() << "\n";
  os << "grid: " << grid.at("nodes").get<std::size_t>() << " nodes, h " << grid.at("h").get<double>()
     << ", dt " << grid.at("dt").get<double>() << ", trusted |space| <= "
     << grid.at("trust_radius").get<double>() << "\n";
  os << "t* = " << report.at("t_star").get<double>() << "\n\n";

  const auto& errors = report.at("errors");
  const std::size_t n = errors.size();
  const std::size_t stride = n > 25 ? (n + 24) / 25 : 1;
  os << "  t         max error\n";
  auto row = [&](std::size_t i) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "  %-9.6g %.3e\n", errors[i][0].get<double>(),
                  errors[i][1].get<double>());
    os << buf;
  };
  for (std::size_t i = 0; i < n; i += stride) row(i);
  if (n > 0 && (n - 1) % stride != 0) row(n - 1);
  return os.str();
}

}  // namespace taycheck

#include "taycheck/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <iomanip>
#include <sstream>

#include "taycheck/errors.hpp"

namespace taycheck {

namespace {

using FieldGrids = std::map<std::string, std::vector<double>>;

struct GridCtx {
  const std::string* space = nullptr;
  const std::vector<double>* coords = nullptr;
  double h = 1.0;
  bool lattice = false;
  const FieldGrids* fields = nullptr;
  const std::map<std::string, double>* params = nullptr;
};

std::vector<double> eval_grid(const Expr& e, const GridCtx& ctx) {
  const std::size_t n = ctx.coords->size();
  switch (e.kind()) {
    case Kind::Const:
      return std::vector<double>(n, e.value().convert_to<double>());
    case Kind::Symbol: {
      auto f = ctx.fields->find(e.name());
      if (f != ctx.fields->end()) return f->second;
      if (e.name() == *ctx.space) return *ctx.coords;
      auto p = ctx.params->find(e.name());
      if (p != ctx.params->end()) return std::vector<double>(n, p->second);
      throw UnboundSymbol("no grid value for symbol " + e.name());
    }
    case Kind::Exp: {
      auto v = eval_grid(e.child(0), ctx);
      for (auto& x : v) x = std::exp(x);
      return v;
    }
    case Kind::Tanh: {
      auto v = eval_grid(e.child(0), ctx);
      for (auto& x : v) x = std::tanh(x);
      return v;
    }
    case Kind::Sech: {
      auto v = eval_grid(e.child(0), ctx);
      for (auto& x : v) x = 1.0 / std::cosh(x);
      return v;
    }
    case Kind::Cosh: {
      auto v = eval_grid(e.child(0), ctx);
      for (auto& x : v) x = std::cosh(x);
      return v;
    }
    case Kind::Sinh: {
      auto v = eval_grid(e.child(0), ctx);
      for (auto& x : v) x = std::sinh(x);
      return v;
    }
    case Kind::IntPow: {
      auto v = eval_grid(e.child(0), ctx);
      const long long k = e.exponent();
      for (auto& x : v) {
        if (k < 0 && x == 0.0) throw PoleEvaluation("zero raised to a negative power on the grid");
        x = std::pow(x, static_cast<double>(k));
      }
      return v;
    }
    case Kind::Product: {
      std::vector<double> acc(n, 1.0);
      for (const auto& kid : e.children()) {
        auto v = eval_grid(kid, ctx);
        for (std::size_t i = 0; i < n; ++i) acc[i] *= v[i];
      }
      return acc;
    }
    case Kind::Sum: {
      std::vector<double> acc(n, 0.0);
      for (const auto& kid : e.children()) {
        auto v = eval_grid(kid, ctx);
        for (std::size_t i = 0; i < n; ++i) acc[i] += v[i];
      }
      return acc;
    }
    case Kind::Dx: {
      if (ctx.lattice) throw UnresolvedOperator("dx on a lattice grid");
      auto v = eval_grid(e.child(0), ctx);
      std::vector<double> out(n, 0.0);
      for (std::size_t i = 1; i + 1 < n; ++i) out[i] = (v[i + 1] - v[i - 1]) / (2.0 * ctx.h);
      return out;
    }
    case Kind::Dxx: {
      if (ctx.lattice) throw UnresolvedOperator("dxx on a lattice grid");
      auto v = eval_grid(e.child(0), ctx);
      std::vector<double> out(n, 0.0);
      for (std::size_t i = 1; i + 1 < n; ++i)
        out[i] = (v[i + 1] - 2.0 * v[i] + v[i - 1]) / (ctx.h * ctx.h);
      return out;
    }
    case Kind::Shift: {
      if (!ctx.lattice) throw UnresolvedOperator("shift on a continuous grid");
      auto v = eval_grid(e.child(0), ctx);
      std::vector<double> out(n);
      const long long o = e.offset();
      for (std::size_t i = 0; i < n; ++i) {
        long long j = static_cast<long long>(i) + o;
        j = std::clamp<long long>(j, 0, static_cast<long long>(n) - 1);
        out[i] = v[static_cast<std::size_t>(j)];
      }
      return out;
    }
  }
  throw EngineError("unreachable expression kind in grid evaluation");
}

// Time derivative of the full state; edge nodes are pinned by zeroing their
// derivative in every stage.
FieldGrids state_derivative(const ProblemSpec& spec, const FieldGrids& state, GridCtx ctx) {
  ctx.fields = &state;
  FieldGrids out;
  for (const auto& f : spec.fields) {
    auto v = eval_grid(spec.rhs.at(f), ctx);
    if (!v.empty()) {
      v.front() = 0.0;
      v.back() = 0.0;
    }
    out.emplace(f, std::move(v));
  }
  return out;
}

FieldGrids state_axpy(const FieldGrids& y, const FieldGrids& d, double a) {
  FieldGrids out = y;
  for (auto& [f, v] : out) {
    const auto& dv = d.at(f);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += a * dv[i];
  }
  return out;
}

void check_finite(const FieldGrids& state, double t) {
  for (const auto& [f, v] : state)
    for (double x : v)
      if (!std::isfinite(x) || std::fabs(x) > 1e10) {
        std::ostringstream os;
        os << "field " << f << " left the representable range near t = " << t;
        throw BlowUp(os.str());
      }
}

std::map<std::string, double> lower_params(const ProblemSpec& spec, const Bindings& params) {
  for (const auto& p : spec.params)
    if (!params.count(p)) throw UnboundSymbol("no value for parameter " + p);
  std::map<std::string, double> out;
  for (const auto& [name, q] : params) out.emplace(name, q.convert_to<double>());
  return out;
}

GridSolution integrate_core(const ProblemSpec& spec, const Bindings& params, FieldGrids initial,
                            std::vector<double> coords, std::vector<Rational> coords_exact,
                            double h, double dt_req, double t_end, int max_snapshots,
                            double trust, bool lattice, bool diffusive_limit) {
  if (max_snapshots < 2) throw ValidationError("need room for at least two snapshots");
  if (!(dt_req > 0.0)) throw ValidationError("time step must be positive");
  if (t_end < 0.0) throw ValidationError("integration horizon must be nonnegative");
  for (const auto& f : spec.fields) {
    auto it = initial.find(f);
    if (it == initial.end()) throw ValidationError("no initial values for field " + f);
    if (it->second.size() != coords.size())
      throw ValidationError("initial values for field " + f + " do not match the grid");
  }
  if (diffusive_limit && dt_req > h * h / 4.0 * (1.0 + 1e-12)) {
    std::ostringstream os;
    os << "time step " << dt_req << " exceeds the diffusive bound h^2/4 = " << h * h / 4.0;
    throw StabilityViolation(os.str());
  }

  const std::size_t steps =
      t_end == 0.0 ? 0 : std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(t_end / dt_req - 1e-12)));
  const double dt = steps == 0 ? dt_req : t_end / static_cast<double>(steps);
  const std::size_t cap = static_cast<std::size_t>(max_snapshots);
  const std::size_t stride = steps == 0 ? 1 : std::max<std::size_t>(1, (steps + cap - 2) / (cap - 1));

  GridCtx ctx;
  ctx.space = &spec.space;
  ctx.coords = &coords;
  ctx.h = h;
  ctx.lattice = lattice;
  auto dparams = lower_params(spec, params);
  ctx.params = &dparams;

  GridSolution sol;
  sol.kind = spec.kind;
  sol.h = h;
  sol.dt = dt;
  sol.trust_radius = trust;
  sol.params = params;

  check_finite(initial, 0.0);
  sol.times.push_back(0.0);
  for (const auto& f : spec.fields) sol.values[f].push_back(initial.at(f));

  FieldGrids y = std::move(initial);
  for (std::size_t s = 1; s <= steps; ++s) {
    auto k1 = state_derivative(spec, y, ctx);
    auto k2 = state_derivative(spec, state_axpy(y, k1, dt / 2.0), ctx);
    auto k3 = state_derivative(spec, state_axpy(y, k2, dt / 2.0), ctx);
    auto k4 = state_derivative(spec, state_axpy(y, k3, dt), ctx);
    for (auto& [f, v] : y) {
      const auto& a = k1.at(f);
      const auto& b = k2.at(f);
      const auto& c = k3.at(f);
      const auto& d = k4.at(f);
      for (std::size_t i = 0; i < v.size(); ++i)
        v[i] += dt / 6.0 * (a[i] + 2.0 * b[i] + 2.0 * c[i] + d[i]);
    }
    const double t = s == steps ? t_end : static_cast<double>(s) * dt;
    check_finite(y, t);
    if (s % stride == 0 || s == steps) {
      sol.times.push_back(t);
      for (const auto& f : spec.fields) sol.values[f].push_back(y.at(f));
    }
  }

  sol.space = std::move(coords);
  sol.space_exact = std::move(coords_exact);
  return sol;
}

FieldGrids sample_initial(const ProblemSpec& spec, const Bindings& params,
                          const std::vector<Rational>& coords_exact) {
  FieldGrids out;
  Bindings b = params;
  for (const auto& f : spec.fields) {
    std::vector<double> v;
    v.reserve(coords_exact.size());
    for (const auto& x : coords_exact) {
      b[spec.space] = x;
      v.push_back(eval_double(spec.init.at(f), b));
    }
    out.emplace(f, std::move(v));
  }
  return out;
}

struct MolGrid {
  std::vector<double> coords;
  std::vector<Rational> exact;
  double h;
  double trust;
};

MolGrid build_mol_grid(const ProblemSpec& spec, const MolOptions& opt) {
  if (spec.kind != ProblemKind::Pde)
    throw ValidationError("the method of lines needs a continuous problem");
  if (opt.points < 16) throw ValidationError("need at least 16 grid intervals");
  if (!(opt.half_width > 0)) throw ValidationError("domain half width must be positive");
  MolGrid g;
  const Rational step = Rational(2) * opt.half_width / opt.points;
  g.exact.reserve(opt.points + 1);
  g.coords.reserve(opt.points + 1);
  for (int i = 0; i <= opt.points; ++i) {
    Rational x = -opt.half_width + step * i;
    g.coords.push_back(x.convert_to<double>());
    g.exact.push_back(std::move(x));
  }
  const double L = opt.half_width.convert_to<double>();
  g.h = 2.0 * L / opt.points;
  g.trust = L - std::max(1.0, L / 4.0);
  return g;
}

struct DdeGrid {
  std::vector<double> coords;
  std::vector<Rational> exact;
  double trust;
};

DdeGrid build_dde_grid(const ProblemSpec& spec, const DdeOptions& opt) {
  if (spec.kind != ProblemKind::Dde)
    throw ValidationError("the lattice integrator needs a lattice problem");
  if (opt.window < 8) throw ValidationError("need a lattice window of at least 8 sites each way");
  DdeGrid g;
  g.exact.reserve(2 * opt.window + 1);
  g.coords.reserve(2 * opt.window + 1);
  for (int i = -opt.window; i <= opt.window; ++i) {
    g.coords.push_back(static_cast<double>(i));
    g.exact.push_back(Rational(i));
  }
  g.trust = static_cast<double>(opt.window - 2);
  return g;
}

double mol_dt(const MolGrid& g, const MolOptions& opt) {
  return opt.dt > 0.0 ? opt.dt : g.h * g.h / 8.0;
}

}  // namespace

GridSolution mol_integrate(const ProblemSpec& spec, const Bindings& params, const MolOptions& opt) {
  auto g = build_mol_grid(spec, opt);
  auto init = sample_initial(spec, params, g.exact);
  return integrate_core(spec, params, std::move(init), std::move(g.coords), std::move(g.exact),
                        g.h, mol_dt(g, opt), opt.t_end, opt.max_snapshots, g.trust, false, true);
}

GridSolution mol_integrate_raw(const ProblemSpec& spec, const Bindings& params,
                               const std::map<std::string, std::vector<double>>& initial,
                               const MolOptions& opt) {
  auto g = build_mol_grid(spec, opt);
  return integrate_core(spec, params, initial, std::move(g.coords), std::move(g.exact), g.h,
                        mol_dt(g, opt), opt.t_end, opt.max_snapshots, g.trust, false, true);
}

GridSolution dde_integrate(const ProblemSpec& spec, const Bindings& params, const DdeOptions& opt) {
  auto g = build_dde_grid(spec, opt);
  auto init = sample_initial(spec, params, g.exact);
  return integrate_core(spec, params, std::move(init), std::move(g.coords), std::move(g.exact),
                        1.0, opt.dt, opt.t_end, opt.max_snapshots, g.trust, true, false);
}

GridSolution dde_integrate_raw(const ProblemSpec& spec, const Bindings& params,
                               const std::map<std::string, std::vector<double>>& initial,
                               const DdeOptions& opt) {
  auto g = build_dde_grid(spec, opt);
  return integrate_core(spec, params, initial, std::move(g.coords), std::move(g.exact), 1.0,
                        opt.dt, opt.t_end, opt.max_snapshots, g.trust, true, false);
}

ValidityResult validity_window(const std::map<std::string, TimeSeries>& series,
                               const GridSolution& ref, double tol, const Bindings& params) {
  std::vector<std::size_t> trusted;
  for (std::size_t i = 0; i < ref.space.size(); ++i)
    if (std::fabs(ref.space[i]) <= ref.trust_radius + 1e-9) trusted.push_back(i);
  if (trusted.empty()) throw ValidationError("the trust region contains no grid nodes");

  // field -> [coefficient][trusted node], evaluated once at exact coordinates
  std::map<std::string, std::vector<std::vector<double>>> tables;
  for (const auto& [f, grids] : ref.values) {
    (void)grids;
    auto it = series.find(f);
    if (it == series.end()) throw ValidationError("no series for field " + f);
    const TimeSeries& ts = it->second;
    Bindings b = params;
    std::vector<std::vector<double>> table(ts.coeffs.size(), std::vector<double>(trusted.size()));
    for (std::size_t j = 0; j < ts.coeffs.size(); ++j)
      for (std::size_t k = 0; k < trusted.size(); ++k) {
        b[ts.space] = ref.space_exact[trusted[k]];
        table[j][k] = eval_double(ts.coeffs[j], b);
      }
    tables.emplace(f, std::move(table));
  }

  ValidityResult res;
  bool crossed = false;
  for (std::size_t si = 0; si < ref.times.size(); ++si) {
    const double t = ref.times[si];
    double err = 0.0;
    for (const auto& [f, grids] : ref.values) {
      const auto& table = tables.at(f);
      for (std::size_t k = 0; k < trusted.size(); ++k) {
        double s = 0.0;
        for (std::size_t j = table.size(); j-- > 0;) s = s * t + table[j][k];
        err = std::max(err, std::fabs(s - grids[si][trusted[k]]));
      }
    }
    res.errors.emplace_back(t, err);
    if (!crossed) {
      if (err <= tol)
        res.t_star = t;
      else
        crossed = true;
    }
  }
  return res;
}

std::string grid_csv(const GridSolution& sol) {
  std::ostringstream os;
  os << std::setprecision(17);
  os << "t,space,field,value\n";
  for (std::size_t si = 0; si < sol.times.size(); ++si)
    for (const auto& [f, grids] : sol.values)
      for (std::size_t i = 0; i < sol.space.size(); ++i)
        os << sol.times[si] << ',' << sol.space[i] << ',' << f << ',' << grids[si][i] << '\n';
  return os.str();
}

}  // namespace taycheck

#include "fockcat/sweep.hpp"

#include <cmath>
#include <sstream>

#include "fockcat/entanglement.hpp"
#include "fockcat/parallel.hpp"
#include "fockcat/subtraction.hpp"

namespace fockcat {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ParameterError(what);
}

bool in_unit(double x) { return x >= 0.0 && x <= 1.0; }

SweepRecord make_record(const ScenarioConfig& config, double alpha, double beta) {
  SweepRecord rec;
  rec.alpha = alpha;
  rec.beta = config.scheme == Scheme::both ? beta : 0.0;
  rec.lambda = config.lambda;
  rec.R = config.R;
  rec.eta = config.eta;
  return rec;
}

void set_tail(SweepRecord& rec, double tail) {
  rec.tail_weight = tail;
  rec.flagged = tail > kFlagTailWeight;
}

}  // namespace

std::vector<double> Grid::values() const {
  if (count < 2) throw ParameterError("grid needs at least two points");
  std::vector<double> v(count);
  const int last = count - 1;
  for (int i = 0; i < count; ++i) v[i] = (min * (last - i) + max * i) / last;
  return v;
}

void ScenarioConfig::validate() const {
  require(lambda >= 0.0 && lambda < 1.0, "lambda must lie in [0, 1)");
  require(in_unit(R), "R must lie in [0, 1]");
  require(in_unit(R_S), "Rs must lie in [0, 1]");
  require(in_unit(eta), "eta must lie in [0, 1]");
  require(n_max >= 2, "n_max must be at least 2");
  require(k_max >= 0, "k_max must be non-negative (0 selects n_max)");
  require(alpha_grid.count >= 2 && beta_grid.count >= 2, "grid counts must be at least 2");
  require(coarse_points >= 3, "optimizer needs at least 3 coarse points");
  require(tolerance > 0.0, "optimizer tolerance must be positive");
  require(alpha_hi > 0.0, "alpha_hi must be positive");
}

SweepRecord evaluate_point(const ScenarioConfig& config, double alpha, double beta) {
  config.validate();
  const PureTwoMode input =
      split_smsv(SqueezeParam(config.lambda), SplitterParam::from_reflectance(config.R), config.n_max);
  SweepRecord rec = make_record(config, alpha, beta);

  if (config.model == Model::ideal) {
    const PureTwoMode out = config.scheme == Scheme::single ? filter_single_ideal(input, alpha)
                                                            : filter_double_ideal(input, alpha, beta);
    rec.E = entropy_of_entanglement(out).value;
    const TruncationReport tr = truncation_report(out);
    set_tail(rec, tr.total > 0.0 ? tr.tail_weight / tr.total : 0.0);
    return rec;
  }

  const SubtractionParams params =
      SubtractionParams::symmetric(config.R_S, config.eta, config.effective_k_max(), alpha, beta);
  const BranchEnsemble ens =
      config.scheme == Scheme::single ? mixed_output_single(input, params) : mixed_output_double(input, params);
  rec.P = ens.success_prob;
  double tail = 0.0;
  for (const Branch& b : ens.branches) tail += b.herald_weight * truncation_report(b.state).tail_weight;
  set_tail(rec, ens.success_prob > 0.0 ? tail / ens.success_prob : 0.0);
  rec.E = ens.success_prob > 0.0 ? log_negativity(density_from_ensemble(ens)).value : 0.0;
  return rec;
}

std::vector<SweepRecord> sweep_single_alpha(const ScenarioConfig& config) {
  require(config.scheme == Scheme::single, "sweep_single_alpha needs the single scheme");
  config.validate();
  const std::vector<double> alphas = config.alpha_grid.values();
  return parallel_map(alphas.size(), [&](std::size_t i) { return evaluate_point(config, alphas[i]); });
}

std::vector<std::vector<SweepRecord>> sweep_double_grid(const ScenarioConfig& config) {
  require(config.scheme == Scheme::both, "sweep_double_grid needs the double scheme");
  config.validate();
  const std::vector<double> alphas = config.alpha_grid.values();
  const std::vector<double> betas = config.beta_grid.values();
  const std::size_t nb = betas.size();
  auto flat = parallel_map(alphas.size() * nb,
                           [&](std::size_t i) { return evaluate_point(config, alphas[i / nb], betas[i % nb]); });
  std::vector<std::vector<SweepRecord>> grid(alphas.size());
  for (std::size_t i = 0; i < alphas.size(); ++i)
    grid[i].assign(flat.begin() + static_cast<std::ptrdiff_t>(i * nb),
                   flat.begin() + static_cast<std::ptrdiff_t>((i + 1) * nb));
  return grid;
}

CutResult hyperbola_cut(SqueezeParam squeeze, SplitterParam splitter, const std::vector<double>& alpha_grid,
                        int n_max) {
  ScenarioConfig config;
  config.model = Model::ideal;
  config.scheme = Scheme::both;
  config.lambda = squeeze.lambda();
  config.R = splitter.R();
  config.n_max = n_max;
  const double product = squeeze.lambda() * splitter.r() * splitter.t();

  CutResult cut;
  std::vector<double> used;
  for (double a : alpha_grid) {
    if (a == 0.0) {
      cut.diagnostics.emplace_back("alpha = 0 has no reciprocal displacement; point skipped");
      continue;
    }
    used.push_back(a);
  }
  cut.records = parallel_map(used.size(), [&](std::size_t i) {
    SweepRecord rec = evaluate_point(config, used[i], -product / used[i]);
    rec.R = splitter.R();
    return rec;
  });
  return cut;
}

std::vector<SweepRecord> qutrit_entropy_vs_R(const std::vector<double>& R_grid) {
  std::vector<SweepRecord> out;
  out.reserve(R_grid.size());
  for (double R : R_grid) {
    SweepRecord rec;
    rec.R = R;
    rec.lambda = 0.0;
    rec.E = entropy_of_entanglement(qutrit_state(SplitterParam::from_reflectance(R))).value;
    out.push_back(rec);
  }
  return out;
}

std::vector<SweepRecord> diagonal_cut(const ScenarioConfig& config, const std::vector<double>& alpha_grid) {
  ScenarioConfig c = config;
  c.model = Model::realistic;
  c.scheme = Scheme::both;
  c.validate();
  return parallel_map(alpha_grid.size(), [&](std::size_t i) { return evaluate_point(c, alpha_grid[i], -alpha_grid[i]); });
}

ScalarMaximum maximize_scalar(const std::function<double(double)>& f, double lo, double hi, int coarse_points,
                              double tol) {
  require(hi > lo, "maximize_scalar: empty interval");
  require(coarse_points >= 3, "maximize_scalar: need at least 3 coarse points");
  require(tol > 0.0, "maximize_scalar: tolerance must be positive");
  const std::vector<double> xs = Grid{lo, hi, coarse_points}.values();
  const std::vector<double> ys = parallel_map(xs.size(), [&](std::size_t i) { return f(xs[i]); });

  ScalarMaximum res;
  res.evaluations = coarse_points;
  std::size_t best = 0;
  for (std::size_t i = 1; i < ys.size(); ++i)
    if (ys[i] > ys[best]) best = i;
  res.at_boundary = best == 0 || best + 1 == xs.size();
  res.x = xs[best];
  res.value = ys[best];

  const std::size_t i_lo = best == 0 ? 0 : best - 1;
  const std::size_t i_hi = std::min(best + 1, xs.size() - 1);
  res.bracket_lo = xs[i_lo];
  res.bracket_hi = xs[i_hi];
  res.value_lo = ys[i_lo];
  res.value_hi = ys[i_hi];

  auto consider = [&](double x, double y) {
    if (y > res.value) {
      res.x = x;
      res.value = y;
    }
  };

  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = res.bracket_lo;
  double b = res.bracket_hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  res.evaluations += 2;
  consider(c, fc);
  consider(d, fd);
  while (b - a > tol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
      consider(c, fc);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
      consider(d, fd);
    }
    ++res.evaluations;
  }
  return res;
}

DiagonalOptimum optimize_diagonal(const ScenarioConfig& config) {
  ScenarioConfig c = config;
  c.model = Model::realistic;
  c.scheme = Scheme::both;
  c.validate();
  DiagonalOptimum opt;
  opt.search = maximize_scalar([&](double a) { return evaluate_point(c, a, -a).E; }, 0.0, c.alpha_hi,
                               c.coarse_points, c.tolerance);
  opt.alpha_opt = opt.search.x;
  opt.at_boundary = opt.search.at_boundary;
  const SweepRecord at = evaluate_point(c, opt.alpha_opt, -opt.alpha_opt);
  opt.E_N = at.E;
  opt.P2 = at.P.value_or(0.0);
  opt.tail_weight = at.tail_weight;
  return opt;
}

std::vector<SweepRecord> curves_vs_lambda(const ScenarioConfig& config, const std::vector<double>& lambda_grid,
                                          const std::vector<double>& etas) {
  config.validate();
  const std::size_t nl = lambda_grid.size();
  return parallel_map(etas.size() * nl, [&](std::size_t i) {
    ScenarioConfig c = config;
    c.eta = etas[i / nl];
    c.lambda = lambda_grid[i % nl];
    if (c.scheme == Scheme::single) return evaluate_point(c, 0.0);
    const DiagonalOptimum opt = optimize_diagonal(c);
    return evaluate_point(c, opt.alpha_opt, -opt.alpha_opt);
  });
}

ReflectanceOptimum optimize_input_reflectance(const ScenarioConfig& config, double R_lo, double R_hi) {
  ScenarioConfig c = config;
  c.scheme = Scheme::single;
  c.validate();
  require(R_lo >= 0.0 && R_hi <= 1.0 && R_lo < R_hi, "reflectance bracket must lie inside [0, 1]");
  auto value_at = [&](double R) {
    ScenarioConfig point = c;
    point.R = R;
    return evaluate_point(point, 0.0).E;
  };
  ReflectanceOptimum opt;
  opt.search = maximize_scalar(value_at, R_lo, R_hi, c.coarse_points, c.tolerance);
  opt.R_opt = opt.search.x;
  opt.E = opt.search.value;
  opt.E_balanced = value_at(0.5);
  return opt;
}

}  // namespace fockcat

#include "fockcat/cli.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fockcat/entanglement.hpp"
#include "fockcat/parallel.hpp"
#include "fockcat/states.hpp"
#include "fockcat/subtraction.hpp"
#include "fockcat/sweep.hpp"

#ifndef FOCKCAT_VERSION
#define FOCKCAT_VERSION "0.0.0"
#endif

namespace fockcat::cli {

namespace {

const std::vector<double> kFigureEtas = {1.0, 0.5, 0.1};

std::string join(const std::vector<double>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ',';
    s += format_number(xs[i]);
  }
  return s;
}

// Flags a figure accepts; anything else is a validation error.
struct Accepts {
  bool lambda = false, R = false, Rs = false, eta = false, kmax = false;
};

void check_overrides(const std::string& name, const FigureOverrides& o, Accepts a) {
  auto reject = [&](bool given, bool ok, const char* flag) {
    if (given && !ok) throw ParameterError(name + " does not take " + flag);
  };
  reject(!o.lambda.empty(), a.lambda, "--lambda");
  reject(!o.R.empty(), a.R, "--R");
  reject(o.Rs.has_value(), a.Rs, "--Rs");
  reject(!o.eta.empty(), a.eta, "--eta");
  reject(o.k_max.has_value(), a.kmax, "--kmax");
}

double scalar(const std::vector<double>& values, double fallback, const char* flag) {
  if (values.empty()) return fallback;
  if (values.size() > 1) throw ParameterError(std::string(flag) + " takes a single value for this figure");
  return values.front();
}

ScenarioConfig base_config(const FigureOverrides& o) {
  ScenarioConfig c;
  c.n_max = o.n_max.value_or(10);
  c.k_max = o.k_max.value_or(0);
  c.R_S = o.Rs.value_or(0.1);
  return c;
}

void note_record(FigureData& fig, const SweepRecord& rec) {
  fig.max_tail_weight = std::max(fig.max_tail_weight, rec.tail_weight);
  if (rec.flagged) ++fig.flagged_records;
}

void common_parameters(FigureData& fig, const ScenarioConfig& c) {
  fig.parameters["n_max"] = std::to_string(c.n_max);
  fig.parameters["k_max"] = std::to_string(c.effective_k_max());
}

FigureData figure2(const FigureOverrides& o) {
  check_overrides("fig2", o, {.lambda = true, .R = true});
  FigureData fig;
  ScenarioConfig c = base_config(o);
  c.model = Model::ideal;
  c.scheme = Scheme::single;
  c.lambda = scalar(o.lambda, 0.01, "--lambda");
  c.alpha_grid = {-0.2, 0.2, 81};
  const std::vector<double> Rs = o.R.empty() ? std::vector<double>{0.5, 1.0 / 3.0} : o.R;
  fig.table.columns = {"R", "alpha", "E_S", "tail_weight"};
  for (double R : Rs) {
    c.R = R;
    for (const SweepRecord& rec : sweep_single_alpha(c)) {
      fig.table.add_row({format_number(R), format_number(rec.alpha), format_number(rec.E),
                         format_number(rec.tail_weight)});
      note_record(fig, rec);
    }
  }
  fig.parameters = {{"lambda", format_number(c.lambda)}, {"R", join(Rs)}, {"alpha_grid", "-0.2:0.2:81"}};
  common_parameters(fig, c);
  return fig;
}

FigureData figure3(const FigureOverrides& o) {
  check_overrides("fig3", o, {.lambda = true, .R = true});
  FigureData fig;
  ScenarioConfig c = base_config(o);
  c.model = Model::ideal;
  c.scheme = Scheme::both;
  c.lambda = scalar(o.lambda, 0.01, "--lambda");
  c.R = scalar(o.R, 0.5, "--R");
  c.alpha_grid = {-0.2, 0.2, 81};
  c.beta_grid = {-0.2, 0.2, 81};
  fig.table.columns = {"alpha", "beta", "E_S", "tail_weight"};
  for (const auto& row : sweep_double_grid(c)) {
    for (const SweepRecord& rec : row) {
      fig.table.add_row({format_number(rec.alpha), format_number(rec.beta), format_number(rec.E),
                         format_number(rec.tail_weight)});
      note_record(fig, rec);
    }
  }
  fig.parameters = {{"lambda", format_number(c.lambda)},
                    {"R", format_number(c.R)},
                    {"alpha_grid", "-0.2:0.2:81"},
                    {"beta_grid", "-0.2:0.2:81"}};
  common_parameters(fig, c);
  return fig;
}

FigureData figure4a(const FigureOverrides& o) {
  check_overrides("fig4a", o, {.lambda = true, .R = true});
  FigureData fig;
  const int n_max = o.n_max.value_or(10);
  const SqueezeParam squeeze(scalar(o.lambda, 0.01, "--lambda"));
  const SplitterParam splitter = SplitterParam::from_reflectance(scalar(o.R, 0.5, "--R"));

  // 0.001 steps on [-0.2, 0.2] plus the two qutrit peaks at +-sqrt(lambda) t.
  std::vector<double> alphas = Grid{-0.2, 0.2, 401}.values();
  const double peak = std::sqrt(squeeze.lambda()) * splitter.t();
  alphas.push_back(peak);
  alphas.push_back(-peak);
  std::sort(alphas.begin(), alphas.end());
  alphas.erase(std::unique(alphas.begin(), alphas.end()), alphas.end());

  const CutResult cut = hyperbola_cut(squeeze, splitter, alphas, n_max);
  fig.table.columns = {"alpha", "beta", "E_S", "tail_weight"};
  for (const SweepRecord& rec : cut.records) {
    fig.table.add_row({format_number(rec.alpha), format_number(rec.beta), format_number(rec.E),
                       format_number(rec.tail_weight)});
    note_record(fig, rec);
  }
  fig.diagnostics = cut.diagnostics;
  fig.parameters = {{"lambda", format_number(squeeze.lambda())},
                    {"R", format_number(splitter.R())},
                    {"alpha_grid", "-0.2:0.2:401 + peaks"},
                    {"n_max", std::to_string(n_max)}};
  return fig;
}

FigureData figure4b(const FigureOverrides& o) {
  check_overrides("fig4b", o, {});
  FigureData fig;
  fig.table.columns = {"R", "E_S"};
  for (const SweepRecord& rec : qutrit_entropy_vs_R(Grid{0.01, 0.99, 99}.values()))
    fig.table.add_row({format_number(rec.R), format_number(rec.E)});
  fig.parameters = {{"R_grid", "0.01:0.99:99"}};
  return fig;
}

FigureData figure5(const FigureOverrides& o) {
  check_overrides("fig5", o, {.lambda = true, .R = true, .Rs = true, .eta = true, .kmax = true});
  FigureData fig;
  ScenarioConfig c = base_config(o);
  c.model = Model::realistic;
  c.scheme = Scheme::single;
  c.R = scalar(o.R, 0.5, "--R");
  const double panel_a_lambda = scalar(o.lambda, 0.2, "--lambda");
  const std::vector<double> etas = o.eta.empty() ? kFigureEtas : o.eta;
  const std::vector<double> lambdas = Grid{0.01, 0.4, 40}.values();

  fig.table.columns = {"panel", "eta", "lambda", "alpha", "E_N", "P1", "tail_weight"};
  auto emit = [&](const char* panel, const SweepRecord& rec) {
    fig.table.add_row({panel, format_number(rec.eta), format_number(rec.lambda), format_number(rec.alpha),
                       format_number(rec.E), format_number(rec.P.value_or(0.0)), format_number(rec.tail_weight)});
    note_record(fig, rec);
  };
  for (double eta : etas) {
    ScenarioConfig a = c;
    a.eta = eta;
    a.lambda = panel_a_lambda;
    a.alpha_grid = {-0.5, 0.5, 41};
    for (const SweepRecord& rec : sweep_single_alpha(a)) emit("a", rec);
  }
  for (const SweepRecord& rec : curves_vs_lambda(c, lambdas, etas)) emit("bc", rec);

  fig.parameters = {{"lambda_panel_a", format_number(panel_a_lambda)},
                    {"R", format_number(c.R)},
                    {"Rs", format_number(c.R_S)},
                    {"eta", join(etas)},
                    {"alpha_grid", "-0.5:0.5:41"},
                    {"lambda_grid", "0.01:0.4:40"}};
  common_parameters(fig, c);
  return fig;
}

FigureData figure6(const FigureOverrides& o) {
  check_overrides("fig6", o, {.lambda = true, .R = true, .Rs = true, .eta = true, .kmax = true});
  FigureData fig;
  ScenarioConfig c = base_config(o);
  c.model = Model::realistic;
  c.scheme = Scheme::both;
  c.lambda = scalar(o.lambda, 0.2, "--lambda");
  c.R = scalar(o.R, 0.5, "--R");
  c.alpha_grid = {-0.8, 0.8, 33};
  c.beta_grid = {-0.8, 0.8, 33};
  const std::vector<double> etas = o.eta.empty() ? std::vector<double>{1.0} : o.eta;

  fig.table.columns = {"panel", "eta", "alpha", "beta", "E_N", "P2", "tail_weight"};
  auto emit = [&](const char* panel, const SweepRecord& rec) {
    fig.table.add_row({panel, format_number(rec.eta), format_number(rec.alpha), format_number(rec.beta),
                       format_number(rec.E), format_number(rec.P.value_or(0.0)), format_number(rec.tail_weight)});
    note_record(fig, rec);
  };
  for (double eta : etas) {
    ScenarioConfig e = c;
    e.eta = eta;
    for (const auto& row : sweep_double_grid(e))
      for (const SweepRecord& rec : row) emit("a", rec);
    for (const SweepRecord& rec : diagonal_cut(e, Grid{0.0, 1.0, 51}.values())) emit("b", rec);
  }
  fig.parameters = {{"lambda", format_number(c.lambda)},
                    {"R", format_number(c.R)},
                    {"Rs", format_number(c.R_S)},
                    {"eta", join(etas)},
                    {"grid", "-0.8:0.8:33 x -0.8:0.8:33"},
                    {"diagonal_grid", "0:1:51"}};
  common_parameters(fig, c);
  return fig;
}

FigureData figure7(const FigureOverrides& o) {
  check_overrides("fig7", o, {.R = true, .Rs = true, .eta = true, .kmax = true});
  FigureData fig;
  ScenarioConfig c = base_config(o);
  c.model = Model::realistic;
  c.scheme = Scheme::both;
  c.R = scalar(o.R, 0.5, "--R");
  const std::vector<double> etas = o.eta.empty() ? kFigureEtas : o.eta;
  const std::vector<double> lambdas = Grid{0.02, 0.4, 20}.values();

  const std::size_t nl = lambdas.size();
  const std::vector<DiagonalOptimum> optima = parallel_map(etas.size() * nl, [&](std::size_t i) {
    ScenarioConfig p = c;
    p.eta = etas[i / nl];
    p.lambda = lambdas[i % nl];
    return optimize_diagonal(p);
  });

  fig.table.columns = {"eta", "lambda", "alpha_opt", "sqrt_half_lambda", "E_N", "P2", "at_boundary", "tail_weight"};
  for (std::size_t i = 0; i < optima.size(); ++i) {
    const DiagonalOptimum& opt = optima[i];
    const double lambda = lambdas[i % nl];
    fig.table.add_row({format_number(etas[i / nl]), format_number(lambda), format_number(opt.alpha_opt),
                       format_number(std::sqrt(lambda / 2.0)), format_number(opt.E_N), format_number(opt.P2),
                       opt.at_boundary ? "1" : "0", format_number(opt.tail_weight)});
    fig.max_tail_weight = std::max(fig.max_tail_weight, opt.tail_weight);
    if (opt.tail_weight > kFlagTailWeight) ++fig.flagged_records;
    if (opt.at_boundary) {
      fig.diagnostics.push_back("optimum on search boundary at eta=" + format_number(etas[i / nl]) +
                                ", lambda=" + format_number(lambda));
    }
  }
  fig.parameters = {{"R", format_number(c.R)},
                    {"Rs", format_number(c.R_S)},
                    {"eta", join(etas)},
                    {"lambda_grid", "0.02:0.4:20"},
                    {"alpha_bracket", "0:" + format_number(c.alpha_hi)},
                    {"coarse_points", std::to_string(c.coarse_points)},
                    {"tolerance", format_number(c.tolerance)}};
  common_parameters(fig, c);
  return fig;
}

std::string iso_timestamp(std::chrono::system_clock::time_point tp) {
  const std::time_t t = std::chrono::system_clock::to_time_t(tp);
  std::tm utc{};
  gmtime_r(&t, &utc);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buf;
}

std::string stringify(const std::map<std::string, std::string>& params) {
  std::string s;
  for (const auto& [k, v] : params) {
    if (!s.empty()) s += ';';
    s += k + '=' + v;
  }
  return s;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << content;
  if (!f) throw std::runtime_error("failed writing " + path.string());
}

// ---------------------------------------------------------------------------
// run

struct RunOptions {
  std::string scheme = "single";
  std::string model = "realistic";
  double lambda = 0.2;
  double R = 0.5;
  std::optional<double> Rs;
  std::optional<double> eta;
  double alpha = 0.0;
  std::optional<double> beta;
  int n_max = 10;
  int k_max = 0;
};

ScenarioConfig validated_run_config(const RunOptions& o) {
  ScenarioConfig c;
  if (o.scheme == "single") {
    c.scheme = Scheme::single;
    if (o.beta) throw ParameterError("--beta only applies to --scheme double");
  } else if (o.scheme == "double") {
    c.scheme = Scheme::both;
  } else {
    throw ParameterError("--scheme must be 'single' or 'double'");
  }
  if (o.model == "ideal") {
    c.model = Model::ideal;
    if (o.Rs || o.eta) throw ParameterError("--Rs and --eta only apply to --model realistic");
  } else if (o.model == "realistic") {
    c.model = Model::realistic;
  } else {
    throw ParameterError("--model must be 'ideal' or 'realistic'");
  }
  if (!(o.lambda >= 0.0 && o.lambda < 1.0)) throw ParameterError("--lambda must lie in [0, 1)");
  if (!(o.R >= 0.0 && o.R <= 1.0)) throw ParameterError("--R must lie in [0, 1]");
  c.lambda = o.lambda;
  c.R = o.R;
  c.R_S = o.Rs.value_or(0.1);
  if (!(c.R_S > 0.0 && c.R_S < 1.0)) throw ParameterError("--Rs must lie in (0, 1)");
  c.eta = o.eta.value_or(1.0);
  if (!(c.eta >= 0.0 && c.eta <= 1.0)) throw ParameterError("--eta must lie in [0, 1], got " + format_number(c.eta));
  if (o.n_max < 2) throw ParameterError("--nmax must be at least 2");
  if (o.k_max < 0) throw ParameterError("--kmax must be non-negative");
  c.n_max = o.n_max;
  c.k_max = o.k_max;
  c.validate();
  return c;
}

int run_command(const RunOptions& o, std::ostream& out) {
  const ScenarioConfig c = validated_run_config(o);
  const double beta = o.beta.value_or(0.0);
  const PureTwoMode input = split_smsv(SqueezeParam(c.lambda), SplitterParam::from_reflectance(c.R), c.n_max);
  const bool single = c.scheme == Scheme::single;

  out << "scheme: " << o.scheme << "\nmodel: " << o.model << '\n';
  out << "lambda: " << format_number(c.lambda) << "\nR: " << format_number(c.R) << '\n';
  out << "alpha: " << format_number(o.alpha);
  if (!single) out << "\nbeta: " << format_number(beta);
  out << '\n';

  double tail = 0.0;
  if (c.model == Model::ideal) {
    const PureTwoMode filtered = single ? filter_single_ideal(input, o.alpha) : filter_double_ideal(input, o.alpha, beta);
    out << "E_S: " << format_number(entropy_of_entanglement(filtered).value) << " bits\n";
    out << "filtered norm2: " << format_number(norm2(filtered)) << '\n';
    const TruncationReport tr = truncation_report(filtered);
    tail = tr.total > 0.0 ? tr.tail_weight / tr.total : 0.0;
  } else {
    out << "Rs: " << format_number(c.R_S) << "\neta: " << format_number(c.eta) << '\n';
    out << "k_max: " << c.effective_k_max() << '\n';
    const SubtractionParams params = SubtractionParams::symmetric(c.R_S, c.eta, c.effective_k_max(), o.alpha, beta);
    const BranchEnsemble ens = single ? mixed_output_single(input, params) : mixed_output_double(input, params);
    if (!(ens.success_prob > 0.0)) throw DegenerateStateError("heralding probability is zero for these parameters");
    const EntanglementResult en = log_negativity(density_from_ensemble(ens));
    out << "E_N: " << format_number(en.value) << " bits\n";
    out << (single ? "P1: " : "P2: ") << format_number(ens.success_prob) << '\n';
    out << "branches (share of success probability >= 1e-9):\n";
    out << "  k  l  herald_weight  norm2  share\n";
    for (const Branch& b : ens.branches) {
      const double n2 = norm2(b.state);
      const double share = b.herald_weight * n2 / ens.success_prob;
      if (share < 1e-9) continue;
      out << "  " << b.k << "  " << b.l << "  " << format_number(b.herald_weight) << "  " << format_number(n2) << "  "
          << format_number(share) << '\n';
      tail += b.herald_weight * truncation_report(b.state).tail_weight;
    }
    tail /= ens.success_prob;
  }
  const bool healthy = tail <= kFlagTailWeight;
  out << "truncation tail (relative): " << format_number(tail) << (healthy ? " ok" : " FLAGGED") << '\n';
  return healthy ? kExitOk : kExitNumericalHealth;
}

int figure_command(const std::string& name, const FigureOverrides& o, const std::string& out_dir, std::ostream& out,
                   std::ostream& err) {
  const auto started = std::chrono::system_clock::now();
  const auto t0 = std::chrono::steady_clock::now();
  const FigureData fig = build_figure(name, o);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  const std::filesystem::path dir(out_dir);
  std::filesystem::create_directories(dir);
  const std::string data_file = name + ".csv";
  write_file(dir / data_file, to_csv(fig.table));

  const bool healthy = fig.flagged_records == 0;
  nlohmann::json manifest;
  manifest["command"] = "figure " + name;
  manifest["artifact_version"] = FOCKCAT_VERSION;
  manifest["timestamp"] = iso_timestamp(started);
  manifest["duration_seconds"] = format_number(seconds);
  manifest["parameters"] = stringify(fig.parameters);
  manifest["data_file"] = data_file;
  manifest["rows"] = std::to_string(fig.table.rows.size());
  manifest["truncation_health"] = (healthy ? "ok" : "flagged") + std::string(" (max tail ") +
                                  format_number(fig.max_tail_weight) + ", flagged " +
                                  std::to_string(fig.flagged_records) + ")";
  write_file(dir / (name + ".manifest.json"), manifest.dump(2) + "\n");

  for (const std::string& d : fig.diagnostics) err << "note: " << d << '\n';
  out << "wrote " << (dir / data_file).string() << " (" << fig.table.rows.size() << " rows)\n";
  if (!healthy) {
    err << "warning: " << fig.flagged_records << " records exceed the truncation tail threshold "
        << format_number(kFlagTailWeight) << "; increase --nmax\n";
    return kExitNumericalHealth;
  }
  return kExitOk;
}

}  // namespace

std::string format_number(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

void Table::add_row(std::vector<std::string> row) {
  if (row.size() != columns.size()) throw std::logic_error("Table::add_row: column count mismatch");
  rows.push_back(std::move(row));
}

std::string to_csv(const Table& table) {
  std::string s;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) s += ',';
      s += cells[i];
    }
    s += '\n';
  };
  line(table.columns);
  for (const auto& row : table.rows) line(row);
  return s;
}

const std::vector<std::string>& figure_names() {
  static const std::vector<std::string> names = {"fig2", "fig3", "fig4a", "fig4b", "fig5", "fig6", "fig7"};
  return names;
}

FigureData build_figure(const std::string& name, const FigureOverrides& overrides) {
  FigureData fig;
  if (name == "fig2") fig = figure2(overrides);
  else if (name == "fig3") fig = figure3(overrides);
  else if (name == "fig4a") fig = figure4a(overrides);
  else if (name == "fig4b") fig = figure4b(overrides);
  else if (name == "fig5") fig = figure5(overrides);
  else if (name == "fig6") fig = figure6(overrides);
  else if (name == "fig7") fig = figure7(overrides);
  else throw ParameterError("unknown figure '" + name + "'");
  fig.name = name;
  return fig;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Displacement-enhanced photon subtraction simulator"};
  app.require_subcommand(1);

  std::string figure_name;
  FigureOverrides fo;
  double fo_Rs = 0.0;
  int fo_nmax = 0, fo_kmax = 0;
  std::string out_dir = ".";
  CLI::App* figure = app.add_subcommand("figure", "Write the data behind one figure as CSV plus a JSON manifest");
  figure->add_option("name", figure_name, "fig2, fig3, fig4a, fig4b, fig5, fig6 or fig7")->required();
  figure->add_option("--lambda", fo.lambda, "Squeezing lambda = tanh(s)")->delimiter(',');
  figure->add_option("--R", fo.R, "Input splitter intensity reflectance")->delimiter(',');
  auto* fo_Rs_opt = figure->add_option("--Rs", fo_Rs, "Tap-off intensity reflectance");
  figure->add_option("--eta", fo.eta, "Detector efficiencies (comma list)")->delimiter(',');
  auto* fo_nmax_opt = figure->add_option("--nmax", fo_nmax, "Fock truncation");
  auto* fo_kmax_opt = figure->add_option("--kmax", fo_kmax, "Largest subtracted photon number (0 = nmax)");
  figure->add_option("--out", out_dir, "Output directory");

  RunOptions ro;
  double ro_Rs = 0.0, ro_eta = 0.0, ro_beta = 0.0;
  CLI::App* run = app.add_subcommand("run", "Evaluate a single scenario point");
  run->add_option("--scheme", ro.scheme, "single or double");
  run->add_option("--model", ro.model, "ideal or realistic");
  run->add_option("--lambda", ro.lambda, "Squeezing lambda = tanh(s)");
  run->add_option("--R", ro.R, "Input splitter intensity reflectance");
  auto* ro_Rs_opt = run->add_option("--Rs", ro_Rs, "Tap-off intensity reflectance");
  auto* ro_eta_opt = run->add_option("--eta", ro_eta, "Detector efficiency");
  run->add_option("--alpha", ro.alpha, "Displacement on mode A (real)");
  auto* ro_beta_opt = run->add_option("--beta", ro_beta, "Displacement on mode B (real)");
  run->add_option("--nmax", ro.n_max, "Fock truncation");
  run->add_option("--kmax", ro.k_max, "Largest subtracted photon number (0 = nmax)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }

  try {
    if (figure->parsed()) {
      if (fo_Rs_opt->count()) fo.Rs = fo_Rs;
      if (fo_nmax_opt->count()) fo.n_max = fo_nmax;
      if (fo_kmax_opt->count()) fo.k_max = fo_kmax;
      return figure_command(figure_name, fo, out_dir, out, err);
    }
    if (ro_Rs_opt->count()) ro.Rs = ro_Rs;
    if (ro_eta_opt->count()) ro.eta = ro_eta;
    if (ro_beta_opt->count()) ro.beta = ro_beta;
    return run_command(ro, out);
  } catch (const NumericalHealthError& e) {
    err << "numerical health failure: " << e.what() << '\n';
    return kExitNumericalHealth;
  } catch (const FockError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
}

}  // namespace fockcat::cli

// Parameter sweeps and scalar optimizers over displacements, squeezing and
// splitter reflectance. Every grid point is an independent pure computation;
// results always come back in grid order, so identical configurations give
// bit-identical records.
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fockcat/states.hpp"

namespace fockcat {

enum class Model { ideal, realistic };

/// Subtraction on mode A only, or on both modes.
enum class Scheme { single, both };

/// Relative tail weight above which a sweep record is flagged.
inline constexpr double kFlagTailWeight = 1e-4;

struct Grid {
  double min = 0.0;
  double max = 0.0;
  int count = 2;

  std::vector<double> values() const;
};

struct ScenarioConfig {
  Model model = Model::realistic;
  Scheme scheme = Scheme::single;
  double lambda = 0.2;
  double R = 0.5;    // input splitter intensity reflectance
  double R_S = 0.1;  // tap-off intensity reflectance
  double eta = 1.0;
  int n_max = 10;
  int k_max = 0;  // 0 selects n_max
  Grid alpha_grid{-0.5, 0.5, 41};
  Grid beta_grid{-0.5, 0.5, 41};

  // Optimizer settings.
  double alpha_hi = 1.0;
  int coarse_points = 41;
  double tolerance = 1e-4;

  void validate() const;
  int effective_k_max() const { return k_max > 0 ? k_max : n_max; }
};

struct SweepRecord {
  double alpha = 0.0;
  double beta = 0.0;
  double lambda = 0.0;
  double R = 0.5;
  double eta = 1.0;
  double E = 0.0;               // bits; entropy (ideal) or log negativity (realistic)
  std::optional<double> P;      // heralding probability, realistic model only
  double tail_weight = 0.0;     // relative weight on the truncation edge
  bool flagged = false;

  bool operator==(const SweepRecord&) const = default;
};

/// One scenario point with displacements alpha (mode A) and beta (mode B;
/// ignored for the single scheme).
SweepRecord evaluate_point(const ScenarioConfig& config, double alpha, double beta = 0.0);

std::vector<SweepRecord> sweep_single_alpha(const ScenarioConfig& config);

/// Rows follow alpha_grid, columns beta_grid.
std::vector<std::vector<SweepRecord>> sweep_double_grid(const ScenarioConfig& config);

struct CutResult {
  std::vector<SweepRecord> records;
  std::vector<std::string> diagnostics;
};

/// Ideal double filter along beta = -lambda r t / alpha; alpha = 0 is skipped.
CutResult hyperbola_cut(SqueezeParam squeeze, SplitterParam splitter, const std::vector<double>& alpha_grid,
                        int n_max = 10);

std::vector<SweepRecord> qutrit_entropy_vs_R(const std::vector<double>& R_grid);

/// Realistic double scheme along beta = -alpha.
std::vector<SweepRecord> diagonal_cut(const ScenarioConfig& config, const std::vector<double>& alpha_grid);

struct ScalarMaximum {
  double x = 0.0;
  double value = 0.0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  double value_lo = 0.0;
  double value_hi = 0.0;
  bool at_boundary = false;
  int evaluations = 0;
};

/// Coarse grid scan over [lo, hi] followed by golden-section refinement of the
/// best cell until its width is below tol.
ScalarMaximum maximize_scalar(const std::function<double(double)>& f, double lo, double hi, int coarse_points,
                              double tol);

struct DiagonalOptimum {
  double alpha_opt = 0.0;
  double E_N = 0.0;
  double P2 = 0.0;
  double tail_weight = 0.0;
  bool at_boundary = false;
  ScalarMaximum search;
};

/// Maximizes E_N(alpha, -alpha) over alpha in [0, alpha_hi].
DiagonalOptimum optimize_diagonal(const ScenarioConfig& config);

/// For each lambda and each eta: the optimal diagonal point (both modes) or
/// the alpha = 0 point (single mode). Records are ordered eta-major.
std::vector<SweepRecord> curves_vs_lambda(const ScenarioConfig& config, const std::vector<double>& lambda_grid,
                                          const std::vector<double>& etas);

struct ReflectanceOptimum {
  double R_opt = 0.5;
  double E = 0.0;
  double E_balanced = 0.0;
  ScalarMaximum search;
};

/// Maximizes the single-scheme entanglement at alpha = 0 over the input
/// reflectance R in [R_lo, R_hi].
ReflectanceOptimum optimize_input_reflectance(const ScenarioConfig& config, double R_lo = 0.4, double R_hi = 0.6);

}  // namespace fockcat

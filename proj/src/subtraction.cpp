#include "fockcat/subtraction.hpp"

#include <cmath>
#include <string>

namespace fockcat {

namespace {

// Extra output rows kept before the inverse displacement, so that rows which
// fall beyond n_max in the displaced frame still feed the low Fock block.
constexpr int kUndisplacePadding = 16;

void check_eta(double eta, const char* who) {
  if (!(eta >= 0.0 && eta <= 1.0)) throw ParameterError(std::string(who) + ": detector efficiency must lie in [0, 1]");
}

// Branch operator for the requested frame: rows n_max + 1, columns n_max + 1.
ModeOp frame_kraus(Complex alpha, int k, const TapOff& tap, int side, Frame frame) {
  if (frame == Frame::displaced) return subtraction_kraus(alpha, k, tap, side, side);
  const int padded = side + kUndisplacePadding;
  return displacement_matrix(-tap.t * alpha, side, padded) * subtraction_kraus(alpha, k, tap, padded, side);
}

}  // namespace

TapOff::TapOff(double t_, double r_) : t(t_), r(r_) {
  if (!(t >= 0.0 && r >= 0.0) || std::abs(t * t + r * r - 1.0) > 1e-12) {
    throw ParameterError("tap-off splitter needs t_S, r_S >= 0 with t_S^2 + r_S^2 = 1");
  }
}

TapOff TapOff::from_reflectance(double R_S) {
  if (!(R_S >= 0.0 && R_S <= 1.0)) throw ParameterError("tap-off reflectance R_S must lie in [0, 1]");
  return TapOff(std::sqrt(1.0 - R_S), std::sqrt(R_S));
}

SubtractionParams SubtractionParams::symmetric(double R_S, double eta, int k_max, Complex alpha, Complex beta) {
  SubtractionParams p;
  p.tap_a = TapOff::from_reflectance(R_S);
  p.tap_b = p.tap_a;
  p.eta_a = eta;
  p.eta_b = eta;
  p.k_max = k_max;
  p.alpha = alpha;
  p.beta = beta;
  p.validate();
  return p;
}

void SubtractionParams::validate() const {
  check_eta(eta_a, "SubtractionParams");
  check_eta(eta_b, "SubtractionParams");
  if (k_max < 1) throw ParameterError("SubtractionParams: k_max must be at least 1");
  // Re-run the splitter checks in case the fields were assigned directly.
  TapOff(tap_a.t, tap_a.r);
  TapOff(tap_b.t, tap_b.r);
}

double herald_probability(double eta, int photons) {
  check_eta(eta, "herald_probability");
  if (photons < 0) throw ParameterError("herald_probability: negative photon number");
  return 1.0 - std::pow(1.0 - eta, photons);
}

// ---------------------------------------------------------------------------
// Ideal filters

PureTwoMode filter_single_ideal(const PureTwoMode& state, Complex alpha) {
  const int n_max = state.n_max();
  const ModeOp filter = annihilation_matrix(n_max) + ModeOp(alpha * CMatrix::Identity(n_max + 1, n_max + 1));
  return apply_local(state, filter, std::nullopt);
}

PureTwoMode filter_double_ideal(const PureTwoMode& state, Complex alpha, Complex beta) {
  const int n_max = state.n_max();
  const CMatrix id = CMatrix::Identity(n_max + 1, n_max + 1);
  const ModeOp a = annihilation_matrix(n_max);
  return apply_local(state, a + ModeOp(alpha * id), a + ModeOp(beta * id));
}

// ---------------------------------------------------------------------------
// Realistic subtraction

ModeOp subtraction_kraus(Complex alpha, int k, const TapOff& tap, int d_out, int d_in) {
  if (k < 0) throw ParameterError("subtraction_kraus: negative photon number");
  const ModeOp displaced = displacement_matrix(alpha, d_out + k, d_in);
  CMatrix kraus(d_out, d_in);
  const double log_r = tap.r > 0.0 ? std::log(tap.r) : 0.0;
  for (int m = 0; m < d_out; ++m) {
    // sqrt(C(m+k, k)) t^m r^k
    double weight = 0.0;
    if (k == 0 || tap.r > 0.0) {
      weight = std::exp(0.5 * log_binomial(m + k, k) + k * log_r) * std::pow(tap.t, m);
    }
    kraus.row(m) = weight * displaced.matrix().row(m + k);
  }
  return ModeOp(std::move(kraus));
}

PureTwoMode photon_count_branch(const PureTwoMode& input, Complex alpha, int k, const TapOff& tap, Frame frame) {
  return apply_local(input, frame_kraus(alpha, k, tap, input.side(), frame), std::nullopt);
}

PureTwoMode subtract_branch_single(const PureTwoMode& input, Complex alpha, int k, double t_S, double r_S,
                                   Frame frame) {
  if (k < 1) throw ParameterError("subtract_branch_single: k must be at least 1");
  return photon_count_branch(input, alpha, k, TapOff(t_S, r_S), frame);
}

PureTwoMode subtract_branch_double(const PureTwoMode& input, Complex alpha, Complex beta, int k, int l,
                                   const TapOff& tap_a, const TapOff& tap_b, Frame frame) {
  if (k < 1 || l < 1) throw ParameterError("subtract_branch_double: k and l must be at least 1");
  const int side = input.side();
  return apply_local(input, frame_kraus(alpha, k, tap_a, side, frame), frame_kraus(beta, l, tap_b, side, frame));
}

PureTwoMode subtract_branch_double(const PureTwoMode& input, Complex alpha, Complex beta, int k, int l, double t_S,
                                   double r_S, Frame frame) {
  const TapOff tap(t_S, r_S);
  return subtract_branch_double(input, alpha, beta, k, l, tap, tap, frame);
}

BranchEnsemble mixed_output_single(const PureTwoMode& input, const SubtractionParams& params) {
  params.validate();
  BranchEnsemble ens;
  ens.branches.reserve(params.k_max);
  for (int k = 1; k <= params.k_max; ++k) {
    PureTwoMode branch = photon_count_branch(input, params.alpha, k, params.tap_a, params.frame);
    const double w = herald_probability(params.eta_a, k);
    ens.success_prob += w * norm2(branch);
    ens.branches.push_back(Branch{k, 0, std::move(branch), w});
  }
  return ens;
}

BranchEnsemble mixed_output_double(const PureTwoMode& input, const SubtractionParams& params) {
  params.validate();
  const int side = input.side();
  // K_k C is shared by every branch with the same k.
  std::vector<CMatrix> left(params.k_max);
  std::vector<CMatrix> right(params.k_max);
  for (int k = 1; k <= params.k_max; ++k) {
    left[k - 1] = frame_kraus(params.alpha, k, params.tap_a, side, params.frame).matrix() * input.coeffs();
    right[k - 1] = frame_kraus(params.beta, k, params.tap_b, side, params.frame).matrix().transpose();
  }

  BranchEnsemble ens;
  ens.branches.reserve(static_cast<std::size_t>(params.k_max) * params.k_max);
  for (int k = 1; k <= params.k_max; ++k) {
    const double wk = herald_probability(params.eta_a, k);
    for (int l = 1; l <= params.k_max; ++l) {
      const double w = wk * herald_probability(params.eta_b, l);
      PureTwoMode branch(left[k - 1] * right[l - 1]);
      ens.success_prob += w * norm2(branch);
      ens.branches.push_back(Branch{k, l, std::move(branch), w});
    }
  }
  return ens;
}

ModeOp filter_operator(int k, Complex alpha, double t_S, double r_S, int n_max) {
  if (k < 0) throw ParameterError("filter_operator: negative photon number");
  const TapOff tap(t_S, r_S);
  const int side = n_max + 1;
  const ModeOp a = annihilation_matrix(n_max);
  const CMatrix id = CMatrix::Identity(side, side);

  CMatrix shifted_power = id;  // (a + alpha)^k
  const CMatrix shifted = a.matrix() + alpha * id;
  for (int i = 0; i < k; ++i) shifted_power = shifted * shifted_power;

  // exp(-r^2 alpha* a): a is nilpotent, so the series ends at a^n_max.
  const Complex coeff = -tap.r * tap.r * std::conj(alpha);
  CMatrix exp_lowering = id;
  CMatrix term = id;
  for (int j = 1; j <= n_max; ++j) {
    term = (coeff / static_cast<double>(j)) * (a.matrix() * term);
    exp_lowering += term;
  }

  const double scale = std::pow(tap.r, k) * std::exp(-0.5 * log_factorial(k)) *
                       std::exp(-0.5 * tap.r * tap.r * std::norm(alpha));
  return ModeOp(scale * attenuation_matrix(tap.t, n_max).matrix() * exp_lowering * shifted_power);
}

}  // namespace fockcat

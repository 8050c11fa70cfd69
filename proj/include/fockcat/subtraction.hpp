// Photon subtraction, both as ideal displaced annihilation filters and as the
// realistic tap-off beam splitter followed by an on/off detector.
//
// Realistic model, one mode: the mode is displaced by D(alpha), passes a
// tap-off splitter with amplitude transmittance t_S and reflectance r_S, and
// the reflected port is measured. The unnormalized branch for exactly k
// reflected photons has coefficients
//
//   B(m, n) = sqrt(C(m+k, k)) t_S^m r_S^k sum_a <m+k|D(alpha)|a> C(a, n),
//
// and its squared norm is the probability of that event. An on/off detector
// of efficiency eta clicks on k photons with probability 1 - (1 - eta)^k, so
// the heralded output is the mixture sum_k w_k |B_k><B_k| / P.
#pragma once

#include <cmath>
#include <vector>

#include "fockcat/fock.hpp"

namespace fockcat {

/// Tap-off beam splitter of one subtraction stage.
struct TapOff {
  double t;
  double r;

  TapOff(double t, double r);
  static TapOff from_reflectance(double R_S);
  double R() const { return r * r; }
};

/// Branches are either left in the displaced frame, or rotated back with the
/// inverse displacement D(-t_S alpha). The two differ by a local unitary.
enum class Frame { displaced, undisplaced };

struct SubtractionParams {
  TapOff tap_a{std::sqrt(0.9), std::sqrt(0.1)};
  TapOff tap_b{std::sqrt(0.9), std::sqrt(0.1)};
  double eta_a = 1.0;
  double eta_b = 1.0;
  int k_max = 10;
  Complex alpha = 0.0;
  Complex beta = 0.0;
  Frame frame = Frame::displaced;

  /// Same tap-off reflectance and detector efficiency on both modes.
  static SubtractionParams symmetric(double R_S, double eta, int k_max, Complex alpha = 0.0,
                                     Complex beta = 0.0);
  void validate() const;
};

struct Branch {
  int k = 0;
  int l = 0;  // 0 for single-mode subtraction
  PureTwoMode state;
  double herald_weight = 0.0;
};

struct BranchEnsemble {
  std::vector<Branch> branches;
  double success_prob = 0.0;
};

/// Click probability of an on/off detector with efficiency eta hit by k photons.
double herald_probability(double eta, int photons);

PureTwoMode filter_single_ideal(const PureTwoMode& state, Complex alpha);
PureTwoMode filter_double_ideal(const PureTwoMode& state, Complex alpha, Complex beta);

/// Kraus operator of "displace by alpha, then exactly k photons reflected":
/// rows m < d_out, columns a < d_in.
ModeOp subtraction_kraus(Complex alpha, int k, const TapOff& tap, int d_out, int d_in);

/// Branch for exactly k reflected photons; k = 0 (no photon reflected) is
/// allowed here so that event probabilities can be summed to one.
PureTwoMode photon_count_branch(const PureTwoMode& input, Complex alpha, int k, const TapOff& tap,
                                Frame frame = Frame::displaced);

PureTwoMode subtract_branch_single(const PureTwoMode& input, Complex alpha, int k, double t_S,
                                   double r_S, Frame frame = Frame::displaced);

PureTwoMode subtract_branch_double(const PureTwoMode& input, Complex alpha, Complex beta, int k,
                                   int l, const TapOff& tap_a, const TapOff& tap_b,
                                   Frame frame = Frame::displaced);

PureTwoMode subtract_branch_double(const PureTwoMode& input, Complex alpha, Complex beta, int k,
                                   int l, double t_S, double r_S, Frame frame = Frame::displaced);

BranchEnsemble mixed_output_single(const PureTwoMode& input, const SubtractionParams& params);
BranchEnsemble mixed_output_double(const PureTwoMode& input, const SubtractionParams& params);

/// Filter of displaced k-photon subtraction in the un-displaced frame:
/// r_S^k / sqrt(k!) exp(-r_S^2 |alpha|^2 / 2) t_S^n exp(-r_S^2 alpha* a) (a + alpha)^k.
ModeOp filter_operator(int k, Complex alpha, double t_S, double r_S, int n_max);

}  // namespace fockcat

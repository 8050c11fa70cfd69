// Input states: single-mode squeezed vacuum, its split two-mode form and the
// low-photon analytic targets used to benchmark the filters.
#pragma once

#include "fockcat/fock.hpp"

namespace fockcat {

/// Squeezing expressed as lambda = tanh(s), 0 <= lambda < 1.
class SqueezeParam {
 public:
  explicit SqueezeParam(double lambda);
  static SqueezeParam from_s(double s);

  double lambda() const { return lambda_; }
  double s() const;

 private:
  double lambda_;
};

/// Real, non-negative amplitude transmittance t and reflectance r of a
/// lossless beam splitter.
class SplitterParam {
 public:
  SplitterParam(double t, double r);
  static SplitterParam from_reflectance(double R);
  static SplitterParam balanced();

  double t() const { return t_; }
  double r() const { return r_; }
  double R() const { return r_ * r_; }

 private:
  double t_;
  double r_;
};

FockVector smsv(SqueezeParam squeeze, int n_max);

/// Closed-form coefficients of the squeezed vacuum after mixing with vacuum.
PureTwoMode split_smsv(SqueezeParam squeeze, SplitterParam splitter, int n_max);

/// Unnormalized second-order expansion
/// |0,0> + lambda r t |1,1> + lambda/sqrt(2) (t^2 |2,0> + r^2 |0,2>).
PureTwoMode weak_input(SqueezeParam squeeze, SplitterParam splitter, int n_max = 2);

/// sqrt(2) r t |1,1> + t^2 |2,0> + r^2 |0,2>; normalized by construction.
PureTwoMode qutrit_state(SplitterParam splitter, int n_max = 2);

}  // namespace fockcat

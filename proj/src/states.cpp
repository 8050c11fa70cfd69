#include "fockcat/states.hpp"

#include <cmath>

namespace fockcat {

SqueezeParam::SqueezeParam(double lambda) : lambda_(lambda) {
  if (!(lambda >= 0.0 && lambda < 1.0)) throw ParameterError("squeezing lambda must lie in [0, 1)");
}

SqueezeParam SqueezeParam::from_s(double s) { return SqueezeParam(std::tanh(s)); }

double SqueezeParam::s() const { return std::atanh(lambda_); }

SplitterParam::SplitterParam(double t, double r) : t_(t), r_(r) {
  if (!(t >= 0.0 && r >= 0.0) || std::abs(t * t + r * r - 1.0) > 1e-12) {
    throw ParameterError("beam splitter needs t, r >= 0 with t^2 + r^2 = 1");
  }
}

SplitterParam SplitterParam::from_reflectance(double R) {
  if (!(R >= 0.0 && R <= 1.0)) throw ParameterError("intensity reflectance R must lie in [0, 1]");
  return SplitterParam(std::sqrt(1.0 - R), std::sqrt(R));
}

SplitterParam SplitterParam::balanced() { return SplitterParam(std::sqrt(0.5), std::sqrt(0.5)); }

FockVector smsv(SqueezeParam squeeze, int n_max) {
  if (n_max < 2) throw DimensionError("smsv: n_max must be at least 2");
  const double lambda = squeeze.lambda();
  const double prefactor = std::pow(1.0 - lambda * lambda, 0.25);
  CVector amps = CVector::Zero(n_max + 1);
  amps(0) = prefactor;
  if (lambda == 0.0) return FockVector(std::move(amps));
  // sqrt((2n)!) / (2^n n!) lambda^n
  for (int n = 1; 2 * n <= n_max; ++n) {
    const double log_mag = 0.5 * log_factorial(2 * n) - n * std::log(2.0) - log_factorial(n) + n * std::log(lambda);
    amps(2 * n) = prefactor * std::exp(log_mag);
  }
  return FockVector(std::move(amps));
}

PureTwoMode split_smsv(SqueezeParam squeeze, SplitterParam splitter, int n_max) {
  if (n_max < 0) throw DimensionError("split_smsv: negative n_max");
  const double lambda = squeeze.lambda();
  const double t = splitter.t();
  const double r = splitter.r();
  const double prefactor = std::pow(1.0 - lambda * lambda, 0.25);
  CMatrix c = CMatrix::Zero(n_max + 1, n_max + 1);
  for (int m = 0; m <= n_max; ++m) {
    for (int n = 0; n <= n_max; ++n) {
      const int total = m + n;
      if (total % 2 != 0) continue;
      const int half = total / 2;
      // (lambda/2)^half (2 half)!/half! t^m r^n / sqrt(m! n!)
      const double log_mag = log_factorial(total) - log_factorial(half) -
                             0.5 * (log_factorial(m) + log_factorial(n));
      const double powers = std::pow(0.5 * lambda, half) * std::pow(t, m) * std::pow(r, n);
      c(m, n) = prefactor * std::exp(log_mag) * powers;
    }
  }
  return PureTwoMode(std::move(c));
}

PureTwoMode weak_input(SqueezeParam squeeze, SplitterParam splitter, int n_max) {
  if (n_max < 2) throw DimensionError("weak_input: n_max must be at least 2");
  const double lambda = squeeze.lambda();
  const double t = splitter.t();
  const double r = splitter.r();
  CMatrix c = CMatrix::Zero(n_max + 1, n_max + 1);
  c(0, 0) = 1.0;
  c(1, 1) = lambda * r * t;
  c(2, 0) = lambda / std::sqrt(2.0) * t * t;
  c(0, 2) = lambda / std::sqrt(2.0) * r * r;
  return PureTwoMode(std::move(c));
}

PureTwoMode qutrit_state(SplitterParam splitter, int n_max) {
  if (n_max < 2) throw DimensionError("qutrit_state: n_max must be at least 2");
  const double t = splitter.t();
  const double r = splitter.r();
  CMatrix c = CMatrix::Zero(n_max + 1, n_max + 1);
  c(1, 1) = std::sqrt(2.0) * r * t;
  c(2, 0) = t * t;
  c(0, 2) = r * r;
  return PureTwoMode(std::move(c));
}

}  // namespace fockcat

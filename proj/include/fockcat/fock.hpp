// Truncated Fock-space representation of one- and two-mode optical states.
//
// A single mode is truncated at photon number n_max, so its basis is
// |0>, ..., |n_max>. Two-mode pure states are stored as coefficient matrices
// C(m, n) = <m, n|psi>, with mode A on rows and mode B on columns. Local
// operators act as C -> A * C * B^T.
#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace fockcat {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

/// Base class of every error raised by the library.
class FockError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public FockError {
 public:
  using FockError::FockError;
};

class ParameterError : public FockError {
 public:
  using FockError::FockError;
};

/// Raised when an operation needs a nonzero state (normalisation, entropy).
class DegenerateStateError : public FockError {
 public:
  using FockError::FockError;
};

/// Raised when a result is outside numerical tolerances (e.g. a reduced
/// density matrix with a clearly negative eigenvalue).
class NumericalHealthError : public FockError {
 public:
  using FockError::FockError;
};

/// Default tolerance on the weight carried by the outermost Fock row/column,
/// relative to the total squared norm.
inline constexpr double kDefaultTailTolerance = 1e-6;

/// log(n!) from a cached table; exact for every n the library uses.
double log_factorial(int n);

/// log of the binomial coefficient C(n, k).
double log_binomial(int n, int k);

class FockVector {
 public:
  explicit FockVector(CVector amps);

  static FockVector vacuum(int n_max);
  static FockVector number(int n, int n_max);

  int n_max() const { return static_cast<int>(amps_.size()) - 1; }
  const CVector& amps() const { return amps_; }
  Complex operator[](int n) const { return amps_(n); }
  double norm2() const { return amps_.squaredNorm(); }

 private:
  CVector amps_;
};

class PureTwoMode {
 public:
  explicit PureTwoMode(CMatrix coeffs);

  static PureTwoMode zero(int n_max);
  static PureTwoMode basis(int m, int n, int n_max);
  static PureTwoMode product(const FockVector& a, const FockVector& b);

  int n_max() const { return static_cast<int>(coeffs_.rows()) - 1; }
  int side() const { return static_cast<int>(coeffs_.rows()); }
  const CMatrix& coeffs() const { return coeffs_; }
  Complex operator()(int m, int n) const { return coeffs_(m, n); }

  /// Same state embedded in a larger truncation (zero padded), or cut down
  /// to a smaller one (amplitudes above the new n_max are dropped).
  PureTwoMode resized(int n_max) const;

 private:
  CMatrix coeffs_;
};

/// Single-mode operator on the truncated Fock space. Rectangular matrices are
/// allowed so that displacements can map into a larger output truncation.
class ModeOp {
 public:
  explicit ModeOp(CMatrix matrix);

  static ModeOp identity(int n_max);

  int rows() const { return static_cast<int>(matrix_.rows()); }
  int cols() const { return static_cast<int>(matrix_.cols()); }
  const CMatrix& matrix() const { return matrix_; }

  FockVector apply(const FockVector& v) const;
  ModeOp adjoint() const { return ModeOp(matrix_.adjoint()); }

  friend ModeOp operator*(const ModeOp& lhs, const ModeOp& rhs);
  friend ModeOp operator+(const ModeOp& lhs, const ModeOp& rhs);

 private:
  CMatrix matrix_;
};

struct TruncationReport {
  double tail_weight = 0.0;
  double total = 0.0;
  bool ok = true;
};

ModeOp annihilation_matrix(int n_max);

/// Matrix elements <m|D(alpha)|n> for m < d_out, n < d_in.
ModeOp displacement_matrix(Complex alpha, int d_out, int d_in);

/// t^n on the truncated space, i.e. amplitude attenuation of each Fock level.
ModeOp attenuation_matrix(double t, int n_max);

/// Two-mode beam splitter with a^dag -> t a^dag + r b^dag and
/// b^dag -> t b^dag - r a^dag. Photons pushed above n_max are lost.
PureTwoMode beamsplitter_apply(const PureTwoMode& state, double t, double r);

/// C -> opA * C * opB^T; an absent operator acts as the identity.
PureTwoMode apply_local(const PureTwoMode& state, const std::optional<ModeOp>& op_a,
                        const std::optional<ModeOp>& op_b);

double norm2(const PureTwoMode& state);
PureTwoMode normalize(const PureTwoMode& state);

/// Squared amplitude on the highest row and column of the coefficient matrix.
TruncationReport truncation_report(const PureTwoMode& state,
                                   double tolerance = kDefaultTailTolerance);

}  // namespace fockcat

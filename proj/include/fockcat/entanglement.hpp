// Entanglement measures in bits: entropy of entanglement for pure states and
// logarithmic negativity for heralded mixtures.
#pragma once

#include "fockcat/fock.hpp"
#include "fockcat/subtraction.hpp"

namespace fockcat {

/// Eigenvalues down to -kEigenClipTolerance are treated as rounding and
/// clipped to zero; anything more negative is a numerical-health failure.
inline constexpr double kEigenClipTolerance = 1e-9;

/// Density matrix on the two-mode truncated space, flat index m * side + n.
class DensityTwoMode {
 public:
  /// Checks Hermiticity and unit trace to 1e-10.
  DensityTwoMode(CMatrix rho, int side);

  static DensityTwoMode from_pure(const PureTwoMode& state);

  int side() const { return side_; }
  int n_max() const { return side_ - 1; }
  const CMatrix& matrix() const { return rho_; }
  int flat(int m, int n) const { return m * side_ + n; }

 private:
  CMatrix rho_;
  int side_;
};

enum class MeasureKind { entropy, log_negativity };

struct EntanglementResult {
  double value = 0.0;
  MeasureKind kind = MeasureKind::entropy;
  // entropy: total Schmidt weight below 1e-300 that was skipped;
  // log negativity: smallest eigenvalue of the partial transpose.
  double spectrum_tail = 0.0;
  // Magnitude removed by clipping negative eigenvalues or a negative result.
  double clipped_mass = 0.0;
};

/// Base-2 von Neumann entropy of a Hermitian, unit-trace matrix.
double von_neumann_entropy(const CMatrix& rho);

/// Tr_B |psi><psi| and Tr_A |psi><psi| of the normalized state.
CMatrix reduced_state_a(const PureTwoMode& state);
CMatrix reduced_state_b(const PureTwoMode& state);

/// Schmidt coefficients (singular values of the normalized coefficient matrix).
RVector schmidt_coefficients(const PureTwoMode& state);

EntanglementResult entropy_of_entanglement(const PureTwoMode& state);

DensityTwoMode density_from_ensemble(const BranchEnsemble& ensemble);

/// ((m,n),(m',n')) -> ((m',n),(m,n')).
CMatrix partial_transpose(const DensityTwoMode& rho);

/// log2 of the trace norm of the partial transpose, clipped at zero.
EntanglementResult log_negativity(const DensityTwoMode& rho);

}  // namespace fockcat

#include "fockcat/entanglement.hpp"

#include <cmath>
#include <string>

namespace fockcat {

namespace {

constexpr double kDensityTolerance = 1e-10;

double entropy_term(double p) { return p > 0.0 ? -p * std::log2(p) : 0.0; }

}  // namespace

DensityTwoMode::DensityTwoMode(CMatrix rho, int side) : rho_(std::move(rho)), side_(side) {
  if (side < 1 || rho_.rows() != side * side || rho_.cols() != side * side) {
    throw DimensionError("DensityTwoMode: matrix side must equal (n_max + 1)^2");
  }
  if ((rho_ - rho_.adjoint()).cwiseAbs().maxCoeff() > kDensityTolerance) {
    throw ParameterError("DensityTwoMode: matrix is not Hermitian");
  }
  if (std::abs(rho_.trace() - 1.0) > kDensityTolerance) {
    throw ParameterError("DensityTwoMode: trace differs from one");
  }
}

DensityTwoMode DensityTwoMode::from_pure(const PureTwoMode& state) {
  const PureTwoMode psi = normalize(state);
  const int side = psi.side();
  // Row-major flattening gives index m * side + n.
  CVector flat(side * side);
  for (int m = 0; m < side; ++m)
    for (int n = 0; n < side; ++n) flat(m * side + n) = psi(m, n);
  return DensityTwoMode(flat * flat.adjoint(), side);
}

double von_neumann_entropy(const CMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(rho, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericalHealthError("von_neumann_entropy: eigensolver failed");
  double s = 0.0;
  for (double p : solver.eigenvalues()) {
    if (p < -kEigenClipTolerance) {
      throw NumericalHealthError("von_neumann_entropy: eigenvalue " + std::to_string(p) + " below clip tolerance");
    }
    s += entropy_term(p);
  }
  return s;
}

CMatrix reduced_state_a(const PureTwoMode& state) {
  const CMatrix c = normalize(state).coeffs();
  return c * c.adjoint();
}

CMatrix reduced_state_b(const PureTwoMode& state) {
  const CMatrix c = normalize(state).coeffs();
  return c.transpose() * c.conjugate();
}

RVector schmidt_coefficients(const PureTwoMode& state) {
  Eigen::JacobiSVD<CMatrix> svd(normalize(state).coeffs());
  return svd.singularValues();
}

EntanglementResult entropy_of_entanglement(const PureTwoMode& state) {
  EntanglementResult res;
  res.kind = MeasureKind::entropy;
  for (double sigma : schmidt_coefficients(state)) {
    const double p = sigma * sigma;
    if (p < 1e-300) {
      res.spectrum_tail += p;
      continue;
    }
    res.value += entropy_term(p);
  }
  if (res.value < 0.0) {
    res.clipped_mass = -res.value;
    res.value = 0.0;
  }
  return res;
}

DensityTwoMode density_from_ensemble(const BranchEnsemble& ensemble) {
  if (!(ensemble.success_prob > 0.0)) throw DegenerateStateError("density_from_ensemble: zero success probability");
  if (ensemble.branches.empty()) throw DegenerateStateError("density_from_ensemble: no branches");
  const int side = ensemble.branches.front().state.side();
  const int dim = side * side;

  // Stack sqrt(w) psi as columns and form V V^dag in one product.
  CMatrix columns = CMatrix::Zero(dim, static_cast<Eigen::Index>(ensemble.branches.size()));
  for (std::size_t j = 0; j < ensemble.branches.size(); ++j) {
    const Branch& b = ensemble.branches[j];
    if (b.state.side() != side) throw DimensionError("density_from_ensemble: branch truncations differ");
    const double scale = std::sqrt(b.herald_weight);
    for (int m = 0; m < side; ++m)
      for (int n = 0; n < side; ++n) columns(m * side + n, static_cast<Eigen::Index>(j)) = scale * b.state(m, n);
  }
  CMatrix rho = columns * columns.adjoint();
  rho /= ensemble.success_prob;
  // Remove rounding asymmetry and renormalize the trace exactly.
  rho = 0.5 * (rho + rho.adjoint()).eval();
  rho /= rho.trace().real();
  return DensityTwoMode(std::move(rho), side);
}

CMatrix partial_transpose(const DensityTwoMode& rho) {
  const int side = rho.side();
  const CMatrix& in = rho.matrix();
  CMatrix out(in.rows(), in.cols());
  for (int m = 0; m < side; ++m)
    for (int n = 0; n < side; ++n)
      for (int mp = 0; mp < side; ++mp)
        for (int np = 0; np < side; ++np) out(mp * side + n, m * side + np) = in(m * side + n, mp * side + np);
  return out;
}

EntanglementResult log_negativity(const DensityTwoMode& rho) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(partial_transpose(rho), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericalHealthError("log_negativity: eigensolver failed");
  const RVector& ev = solver.eigenvalues();

  EntanglementResult res;
  res.kind = MeasureKind::log_negativity;
  res.spectrum_tail = ev.minCoeff();
  res.value = std::log2(ev.cwiseAbs().sum());
  if (res.value < 0.0) {
    res.clipped_mass = -res.value;
    res.value = 0.0;
  }
  return res;
}

}  // namespace fockcat

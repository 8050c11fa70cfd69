#include "fockcat/fock.hpp"

#include <cmath>
#include <vector>

namespace fockcat {

namespace {

constexpr int kFactorialTableSize = 512;

const std::vector<double>& factorial_table() {
  static const std::vector<double> table = [] {
    std::vector<double> t(kFactorialTableSize, 0.0);
    for (int n = 1; n < kFactorialTableSize; ++n) t[n] = t[n - 1] + std::log(static_cast<double>(n));
    return t;
  }();
  return table;
}

void check_dimension(bool ok, const std::string& what) {
  if (!ok) throw DimensionError(what);
}

}  // namespace

double log_factorial(int n) {
  if (n < 0) throw ParameterError("log_factorial: negative argument");
  if (n < kFactorialTableSize) return factorial_table()[n];
  return std::lgamma(static_cast<double>(n) + 1.0);
}

double log_binomial(int n, int k) {
  if (k < 0 || k > n) throw ParameterError("log_binomial: k outside [0, n]");
  return log_factorial(n) - log_factorial(k) - log_factorial(n - k);
}

// ---------------------------------------------------------------------------
// FockVector / PureTwoMode / ModeOp

FockVector::FockVector(CVector amps) : amps_(std::move(amps)) {
  check_dimension(amps_.size() >= 1, "FockVector needs at least one amplitude");
}

FockVector FockVector::vacuum(int n_max) { return number(0, n_max); }

FockVector FockVector::number(int n, int n_max) {
  check_dimension(n_max >= 0 && n >= 0 && n <= n_max, "FockVector::number: n outside [0, n_max]");
  CVector v = CVector::Zero(n_max + 1);
  v(n) = 1.0;
  return FockVector(std::move(v));
}

PureTwoMode::PureTwoMode(CMatrix coeffs) : coeffs_(std::move(coeffs)) {
  check_dimension(coeffs_.rows() >= 1 && coeffs_.rows() == coeffs_.cols(),
                  "PureTwoMode coefficient matrix must be square and non-empty");
}

PureTwoMode PureTwoMode::zero(int n_max) {
  check_dimension(n_max >= 0, "PureTwoMode::zero: negative n_max");
  return PureTwoMode(CMatrix::Zero(n_max + 1, n_max + 1));
}

PureTwoMode PureTwoMode::basis(int m, int n, int n_max) {
  check_dimension(m >= 0 && n >= 0 && m <= n_max && n <= n_max, "PureTwoMode::basis: index outside [0, n_max]");
  CMatrix c = CMatrix::Zero(n_max + 1, n_max + 1);
  c(m, n) = 1.0;
  return PureTwoMode(std::move(c));
}

PureTwoMode PureTwoMode::product(const FockVector& a, const FockVector& b) {
  check_dimension(a.n_max() == b.n_max(), "PureTwoMode::product: truncations differ");
  return PureTwoMode(a.amps() * b.amps().transpose());
}

PureTwoMode PureTwoMode::resized(int n_max) const {
  check_dimension(n_max >= 0, "PureTwoMode::resized: negative n_max");
  const int side_new = n_max + 1;
  const int keep = std::min(side_new, side());
  CMatrix c = CMatrix::Zero(side_new, side_new);
  c.topLeftCorner(keep, keep) = coeffs_.topLeftCorner(keep, keep);
  return PureTwoMode(std::move(c));
}

ModeOp::ModeOp(CMatrix matrix) : matrix_(std::move(matrix)) {
  check_dimension(matrix_.rows() >= 1 && matrix_.cols() >= 1, "ModeOp matrix must be non-empty");
}

ModeOp ModeOp::identity(int n_max) {
  check_dimension(n_max >= 0, "ModeOp::identity: negative n_max");
  return ModeOp(CMatrix::Identity(n_max + 1, n_max + 1));
}

FockVector ModeOp::apply(const FockVector& v) const {
  check_dimension(cols() == v.n_max() + 1, "ModeOp::apply: operator columns do not match vector length");
  return FockVector(matrix_ * v.amps());
}

ModeOp operator*(const ModeOp& lhs, const ModeOp& rhs) {
  check_dimension(lhs.cols() == rhs.rows(), "ModeOp product: inner dimensions differ");
  return ModeOp(lhs.matrix_ * rhs.matrix_);
}

ModeOp operator+(const ModeOp& lhs, const ModeOp& rhs) {
  check_dimension(lhs.rows() == rhs.rows() && lhs.cols() == rhs.cols(), "ModeOp sum: shapes differ");
  return ModeOp(lhs.matrix_ + rhs.matrix_);
}

// ---------------------------------------------------------------------------
// Elementary operators

ModeOp annihilation_matrix(int n_max) {
  check_dimension(n_max >= 1, "annihilation_matrix: n_max must be at least 1");
  CMatrix a = CMatrix::Zero(n_max + 1, n_max + 1);
  for (int n = 1; n <= n_max; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return ModeOp(std::move(a));
}

ModeOp displacement_matrix(Complex alpha, int d_out, int d_in) {
  check_dimension(d_out >= 1 && d_in >= 1, "displacement_matrix: dimensions must be positive");
  CMatrix d = CMatrix::Zero(d_out, d_in);
  const double mod = std::abs(alpha);
  if (mod == 0.0) {
    for (int i = 0; i < std::min(d_out, d_in); ++i) d(i, i) = 1.0;
    return ModeOp(std::move(d));
  }
  const double log_mod = std::log(mod);
  const double theta = std::arg(alpha);
  const double gauss = -0.5 * mod * mod;

  // <m|D|n> = e^{-|a|^2/2} sum_k sqrt(m! n!) a^k (-a*)^p / (k! (m-k)! p!),
  // p = n - m + k, k from max(0, m - n) to m.
  for (int m = 0; m < d_out; ++m) {
    for (int n = 0; n < d_in; ++n) {
      Complex sum = 0.0;
      const double log_root = 0.5 * (log_factorial(m) + log_factorial(n));
      for (int k = std::max(0, m - n); k <= m; ++k) {
        const int p = n - m + k;
        const double log_mag = gauss + log_root + (k + p) * log_mod - log_factorial(k) -
                               log_factorial(m - k) - log_factorial(p);
        const double sign = (p % 2 == 0) ? 1.0 : -1.0;
        sum += sign * std::polar(std::exp(log_mag), theta * (k - p));
      }
      d(m, n) = sum;
    }
  }
  return ModeOp(std::move(d));
}

ModeOp attenuation_matrix(double t, int n_max) {
  check_dimension(n_max >= 0, "attenuation_matrix: negative n_max");
  CMatrix a = CMatrix::Zero(n_max + 1, n_max + 1);
  for (int n = 0; n <= n_max; ++n) a(n, n) = std::pow(t, n);
  return ModeOp(std::move(a));
}

PureTwoMode beamsplitter_apply(const PureTwoMode& state, double t, double r) {
  if (!(t >= 0.0 && r >= 0.0) || std::abs(t * t + r * r - 1.0) > 1e-12) {
    throw ParameterError("beamsplitter_apply: need t, r >= 0 with t^2 + r^2 = 1");
  }
  const int side = state.side();
  const int n_max = state.n_max();
  const CMatrix& in = state.coeffs();
  CMatrix out = CMatrix::Zero(side, side);

  // |m,n> = a^m b^n / sqrt(m! n!) |0>; expand (t a + r b)^m (t b - r a)^n.
  for (int m = 0; m < side; ++m) {
    for (int n = 0; n < side; ++n) {
      const Complex c = in(m, n);
      if (c == 0.0) continue;
      const double log_norm = -0.5 * (log_factorial(m) + log_factorial(n));
      for (int i = 0; i <= m; ++i) {
        for (int j = 0; j <= n; ++j) {
          const int out_a = i + n - j;
          const int out_b = m - i + j;
          if (out_a > n_max || out_b > n_max) continue;
          const double mag = std::exp(log_binomial(m, i) + log_binomial(n, j) + log_norm +
                                      0.5 * (log_factorial(out_a) + log_factorial(out_b)));
          const double powers = std::pow(t, i + j) * std::pow(r, m - i + n - j);
          const double sign = ((n - j) % 2 == 0) ? 1.0 : -1.0;
          out(out_a, out_b) += c * (sign * mag * powers);
        }
      }
    }
  }
  return PureTwoMode(std::move(out));
}

PureTwoMode apply_local(const PureTwoMode& state, const std::optional<ModeOp>& op_a,
                        const std::optional<ModeOp>& op_b) {
  const int side = state.side();
  if (op_a) check_dimension(op_a->cols() == side, "apply_local: mode A operator does not match state side");
  if (op_b) check_dimension(op_b->cols() == side, "apply_local: mode B operator does not match state side");
  const int rows_out = op_a ? op_a->rows() : side;
  const int cols_out = op_b ? op_b->rows() : side;
  check_dimension(rows_out == cols_out, "apply_local: result would not be square");

  CMatrix c = state.coeffs();
  if (op_a) c = op_a->matrix() * c;
  if (op_b) c = c * op_b->matrix().transpose();
  return PureTwoMode(std::move(c));
}

double norm2(const PureTwoMode& state) { return state.coeffs().squaredNorm(); }

PureTwoMode normalize(const PureTwoMode& state) {
  const double n2 = norm2(state);
  if (!(n2 > 0.0) || !std::isfinite(n2)) throw DegenerateStateError("normalize: state has zero norm");
  return PureTwoMode(state.coeffs() / std::sqrt(n2));
}

TruncationReport truncation_report(const PureTwoMode& state, double tolerance) {
  const int last = state.n_max();
  const CMatrix& c = state.coeffs();
  TruncationReport rep;
  rep.total = c.squaredNorm();
  rep.tail_weight = c.row(last).squaredNorm() + c.col(last).head(last).squaredNorm();
  rep.ok = rep.tail_weight <= tolerance * rep.total;
  return rep;
}

}  // namespace fockcat

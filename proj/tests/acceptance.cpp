// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fockcat/entanglement.hpp"
#include "fockcat/states.hpp"
#include "fockcat/subtraction.hpp"
#include "fockcat/sweep.hpp"
#include "oracles.hpp"

using namespace fockcat;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool cond, const std::string& what) {
    if (!cond) ok = false;
    detail << (detail.tellp() > 0 ? "; " : "") << what << (cond ? "" : " [failed]");
  }
};

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

template <class Rec>
const Rec& argmax(const std::vector<Rec>& v) {
  return *std::max_element(v.begin(), v.end(), [](const Rec& a, const Rec& b) { return a.E < b.E; });
}

ScenarioConfig realistic(double lambda, Scheme scheme, double eta = 1.0) {
  ScenarioConfig c;
  c.lambda = lambda;
  c.scheme = scheme;
  c.eta = eta;
  c.R_S = 0.1;
  return c;
}

// ---------- criteria ----------

void qutrit_entropy(Check& c) {
  const double e = entropy_of_entanglement(qutrit_state(SplitterParam::balanced(), 10)).value;
  c.expect(std::abs(e - 1.5) <= 1e-9, "E_S(qutrit, R=0.5)=" + num(e));
  CMatrix m = CMatrix::Zero(3, 3);
  for (int i = 0; i < 3; ++i) m(i, 2 - i) = 1.0 / std::sqrt(3.0);
  const double e3 = entropy_of_entanglement(PureTwoMode(m)).value;
  c.expect(std::abs(e3 - std::log2(3.0)) <= 1e-9, "E_S(max qutrit)=" + num(e3));
}

void weak_single_subtraction(Check& c) {
  for (double R : {0.5, 1.0 / 3.0}) {
    ScenarioConfig cfg;
    cfg.model = Model::ideal;
    cfg.lambda = 0.01;
    cfg.R = R;
    cfg.alpha_grid = {-0.2, 0.2, 81};
    const auto recs = sweep_single_alpha(cfg);
    const SweepRecord& top = argmax(recs);
    const double target = R == 0.5 ? 1.0 : oracle::binary_entropy(1.0 / 3.0);
    c.expect(std::abs(top.alpha) <= 0.0025, "R=" + num(R) + " argmax alpha=" + num(top.alpha));
    c.expect(std::abs(top.E - target) <= 0.005, "R=" + num(R) + " max E=" + num(top.E));
  }
}

void hyperbola_structure(Check& c) {
  const SqueezeParam sq(0.01);
  const SplitterParam sp = SplitterParam::balanced();
  const CutResult plateau = hyperbola_cut(sq, sp, Grid{0.01, 0.05, 41}.values());
  double lo = 1e9, hi = -1e9, at_lo = 0.0;
  for (const auto& r : plateau.records) {
    if (r.E < lo) {
      lo = r.E;
      at_lo = r.alpha;
    }
    hi = std::max(hi, r.E);
  }
  c.expect(lo >= 0.99 && hi <= 1.01,
           "plateau E in [" + num(lo) + ", " + num(hi) + "] (min at alpha=" + num(at_lo) + ")");
  const CutResult peak = hyperbola_cut(sq, sp, Grid{0.05, 0.1, 501}.values());
  const SweepRecord& top = argmax(peak.records);
  const double expected = std::sqrt(0.01) * sp.t();
  c.expect(std::abs(top.alpha - expected) <= 1e-3 && top.E >= 1.45,
           "peak E=" + num(top.E) + " at alpha=" + num(top.alpha));
}

void closed_form_oracles(Check& c) {
  double worst = 0.0;
  for (double lambda : {0.1, 0.2, 0.4}) {
    const SqueezeParam sq(lambda);
    const SplitterParam sp = SplitterParam::balanced();
    const PureTwoMode in = PureTwoMode::product(smsv(sq, 20), FockVector::vacuum(20));
    const PureTwoMode evolved = beamsplitter_apply(in, sp.t(), sp.r()).resized(10);
    worst = std::max(worst, max_abs_diff(evolved.coeffs(), split_smsv(sq, sp, 10).coeffs()));
  }
  c.expect(worst <= 1e-10, "split state vs splitter evolution max diff=" + num(worst));

  const TapOff tap = TapOff::from_reflectance(0.1);
  const PureTwoMode in = split_smsv(SqueezeParam(0.2), SplitterParam::balanced(), 4);
  double worst3 = 0.0;
  for (Complex alpha : {Complex(0.0), Complex(0.2), Complex(0.5)})
    for (int k = 1; k <= 4; ++k) {
      const CMatrix ref = oracle::three_mode_branch(in.coeffs(), alpha, k, tap.t, tap.r, 16);
      worst3 = std::max(worst3, max_abs_diff(subtract_branch_single(in, alpha, k, tap.t, tap.r).coeffs(), ref));
    }
  c.expect(worst3 <= 1e-8, "tap-off branch vs three-mode simulation max diff=" + num(worst3));
}

void filter_operator_identity(Check& c) {
  const TapOff tap = TapOff::from_reflectance(0.1);
  const PureTwoMode in = split_smsv(SqueezeParam(0.2), SplitterParam::balanced(), 10);
  double worst = 0.0;
  for (int k : {1, 2})
    for (double alpha : {0.0, 0.2, 0.5}) {
      const PureTwoMode lhs = subtract_branch_single(in, alpha, k, tap.t, tap.r, Frame::undisplaced);
      const PureTwoMode rhs = apply_local(in, filter_operator(k, alpha, tap.t, tap.r, 10), std::nullopt);
      worst = std::max(worst, max_abs_diff(lhs.coeffs(), rhs.coeffs()));
    }
  c.expect(worst <= 1e-7, "frame identity max diff=" + num(worst));

  // alpha = 0: (r^k / sqrt(k!)) t^n a^k.
  double worst0 = 0.0;
  for (int k : {1, 2, 3}) {
    CMatrix ak = CMatrix::Identity(11, 11);
    for (int i = 0; i < k; ++i) ak = annihilation_matrix(10).matrix() * ak;
    const CMatrix ref = std::pow(tap.r, k) / std::sqrt(oracle::factorial(k)) * attenuation_matrix(tap.t, 10).matrix() * ak;
    worst0 = std::max(worst0, max_abs_diff(filter_operator(k, 0.0, tap.t, tap.r, 10).matrix(), ref));
  }
  c.expect(worst0 <= 1e-12, "alpha=0 limit max diff=" + num(worst0));

  // r_S -> 0: F sqrt(k!) / r^k -> (a + alpha)^k.
  const double rs = 1e-6, ts = std::sqrt(1.0 - rs * rs);
  double worst_r = 0.0;
  for (int k : {1, 2, 3}) {
    CMatrix ref = CMatrix::Identity(11, 11);
    for (int i = 0; i < k; ++i) ref = (annihilation_matrix(10).matrix() + 0.3 * CMatrix::Identity(11, 11)) * ref;
    const CMatrix got = filter_operator(k, 0.3, ts, rs, 10).matrix() * (std::sqrt(oracle::factorial(k)) / std::pow(rs, k));
    worst_r = std::max(worst_r, max_abs_diff(got, ref));
  }
  c.expect(worst_r <= 1e-8, "weak-tap limit max diff=" + num(worst_r));
}

void realistic_single(Check& c) {
  ScenarioConfig cfg = realistic(0.2, Scheme::single);
  cfg.alpha_grid = {-0.5, 0.5, 41};
  const SweepRecord& top = argmax(sweep_single_alpha(cfg));
  c.expect(top.alpha == 0.0, "argmax alpha=" + num(top.alpha) + " (E_N=" + num(top.E) + ")");

  const double e = evaluate_point(realistic(0.05, Scheme::single, 0.1), 0.0).E;
  c.expect(e > 0.9, "E_N(lambda=0.05, eta=0.1)=" + num(e));

  const double p1 = *evaluate_point(realistic(0.2, Scheme::single, 1.0), 0.0).P;
  const double p05 = *evaluate_point(realistic(0.2, Scheme::single, 0.5), 0.0).P;
  c.expect(std::abs(p05 / p1 - 0.5) <= 0.05, "P1(0.5)/P1(1)=" + num(p05 / p1));
}

void realistic_double(Check& c) {
  for (double lambda : {0.05, 0.1, 0.2}) {
    const DiagonalOptimum opt = optimize_diagonal(realistic(lambda, Scheme::both));
    const double ref = std::sqrt(lambda / 2.0);
    c.expect(std::abs(opt.alpha_opt - ref) <= 0.1 * ref && !opt.at_boundary,
             "lambda=" + num(lambda) + " alpha_opt=" + num(opt.alpha_opt) + " vs " + num(ref));
  }
  const DiagonalOptimum opt = optimize_diagonal(realistic(0.2, Scheme::both));
  const double single = evaluate_point(realistic(0.2, Scheme::single), 0.0).E;
  c.expect(opt.E_N > single, "double E_N=" + num(opt.E_N) + " > single E_N=" + num(single));
  const double p05 = *evaluate_point(realistic(0.2, Scheme::both, 0.5), opt.alpha_opt, -opt.alpha_opt).P;
  c.expect(std::abs(p05 / opt.P2 - 0.25) <= 0.04, "P2(0.5)/P2(1)=" + num(p05 / opt.P2));
}

void unbalanced_splitter(Check& c) {
  const ReflectanceOptimum opt = optimize_input_reflectance(realistic(0.2, Scheme::single));
  c.expect(opt.R_opt >= 0.500 && opt.R_opt <= 0.510,
           "R_opt=" + num(opt.R_opt) + " (E=" + num(opt.E) + ", balanced " + num(opt.E_balanced) + ")");
}

PureTwoMode displaced_locally(const PureTwoMode& s, Complex da, Complex db, int pad) {
  const PureTwoMode big = s.resized(s.n_max() + pad);
  const int side = big.side();
  return apply_local(big, displacement_matrix(da, side, side), displacement_matrix(db, side, side));
}

void property_suites(Check& c) {
  // Local unitary invariance under small displacements.
  const PureTwoMode q = qutrit_state(SplitterParam::from_reflectance(0.4), 2);
  const double e0 = entropy_of_entanglement(q).value;
  const double e1 = entropy_of_entanglement(displaced_locally(q, 0.05, Complex(0.0, -0.03), 30)).value;
  c.expect(std::abs(e1 - e0) < 1e-6, "E_S drift=" + num(std::abs(e1 - e0)));

  const PureTwoMode in = split_smsv(SqueezeParam(0.1), SplitterParam::balanced(), 6);
  const BranchEnsemble ens = mixed_output_double(in, SubtractionParams::symmetric(0.1, 0.8, 6, 0.2, -0.2));
  BranchEnsemble moved = ens;
  for (Branch& b : moved.branches) b.state = displaced_locally(b.state, 0.04, -0.02, 14);
  const double n0 = log_negativity(density_from_ensemble(ens)).value;
  const double n1 = log_negativity(density_from_ensemble(moved)).value;
  c.expect(std::abs(n1 - n0) < 1e-6, "E_N drift=" + num(std::abs(n1 - n0)));

  // S(rho_A) = S(rho_B).
  double worst_s = 0.0;
  std::mt19937_64 rng(2024);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 10; ++trial) {
    CMatrix m(6, 6);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) m(i, j) = Complex(g(rng), g(rng));
    const PureTwoMode s(m);
    worst_s = std::max(worst_s, std::abs(von_neumann_entropy(reduced_state_a(s)) - von_neumann_entropy(reduced_state_b(s))));
  }
  for (const Branch& b : ens.branches) {
    if (norm2(b.state) < 1e-30) continue;
    worst_s = std::max(worst_s, std::abs(von_neumann_entropy(reduced_state_a(b.state)) -
                                         von_neumann_entropy(reduced_state_b(b.state))));
  }
  c.expect(worst_s <= 1e-8, "|S_A - S_B| max=" + num(worst_s));

  // Completeness of photon-count events.
  const TapOff tap = TapOff::from_reflectance(0.1);
  const PureTwoMode full = split_smsv(SqueezeParam(0.2), SplitterParam::balanced(), 10);
  double worst_c = 0.0;
  for (Complex alpha : {Complex(0.0), Complex(0.3), Complex(0.5, -0.2)}) {
    double total = 0.0;
    for (int k = 0; k <= 10; ++k) total += norm2(photon_count_branch(full, alpha, k, tap));
    worst_c = std::max(worst_c, std::abs(total - norm2(full)));
  }
  c.expect(worst_c <= kDefaultTailTolerance, "completeness deficit=" + num(worst_c));

  // Parity of every input state.
  bool parity = true;
  for (double lambda : {0.01, 0.2, 0.4})
    for (double R : {0.1, 0.5, 0.8}) {
      const SplitterParam sp = SplitterParam::from_reflectance(R);
      for (const PureTwoMode& s : {split_smsv(SqueezeParam(lambda), sp, 10), weak_input(SqueezeParam(lambda), sp, 10),
                                   qutrit_state(sp, 10)})
        for (int m = 0; m <= 10; ++m)
          for (int n = 0; n <= 10; ++n)
            if ((m + n) % 2 && s(m, n) != Complex(0.0)) parity = false;
    }
  c.expect(parity, "even parity of inputs");

  // Determinism.
  ScenarioConfig cfg = realistic(0.2, Scheme::both, 0.7);
  cfg.alpha_grid = cfg.beta_grid = {-0.4, 0.4, 5};
  ScenarioConfig single = realistic(0.2, Scheme::single, 0.7);
  single.alpha_grid = {-0.4, 0.4, 9};
  const bool same = sweep_double_grid(cfg) == sweep_double_grid(cfg) &&
                    sweep_single_alpha(single) == sweep_single_alpha(single) &&
                    curves_vs_lambda(cfg, {0.1, 0.2}, {1.0, 0.5}) == curves_vs_lambda(cfg, {0.1, 0.2}, {1.0, 0.5});
  c.expect(same, "repeated sweeps bit-identical");
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<void(Check&)> run;
  };
  const std::vector<Criterion> criteria = {
      {"qutrit entropy", qutrit_entropy},
      {"weak-squeezing single subtraction", weak_single_subtraction},
      {"hyperbola structure", hyperbola_structure},
      {"closed-form consistency", closed_form_oracles},
      {"filter-operator identity", filter_operator_identity},
      {"realistic single-mode scheme", realistic_single},
      {"realistic double-mode scheme", realistic_double},
      {"unbalanced splitter", unbalanced_splitter},
      {"property suites", property_suites},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check check;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].run(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %zu %s (%.1fs): %s\n", check.ok ? "PASS" : "FAIL", i + 1, criteria[i].name, secs,
                check.detail.str().c_str());
    if (!check.ok) ++failed;
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed ? 1 : 0;
}

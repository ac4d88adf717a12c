#pragma once

#include <complex>
#include <stdexcept>

namespace scarfii {

using cplx = std::complex<double>;

/// Seed parameters (alpha, beta, gamma) of the hyperbolic potential
///   V(x) = (alpha^2 - beta^2 + gamma^2/4 + 2 alpha beta sinh(gamma x)) / cosh^2(gamma x).
/// gamma defaults to 2, the normalization used throughout the test suites.
struct BaseParams {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 2.0;

  BaseParams() = default;
  BaseParams(double a, double b, double g = 2.0) : alpha(a), beta(b), gamma(g) {
    if (!(gamma > 0.0)) throw std::invalid_argument("BaseParams: gamma must be > 0");
  }
};

/// Integer offsets on the two-parameter Hamiltonian lattice.
/// Effective parameters are alpha + gamma*k*i (complex) and beta + gamma*m (real);
/// the Hamiltonian is real exactly when k = 0.
struct LatticeLabel {
  BaseParams base;
  int k = 0;
  int m = 0;

  LatticeLabel() = default;
  LatticeLabel(BaseParams b, int kk = 0, int mm = 0) : base(b), k(kk), m(mm) {}
  LatticeLabel(double a, double b, int kk = 0, int mm = 0) : base(a, b), k(kk), m(mm) {}

  bool is_real() const { return k == 0; }
};

/// Parameters actually entering the potential and the ladder coefficients.
struct EffectiveParams {
  cplx alpha_eff;
  double beta_eff = 0.0;
  double gamma = 2.0;
};

inline EffectiveParams effective(const LatticeLabel& label) {
  const double g = label.base.gamma;
  return EffectiveParams{cplx(label.base.alpha, g * label.k),
                         label.base.beta + g * label.m, g};
}

/// Lattice moves (the ladder steps): beta +/- gamma, alpha +/- gamma*i.
inline LatticeLabel shifted_m(const LatticeLabel& l, int dm) {
  return LatticeLabel{l.base, l.k, l.m + dm};
}
inline LatticeLabel shifted_k(const LatticeLabel& l, int dk) {
  return LatticeLabel{l.base, l.k + dk, l.m};
}

}  // namespace scarfii

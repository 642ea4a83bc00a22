#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <limits>

#include "pbiharm/errors.hpp"

namespace pbiharm {

using Array = Eigen::ArrayXd;
using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Exponent pair (p, p') with 1/p + 1/p' = 1.
struct Exponent {
  double p;
  double pPrime;

  explicit Exponent(double pVal) : p(pVal), pPrime(pVal / (pVal - 1.0)) {
    if (!(pVal > 1.0) || !std::isfinite(pVal))
      throw GridError("Exponent: p must be a finite real > 1, got " + std::to_string(pVal));
  }

  /// Conjugate exponent (p', p).
  Exponent conjugate() const { return Exponent(pPrime); }
};

/// Odd power map s -> |s|^(p-2) s, extended by 0 at s = 0 (also for 1 < p < 2).
template <typename Scalar>
inline Scalar phiP(Scalar s, const Exponent& e) {
  if (s == Scalar(0)) return Scalar(0);
  using std::abs;
  using std::pow;
  return pow(abs(s), Scalar(e.p - 1)) * (s > Scalar(0) ? Scalar(1) : Scalar(-1));
}

/// Inverse of phiP: phi_{p'}.
template <typename Scalar>
inline Scalar phiPInv(Scalar s, const Exponent& e) {
  if (s == Scalar(0)) return Scalar(0);
  using std::abs;
  using std::pow;
  return pow(abs(s), Scalar(e.pPrime - 1)) * (s > Scalar(0) ? Scalar(1) : Scalar(-1));
}

/// Elementwise phiP on an Eigen array expression.
template <typename Derived>
inline Array phiP(const Eigen::ArrayBase<Derived>& s, const Exponent& e) {
  return s.derived().unaryExpr([&e](double x) { return phiP(x, e); });
}

template <typename Derived>
inline Array phiPInv(const Eigen::ArrayBase<Derived>& s, const Exponent& e) {
  return s.derived().unaryExpr([&e](double x) { return phiPInv(x, e); });
}

/// Values of a function at the interior nodes x_i = i*h, i = 1..n, of a uniform
/// grid on [0,1] with h = 1/(n+1). Boundary values are zero by convention.
struct GridFunction {
  int n = 0;
  double h = 0.0;
  Array values;

  GridFunction() = default;
  GridFunction(int nNodes, Array vals) : n(nNodes), h(1.0 / (nNodes + 1)), values(std::move(vals)) {
    if (values.size() != n) throw GridError("GridFunction: values length does not match n");
    if (!values.allFinite()) throw GridError("GridFunction: non-finite node values");
  }

  /// Zero grid function with n interior nodes.
  static GridFunction zero(int nNodes) { return GridFunction(nNodes, Array::Zero(nNodes)); }

  /// Samples of f at the interior nodes.
  template <typename F>
  static GridFunction sample(int nNodes, F&& f) {
    Array v(nNodes);
    const double h = 1.0 / (nNodes + 1);
    for (int i = 0; i < nNodes; ++i) v[i] = f((i + 1) * h);
    return GridFunction(nNodes, std::move(v));
  }

  double x(int i) const { return (i + 1) * h; }
};

/// Central second difference at the interior nodes, with the implied zero
/// Dirichlet boundary values u(0) = u(1) = 0.
inline Array secondDifference(const GridFunction& u) {
  const int n = u.n;
  const double invH2 = 1.0 / (u.h * u.h);
  Array d(n);
  for (int i = 0; i < n; ++i) {
    const double left = (i == 0) ? 0.0 : u.values[i - 1];
    const double right = (i == n - 1) ? 0.0 : u.values[i + 1];
    d[i] = (left - 2.0 * u.values[i] + right) * invH2;
  }
  return d;
}

/// (1/p) * sum_i |D2 u(x_i)|^p * h  -- rectangle-rule discretization of the
/// bending energy. Nonnegative, zero only for the zero grid function.
inline double energyA(const GridFunction& u, const Exponent& e) {
  if (u.n < 3) throw GridError("energyA: grid too small (n < 3)");
  const Array d2 = secondDifference(u);
  return d2.abs().pow(e.p).sum() * u.h / e.p;
}

/// (1/p) * sum_i m(x_i) |u(x_i)|^p * h. Sign-unrestricted for sign-changing m.
inline double energyB(const GridFunction& u, const GridFunction& m, const Exponent& e) {
  if (u.n != m.n) throw GridError("energyB: weight sampled on a different grid");
  return (m.values * u.values.abs().pow(e.p)).sum() * u.h / e.p;
}

/// Rayleigh quotient energyA/energyB (the 1/p factors cancel).
inline double rayleigh(const GridFunction& u, const GridFunction& m, const Exponent& e,
                       double epsDenominator = 1e-14) {
  const double a = energyA(u, e);
  const double b = energyB(u, m, e);
  if (std::abs(b) < epsDenominator)
    throw ZeroDenominator("rayleigh: |energyB| below epsilon, u is numerically m-orthogonal");
  return a / b;
}

}  // namespace pbiharm

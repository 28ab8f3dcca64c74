#pragma once

#include <complex>
#include <vector>

#include "bellpf/boson.hpp"
#include "bellpf/egf.hpp"
#include "bellpf/fock.hpp"
#include "bellpf/polynomial.hpp"
#include "bellpf/zpolynomial.hpp"

namespace bellpf {

struct SingularDecomposition : std::domain_error {
  using std::domain_error::domain_error;
};

struct DivergentIntegrand : std::domain_error {
  using std::domain_error::domain_error;
};

// ---- free boson gas, H = eps * ad a, x = -beta*eps ----

struct FreeGasParams {
  double beta_eps = 0.0;
};

// (1 - e^{-beta eps})^{-1}
double free_gas_Z_closed(const FreeGasParams& p);

// <z|exp(x ad a)|z> = exp(|z|^2 (e^x - 1))
double free_gas_pfi(double x, std::complex<double> z);

// Radial integral int_0^inf exp(y (e^x - 1)) dy with the exact exponential
// tail appended; throws DivergentIntegrand when e^x - 1 >= 0.
double free_gas_Z_quadrature(const FreeGasParams& p, double tol = 1e-8);

// Swapping the y integral with the Bell-polynomial sum makes every single
// term divergent, so this path is rejected outright.
[[noreturn]] void free_gas_Z_term_by_term();

// exp(-beta eps * n_hat) at truncation n, through the matrix exponential.
fock::Matrix free_gas_thermal_matrix(double beta_eps, int n);

// ---- su(1,1) superfluid model ----
// H = eps { c1/2 a^2 + conj(c1)/2 ad^2 + c2 (ad a + 1/2) }, x = -beta*eps,
// x1 = x c1, x2 = x c2.

struct Su11Params {
  std::complex<double> c1;
  double c2 = 0.0;
  double x = 0.0;
};

struct Su11Disentanglement {
  std::complex<double> delta;   // principal sqrt of delta^2 = x^2(c2^2 - |c1|^2)
  std::complex<double> mu;
  std::complex<double> y1;      // lower Gauss factor coefficient
  std::complex<double> y1_bar;  // upper factor coefficient (= conj(y1) here)
  std::complex<double> y2;      // -log mu
  double reconstruction_error = 0.0;  // max-norm of product minus exp(generator)
};

// Gauss decomposition exp(x1 K- + conj(x1) K+ + 2 x2 K0) =
// exp(y1_bar K+) exp(2 y2 K0) exp(y1 K-) read off the closed-form 2x2
// exponential cosh(delta) I + sinch(delta^2) X; throws SingularDecomposition
// when |mu| < 1e-12.
Su11Disentanglement su11_disentangle(const Su11Params& p);

// PFI from the disentangled form:
// exp(y1_bar zbar^2 / 2) exp(|z|^2 (e^{y2} - 1)) exp(y1 z^2 / 2) e^{y2/2}.
std::complex<double> su11_pfi(const Su11Params& p, std::complex<double> z);

// Real closed form sqrt(1/mu) exp(y (y1 + 1/mu - 1)), y = z^2; needs real c1.
double su11_pfi_real(const Su11Params& p, double z);

// (1/pi) int F d^2 z after the angular reduction to
// e^{y2/2} int_0^inf e^{au} I0(bu) du with a = 1/mu - 1, b = |y1|;
// throws DivergentIntegrand unless a + b < 0.
double su11_Z_quadrature(const Su11Params& p, double tol = 1e-8);

// Generator matrix w (Hermitian, checked) and exp(x w) at truncation n.
fock::Matrix su11_generator_matrix(const Su11Params& p, int n);
fock::Matrix su11_thermal_matrix(const Su11Params& p, int n);

// ---- exact series in x (real rational c1, c2) ----

// mu as an egf in x: even coefficients s^m, odd ones -c2 s^m, s = c2^2 - c1^2.
RationalEgf su11_mu_series(const Rational& c1, const Rational& c2, unsigned order);

struct PfiVnSeries {
  unsigned order = 0;
  std::vector<Polynomial> vn;          // V_1(y)..V_M(y), constants included
  std::vector<Rational> constant_log;  // the y-free parts, -(1/2)(log mu)_n
};

// log F(x,y) = -(1/2) log mu + y (y1 + 1/mu - 1) expanded exactly;
// V_n(y) is the coefficient of x^n/n!.
PfiVnSeries su11_vn_series(const Rational& c1, const Rational& c2, unsigned order);

// F(x,y) itself as an exact bivariate egf, built the other way around
// (sqrt of 1/mu times exp of the y part) for round-trip checks.
BivariateEgf su11_pfi_series(const Rational& c1, const Rational& c2, unsigned order);

// The braced Hamiltonian string as an expression tree.
ExprPtr su11_operator_expr(const Rational& c1, const Rational& c2);

// ---- generic PFI series for any operator string ----

struct GeneralPfiSeries {
  unsigned order = 0;
  std::vector<ZPolynomial> wn;  // W_1..W_M, with W_0 = 1 implicit
  std::vector<ZPolynomial> vn;  // V_1..V_M
};

// W_n = <z|w^n|z> symbolically, V_n from the egf log.
GeneralPfiSeries general_pfi_series(const ExprPtr& w, unsigned order, unsigned cap = 10);

}  // namespace bellpf

#include "bellpf/partition.hpp"

#include <cmath>

#include "bellpf/quadrature.hpp"

namespace bellpf {

namespace {

void require_positive_beta(const FreeGasParams& p) {
  if (!(p.beta_eps > 0)) throw std::domain_error("free gas: beta*eps must be positive");
}

// cosh(sqrt(t)) continued through t < 0, where it becomes cos(sqrt(-t)).
double cosh_from_sq(double t) {
  if (std::abs(t) < 1e-12) return 1.0 + t / 2.0 + t * t / 24.0;
  return t > 0 ? std::cosh(std::sqrt(t)) : std::cos(std::sqrt(-t));
}

// sinh(sqrt(t))/sqrt(t), even in sqrt(t), likewise continued.
double sinch_from_sq(double t) {
  if (std::abs(t) < 1e-12) return 1.0 + t / 6.0 + t * t / 120.0;
  if (t > 0) {
    const double d = std::sqrt(t);
    return std::sinh(d) / d;
  }
  const double d = std::sqrt(-t);
  return std::sin(d) / d;
}

}  // namespace

double free_gas_Z_closed(const FreeGasParams& p) {
  require_positive_beta(p);
  return 1.0 / (1.0 - std::exp(-p.beta_eps));
}

double free_gas_pfi(double x, std::complex<double> z) {
  return std::exp(std::norm(z) * (std::exp(x) - 1.0));
}

double free_gas_Z_quadrature(const FreeGasParams& p, double tol) {
  require_positive_beta(p);
  const double alpha = std::exp(-p.beta_eps) - 1.0;
  if (alpha >= 0) {
    throw DivergentIntegrand("free gas quadrature: integrand does not decay (e^x - 1 >= 0)");
  }
  // Cutoff where the exact tail e^{alpha Y}/(-alpha) is tiny, then add it back.
  const double upper = (std::log(tol) - 5.0 + std::log(-alpha)) / alpha;
  QuadratureResult body =
      integrate_adaptive([alpha](double y) { return std::exp(alpha * y); }, 0.0, upper, tol / 2);
  const double tail = std::exp(alpha * upper) / (-alpha);
  return body.value + tail;
}

void free_gas_Z_term_by_term() {
  throw DivergentIntegrand(
      "term-by-term radial integration of the Bell-polynomial expansion fails: every "
      "int_0^inf B_n(y) dy diverges separately; integrate the resummed exponential instead");
}

fock::Matrix free_gas_thermal_matrix(double beta_eps, int n) {
  return fock::matrix_exponential(fock::number_operator(n), -beta_eps);
}

Su11Disentanglement su11_disentangle(const Su11Params& p) {
  using C = std::complex<double>;
  const C x1 = p.x * p.c1;
  const double x2 = p.x * p.c2;
  const double delta_sq = x2 * x2 - std::norm(x1);

  const double ch = cosh_from_sq(delta_sq);
  const double sc = sinch_from_sq(delta_sq);

  // Generator X = x1 K- + conj(x1) K+ + 2 x2 K0 in the 2x2 representation,
  // with K+ = [[0,1],[0,0]], K- = [[0,0],[-1,0]], K0 = diag(1/2,-1/2):
  // X = [[x2, conj(x1)], [-x1, -x2]], X^2 = delta^2 I, so
  // exp(X) = cosh(delta) I + sinch(delta) X.
  const C m11 = ch + sc * x2;
  const C m12 = sc * std::conj(x1);
  const C m21 = -sc * x1;
  const C m22 = ch - sc * x2;

  Su11Disentanglement d;
  d.delta = std::sqrt(C(delta_sq));
  d.mu = m22;
  if (std::abs(d.mu) < 1e-12) {
    throw SingularDecomposition("su11_disentangle: mu vanished, Gauss decomposition undefined");
  }
  d.y2 = -std::log(d.mu);
  d.y1 = -m21 / m22;
  d.y1_bar = m12 / m22;

  // Rebuild exp(y1_bar K+) exp(2 y2 K0) exp(y1 K-) and compare entrywise:
  // [[e^{y2} - y1_bar y1 e^{-y2}, y1_bar e^{-y2}], [-y1 e^{-y2}, e^{-y2}]].
  const C ey2 = std::exp(d.y2);
  const C emy2 = std::exp(-d.y2);
  const C r11 = ey2 - d.y1_bar * d.y1 * emy2;
  const C r12 = d.y1_bar * emy2;
  const C r21 = -d.y1 * emy2;
  const C r22 = emy2;
  d.reconstruction_error =
      std::max(std::max(std::abs(r11 - m11), std::abs(r12 - m12)),
               std::max(std::abs(r21 - m21), std::abs(r22 - m22)));
  return d;
}

std::complex<double> su11_pfi(const Su11Params& p, std::complex<double> z) {
  using C = std::complex<double>;
  const Su11Disentanglement d = su11_disentangle(p);
  const C zbar = std::conj(z);
  const C exponent = 0.5 * d.y1_bar * zbar * zbar +
                     std::norm(z) * (1.0 / d.mu - 1.0) + 0.5 * d.y1 * z * z + 0.5 * d.y2;
  return std::exp(exponent);
}

double su11_pfi_real(const Su11Params& p, double z) {
  if (p.c1.imag() != 0.0) {
    throw std::invalid_argument("su11_pfi_real: closed form needs real c1");
  }
  const double c1 = p.c1.real();
  const double delta_sq = p.x * p.x * (p.c2 * p.c2 - c1 * c1);
  const double ch = cosh_from_sq(delta_sq);
  const double sc = sinch_from_sq(delta_sq);
  const double mu = ch - p.x * p.c2 * sc;
  if (!(mu > 1e-12)) {
    throw SingularDecomposition("su11_pfi_real: mu must be positive for the real form");
  }
  const double y1 = p.x * c1 * sc / mu;
  const double y = z * z;
  return std::sqrt(1.0 / mu) * std::exp(y * (y1 + 1.0 / mu - 1.0));
}

double su11_Z_quadrature(const Su11Params& p, double tol) {
  const Su11Disentanglement d = su11_disentangle(p);
  if (std::abs(d.mu.imag()) > 1e-12 * std::abs(d.mu) || d.mu.real() <= 0) {
    throw SingularDecomposition("su11_Z_quadrature: needs real positive mu");
  }
  const double mu = d.mu.real();
  const double a = 1.0 / mu - 1.0;
  const double b = std::abs(d.y1);
  const double decay = a + b;
  if (!(decay < 0)) {
    throw DivergentIntegrand("su11_Z_quadrature: integrand does not decay (1/mu - 1 + |y1| >= 0)");
  }
  // e^{au} I0(bu) = e^{(a+b)u} * i0_scaled(bu); pick the cutoff from the
  // decaying envelope, append the first-order tail estimate.
  const double upper = (std::log(tol) - 7.0 + std::log(-decay)) / decay;
  auto integrand = [a, b](double u) { return std::exp((a + b) * u) * i0_scaled(b * u); };
  QuadratureResult body = integrate_adaptive(integrand, 0.0, upper, tol / 2);
  const double tail = i0_scaled(b * upper) * std::exp(decay * upper) / (-decay);
  return std::sqrt(1.0 / mu) * (body.value + tail);
}

fock::Matrix su11_generator_matrix(const Su11Params& p, int n) {
  using C = std::complex<double>;
  const fock::Matrix a = fock::build_annihilation(n);
  const fock::Matrix ad = fock::build_creation(n);
  fock::Matrix w = 0.5 * p.c1 * (a * a) + 0.5 * std::conj(p.c1) * (ad * ad) +
                   C(p.c2) * (ad * a + 0.5 * fock::Matrix::Identity(n, n));
  const double herm = (w - w.adjoint()).cwiseAbs().maxCoeff();
  if (herm > 1e-12 * std::max(1.0, w.cwiseAbs().maxCoeff())) {
    throw std::logic_error("su11_generator_matrix: generator not Hermitian");
  }
  return w;
}

fock::Matrix su11_thermal_matrix(const Su11Params& p, int n) {
  return fock::matrix_exponential(su11_generator_matrix(p, n), p.x);
}

RationalEgf su11_mu_series(const Rational& c1, const Rational& c2, unsigned order) {
  const Rational s = c2 * c2 - c1 * c1;
  RationalEgf mu(order);
  Rational spow(1);
  for (unsigned m = 0; 2 * m <= order; ++m) {
    if (m > 0) spow *= s;
    mu[2 * m] = spow;                         // cosh(delta) part
    if (2 * m + 1 <= order) {
      mu[2 * m + 1] = -c2 * spow;             // -x c2 sinh(delta)/delta part
    }
  }
  return mu;
}

PfiVnSeries su11_vn_series(const Rational& c1, const Rational& c2, unsigned order) {
  const RationalEgf mu = su11_mu_series(c1, c2, order);
  const RationalEgf mu_inv = egf_reciprocal(mu);
  const RationalEgf log_mu = egf_log(mu);

  // y1 = x c1 (sinh delta / delta) / mu: even series s^m/(2m+1), shifted.
  const Rational s = c2 * c2 - c1 * c1;
  RationalEgf sinch(order);
  Rational spow(1);
  for (unsigned m = 0; 2 * m <= order; ++m) {
    if (m > 0) spow *= s;
    sinch[2 * m] = spow / Rational(2 * m + 1);
  }
  RationalEgf y1 = mul_by_x(sinch) * mu_inv;
  y1 *= c1;

  PfiVnSeries out;
  out.order = order;
  const Rational half(1, 2);
  for (unsigned n = 1; n <= order; ++n) {
    Rational constant = -half * log_mu[n];
    Rational linear = y1[n] + mu_inv[n];  // the -1 only touches n = 0
    Polynomial v(constant);
    v += Polynomial::monomial(1, linear);
    out.vn.push_back(std::move(v));
    out.constant_log.push_back(std::move(constant));
  }
  return out;
}

BivariateEgf su11_pfi_series(const Rational& c1, const Rational& c2, unsigned order) {
  const RationalEgf mu = su11_mu_series(c1, c2, order);
  const RationalEgf mu_inv = egf_reciprocal(mu);
  const RationalEgf root = egf_sqrt(mu_inv);

  const Rational s = c2 * c2 - c1 * c1;
  RationalEgf sinch(order);
  Rational spow(1);
  for (unsigned m = 0; 2 * m <= order; ++m) {
    if (m > 0) spow *= s;
    sinch[2 * m] = spow / Rational(2 * m + 1);
  }
  RationalEgf y1 = mul_by_x(sinch) * mu_inv;
  y1 *= c1;

  // y * (y1 + 1/mu - 1) has zero constant term; exponentiate and multiply by
  // the square-root prefactor.
  BivariateEgf arg(order);
  for (unsigned n = 1; n <= order; ++n) {
    Rational c = y1[n] + mu_inv[n];
    arg[n] = Polynomial::monomial(1, c);
  }
  return to_bivariate(root) * egf_exp(arg);
}

ExprPtr su11_operator_expr(const Rational& c1, const Rational& c2) {
  const ExprPtr a = make_letter(BosonOp::Ann);
  const ExprPtr ad = make_letter(BosonOp::Cre);
  const Rational half(1, 2);
  ExprPtr t1 = make_product({make_literal(half * c1), make_power(a, 2)});
  ExprPtr t2 = make_product({make_literal(half * c1), make_power(ad, 2)});
  ExprPtr number_plus_half = make_sum({make_product({ad, a}), make_literal(half)});
  ExprPtr t3 = make_product({make_literal(c2), number_plus_half});
  return make_sum({std::move(t1), std::move(t2), std::move(t3)});
}

GeneralPfiSeries general_pfi_series(const ExprPtr& w, unsigned order, unsigned cap) {
  if (order > cap) {
    throw std::invalid_argument("general_pfi_series: order exceeds the configured cap");
  }
  const NormalPolynomial base = normal_order(w);
  GeneralPfiSeries out;
  out.order = order;

  EgfSeries<ZPolynomial> wseries(order);
  wseries[0] = ZPolynomial(1);
  NormalPolynomial wpow = NormalPolynomial::identity();
  for (unsigned n = 1; n <= order; ++n) {
    wpow = wpow * base;
    ZPolynomial wn = coherent_expectation(wpow);
    out.wn.push_back(wn);
    wseries[n] = std::move(wn);
  }
  EgfSeries<ZPolynomial> vseries = egf_log(wseries);
  for (unsigned n = 1; n <= order; ++n) out.vn.push_back(vseries[n]);
  return out;
}

}  // namespace bellpf

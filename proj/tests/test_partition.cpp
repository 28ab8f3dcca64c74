#include "doctest.h"

#include <cmath>
#include <complex>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "bellpf/combinatorics.hpp"
#include "bellpf/partition.hpp"

using namespace bellpf;

namespace {

double egf_eval(const RationalEgf& s, double x) {
  double acc = 0.0;
  double xpow = 1.0;
  double fact = 1.0;
  for (unsigned n = 0; n <= s.order(); ++n) {
    if (n > 0) {
      xpow *= x;
      fact *= n;
    }
    acc += s[n].get_d() * xpow / fact;
  }
  return acc;
}

Polynomial linear(const Rational& c0, const Rational& c1) {
  Polynomial p(c0);
  p += Polynomial::monomial(1, c1);
  return p;
}

}  // namespace

TEST_CASE("free gas closed form") {
  CHECK(free_gas_Z_closed({std::log(2.0)}) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(free_gas_Z_closed({1.0}) ==
        doctest::Approx(1.0 / (1.0 - std::exp(-1.0))).epsilon(1e-14));
  CHECK_THROWS_AS(free_gas_Z_closed({0.0}), std::domain_error);
  CHECK_THROWS_AS(free_gas_Z_closed({-1.0}), std::domain_error);
}

TEST_CASE("free gas integrand") {
  CHECK(free_gas_pfi(0.0, {1.0, 0.0}) == 1.0);
  CHECK(free_gas_pfi(-1.0, {0.0, 0.0}) == 1.0);
  CHECK(free_gas_pfi(-1.0, {1.0, 0.0}) ==
        doctest::Approx(std::exp(std::expm1(-1.0))).epsilon(1e-14));
}

TEST_CASE("free gas quadrature matches the closed form") {
  for (double beta_eps : {0.1, std::log(2.0), 1.0, 3.0}) {
    CAPTURE(beta_eps);
    double got = free_gas_Z_quadrature({beta_eps}, 1e-10);
    CHECK(got == doctest::Approx(free_gas_Z_closed({beta_eps})).epsilon(1e-9));
  }
  CHECK_THROWS_AS(free_gas_Z_quadrature({0.0}), std::domain_error);
}

TEST_CASE("term-by-term integration is rejected as divergent") {
  CHECK_THROWS_AS(free_gas_Z_term_by_term(), DivergentIntegrand);
}

TEST_CASE("free gas trace oracle agrees with the closed form") {
  double got = fock::trace_thermal([](int n) { return free_gas_thermal_matrix(1.0, n); }, 1e-10);
  CHECK(got == doctest::Approx(free_gas_Z_closed({1.0})).epsilon(1e-10));
}

TEST_CASE("disentanglement at x = 0 is the identity") {
  Su11Disentanglement d = su11_disentangle({{1.0, 0.0}, 3.0, 0.0});
  CHECK(std::abs(d.mu - 1.0) < 1e-14);
  CHECK(std::abs(d.y1) < 1e-14);
  CHECK(std::abs(d.y2) < 1e-14);
  CHECK(d.reconstruction_error < 1e-14);
}

TEST_CASE("disentanglement of the pure number generator") {
  // c1 = 0, c2 = 1, x = -1: the 2x2 exponential is diag(e^{-1/?}...) and
  // mu = cosh(1) + sinh(1) = e
  Su11Disentanglement d = su11_disentangle({{0.0, 0.0}, 1.0, -1.0});
  CHECK(std::abs(d.mu - std::exp(1.0)) < 1e-12);
  CHECK(std::abs(d.y1) < 1e-14);
  CHECK(std::abs(d.y1_bar) < 1e-14);
  CHECK(std::abs(d.y2 - std::complex<double>(-1.0)) < 1e-12);
}

TEST_CASE("disentanglement reproduces the 2x2 exponential on the grid") {
  using C = std::complex<double>;
  for (auto [c1, c2] : {std::pair{0.0, 1.0}, {1.0, 3.0}, {2.0, 4.0}}) {
    for (double x : {-0.2, -0.1, -0.05}) {
      CAPTURE(c1);
      CAPTURE(c2);
      CAPTURE(x);
      Su11Params p{{c1, 0.0}, c2, x};
      Su11Disentanglement d = su11_disentangle(p);
      CHECK(d.reconstruction_error < 1e-12);

      // independent oracle: numeric exponential of the generator matrix
      Eigen::Matrix2cd gen;
      const C x1 = p.x * p.c1;
      const double x2 = p.x * p.c2;
      gen << C(x2), std::conj(x1), -x1, C(-x2);
      Eigen::Matrix2cd m = gen.exp();
      CHECK(std::abs(d.mu - m(1, 1)) < 1e-13);
      CHECK(std::abs(d.y1 - (-m(1, 0) / m(1, 1))) < 1e-13);
      CHECK(std::abs(d.y1_bar - m(0, 1) / m(1, 1)) < 1e-13);

      Eigen::Matrix2cd rebuilt;
      const C ey2 = std::exp(d.y2);
      const C emy2 = std::exp(-d.y2);
      rebuilt << ey2 - d.y1_bar * d.y1 * emy2, d.y1_bar * emy2, -d.y1 * emy2, emy2;
      CHECK((rebuilt - m).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("singular decomposition is detected") {
  // c1 = 2, c2 = 0 makes mu = cos(2|x|), which vanishes at x = pi/4
  Su11Params p{{2.0, 0.0}, 0.0, std::acos(-1.0) / 4.0};
  CHECK_THROWS_AS(su11_disentangle(p), SingularDecomposition);
}

TEST_CASE("integrand at z = 0 is the inverse square root of mu") {
  Su11Params p{{1.0, 0.0}, 3.0, -0.1};
  Su11Disentanglement d = su11_disentangle(p);
  std::complex<double> f0 = su11_pfi(p, 0.0);
  CHECK(std::abs(f0 - std::sqrt(1.0 / d.mu)) < 1e-13);
}

TEST_CASE("real closed form equals the complex one at real z") {
  for (auto [c1, c2] : {std::pair{0.0, 1.0}, {1.0, 3.0}, {2.0, 4.0}}) {
    for (double x : {-0.2, -0.1, -0.05}) {
      for (double z : {0.0, 0.5, 1.0}) {
        Su11Params p{{c1, 0.0}, c2, x};
        std::complex<double> full = su11_pfi(p, z);
        CHECK(std::abs(full.imag()) < 1e-13);
        CHECK(full.real() == doctest::Approx(su11_pfi_real(p, z)).epsilon(1e-12));
      }
    }
  }
  CHECK_THROWS_AS(su11_pfi_real({{0.0, 1.0}, 3.0, -0.1}, 0.5), std::invalid_argument);
}

TEST_CASE("integrand matches the truncated-space expectation") {
  // spot checks; the full grid runs in the acceptance suite
  for (auto [c1, c2, x, z] :
       {std::tuple{1.0, 3.0, -0.1, 1.0}, {2.0, 4.0, -0.2, 0.5}, {0.0, 1.0, -0.05, 1.0}}) {
    CAPTURE(c1);
    CAPTURE(c2);
    CAPTURE(x);
    Su11Params p{{c1, 0.0}, c2, x};
    std::complex<double> closed = su11_pfi(p, z);
    std::complex<double> numeric = fock::coherent_matrix_expectation(
        [&p](int n) { return su11_thermal_matrix(p, n); }, z, 1e-10, 100, 800);
    CHECK(std::abs(closed - numeric) < 1e-8);
  }
}

TEST_CASE("su11 generator matrix entries") {
  Su11Params p{{2.0, 0.0}, 4.0, -0.1};
  fock::Matrix w = su11_generator_matrix(p, 8);
  CHECK(std::abs(w(0, 0) - std::complex<double>(4.0 * 0.5)) < 1e-14);
  CHECK(std::abs(w(1, 1) - std::complex<double>(4.0 * 1.5)) < 1e-14);
  CHECK(std::abs(w(0, 2) - std::complex<double>(0.5 * 2.0 * std::sqrt(2.0))) < 1e-14);
  CHECK(std::abs(w(2, 0) - std::complex<double>(0.5 * 2.0 * std::sqrt(2.0))) < 1e-14);
  CHECK(std::abs(w(0, 1)) == 0.0);
}

TEST_CASE("partition function quadrature: number-generator case") {
  // c1 = 0 reduces to the shifted free gas: Z = e^{x/2}/(1 - e^x)
  Su11Params p{{0.0, 0.0}, 1.0, -1.0};
  double want = std::exp(-0.5) / (1.0 - std::exp(-1.0));
  CHECK(su11_Z_quadrature(p, 1e-10) == doctest::Approx(want).epsilon(1e-8));
}

TEST_CASE("partition function quadrature vs the thermal trace") {
  Su11Params p{{1.0, 0.0}, 3.0, -0.2};
  double viaq = su11_Z_quadrature(p, 1e-9);
  double viat = fock::trace_thermal([&p](int n) { return su11_thermal_matrix(p, n); }, 1e-9);
  CHECK(viaq == doctest::Approx(viat).epsilon(1e-6));
}

TEST_CASE("quadrature refuses non-decaying integrands") {
  // x > 0 heats the gas: 1/mu - 1 >= 0
  CHECK_THROWS_AS(su11_Z_quadrature({{0.0, 0.0}, 1.0, 0.1}), DivergentIntegrand);
}

TEST_CASE("mu series evaluates to the disentangled mu") {
  for (auto [c1, c2] : {std::pair{1, 3}, {2, 4}}) {
    RationalEgf mu = su11_mu_series(Rational(c1), Rational(c2), 24);
    for (double x : {-0.2, -0.1, -0.05}) {
      Su11Disentanglement d =
          su11_disentangle({{static_cast<double>(c1), 0.0}, static_cast<double>(c2), x});
      CHECK(egf_eval(mu, x) == doctest::Approx(d.mu.real()).epsilon(1e-13));
    }
  }
}

TEST_CASE("vertex multiplier table for c1 = 2, c2 = 4") {
  PfiVnSeries s = su11_vn_series(Rational(2), Rational(4), 4);
  REQUIRE(s.vn.size() == 4);
  CHECK(s.vn[0] == linear(Rational(2), Rational(6)));
  CHECK(s.vn[1] == linear(Rational(2), Rational(36)));
  CHECK(s.vn[2] == linear(Rational(16), Rational(288)));
  CHECK(s.vn[3] == linear(Rational(144), Rational(3024)));
  CHECK(s.constant_log[0] == Rational(2));
  CHECK(s.constant_log[3] == Rational(144));
  CHECK(s.vn[0].to_text() == "2 + 6*y");
}

TEST_CASE("vertex multipliers collapse to the free gas at c1 = 0, c2 = 1") {
  PfiVnSeries s = su11_vn_series(Rational(0), Rational(1), 6);
  CHECK(s.vn[0] == linear(Rational(1, 2), Rational(1)));
  for (unsigned n = 2; n <= 6; ++n) {
    CHECK(s.vn[n - 1] == Polynomial::monomial(1, Rational(1)));
  }
}

TEST_CASE("vertex multipliers are degree one with integer entries for even inputs") {
  PfiVnSeries s = su11_vn_series(Rational(2), Rational(4), 8);
  for (const Polynomial& v : s.vn) {
    CHECK(v.degree() <= 1);
    for (const Rational& c : v.coeffs()) {
      CHECK(c.get_den() == 1);
    }
  }
}

TEST_CASE("exponentiating the multipliers returns the integrand series") {
  for (auto [c1, c2] : {std::pair{1, 3}, {2, 4}}) {
    CAPTURE(c1);
    CAPTURE(c2);
    PfiVnSeries v = su11_vn_series(Rational(c1), Rational(c2), 8);
    BivariateEgf w = su11_pfi_series(Rational(c1), Rational(c2), 8);
    CHECK(v_to_w(v.vn) == w);
    std::vector<Polynomial> back = w_to_v(w);
    REQUIRE(back.size() == 8);
    for (unsigned n = 0; n < 8; ++n) CHECK(back[n] == v.vn[n]);
  }
}

TEST_CASE("integrand series evaluates to the closed form") {
  BivariateEgf w = su11_pfi_series(Rational(1), Rational(3), 24);
  Su11Params p{{1.0, 0.0}, 3.0, -0.1};
  for (double z : {0.0, 0.5, 1.0}) {
    double y = z * z;
    double acc = 0.0;
    double xpow = 1.0;
    double fact = 1.0;
    for (unsigned n = 0; n <= 24; ++n) {
      if (n > 0) {
        xpow *= -0.1;
        fact *= n;
      }
      acc += w[n].evaluate(y) * xpow / fact;
    }
    CHECK(acc == doctest::Approx(su11_pfi_real(p, z)).epsilon(1e-12));
  }
}

TEST_CASE("operator string for the quadratic generator") {
  ExprPtr e = su11_operator_expr(Rational(2), Rational(4));
  CHECK(pretty_print(e) == "1*a^2 + 1*ad^2 + 4*(ad*a + 1/2)");
  NormalPolynomial nf = normal_order(e);
  CHECK(nf.coeff(0, 2) == Rational(1));
  CHECK(nf.coeff(2, 0) == Rational(1));
  CHECK(nf.coeff(1, 1) == Rational(4));
  CHECK(nf.coeff(0, 0) == Rational(2));
}

TEST_CASE("general series for the number operator gives bell polynomials") {
  GeneralPfiSeries s = general_pfi_series(parse_expression("ad*a"), 6);
  StirlingTable table;
  for (unsigned n = 1; n <= 6; ++n) {
    const ZPolynomial& wn = s.wn[n - 1];
    for (unsigned k = 1; k <= n; ++k) {
      CHECK(wn.coeff(k, k) == ComplexRational(Rational(table(n, k))));
    }
    // V_n = |z|^2 exactly, all orders
    CHECK(s.vn[n - 1] == ZPolynomial::monomial(1, 1, ComplexRational(1)));
  }
}

TEST_CASE("general series for a constant string") {
  GeneralPfiSeries s = general_pfi_series(make_literal(Rational(1)), 4);
  CHECK(s.vn[0] == ZPolynomial(1));
  for (unsigned n = 2; n <= 4; ++n) CHECK(s.vn[n - 1].is_zero());
}

TEST_CASE("general series of the quadratic string matches the exact expansion") {
  GeneralPfiSeries s = general_pfi_series(su11_operator_expr(Rational(2), Rational(4)), 4);
  PfiVnSeries exact = su11_vn_series(Rational(2), Rational(4), 4);
  for (unsigned n = 1; n <= 4; ++n) {
    CAPTURE(n);
    CHECK(s.vn[n - 1].collapse_real_z() == exact.vn[n - 1]);
  }
}

TEST_CASE("general series respects its order cap") {
  CHECK_THROWS_AS(general_pfi_series(parse_expression("ad*a"), 11, 10), std::invalid_argument);
  CHECK_NOTHROW(general_pfi_series(parse_expression("ad*a"), 3, 3));
}

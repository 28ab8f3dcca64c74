#include "doctest.h"

#include <random>
#include <stdexcept>

#include "bellpf/combinatorics.hpp"
#include "bellpf/egf.hpp"

using namespace bellpf;

namespace {

RationalEgf random_series(std::mt19937& rng, unsigned order, bool zero_head, bool unit_head) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  RationalEgf s(order);
  for (unsigned n = 0; n <= order; ++n) {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    s[n] = q;
  }
  if (zero_head) s[0] = 0;
  if (unit_head) s[0] = 1;
  return s;
}

}  // namespace

TEST_CASE("egf product is the binomial convolution") {
  // e^x * e^x = e^{2x}
  RationalEgf ex(8);
  for (unsigned n = 0; n <= 8; ++n) ex[n] = 1;
  RationalEgf sq = ex * ex;
  Rational p(1);
  for (unsigned n = 0; n <= 8; ++n) {
    CHECK(sq[n] == p);
    p *= 2;
  }

  // x * x has only the n=2 coefficient, equal to 2
  RationalEgf x = RationalEgf::x(6);
  RationalEgf xx = x * x;
  for (unsigned n = 0; n <= 6; ++n) {
    CHECK(xx[n] == (n == 2 ? Rational(2) : Rational(0)));
  }

  // identity element
  RationalEgf one = RationalEgf::constant(6, Rational(1));
  std::mt19937 rng(11);
  RationalEgf a = random_series(rng, 6, false, false);
  CHECK(a * one == a);
}

TEST_CASE("egf arithmetic requires matching orders") {
  RationalEgf a(4), b(5);
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  CHECK_THROWS_AS(a * b, std::invalid_argument);
  CHECK(a + b.truncated(4) == a);
  CHECK_THROWS_AS(a.truncated(9), std::invalid_argument);
}

TEST_CASE("egf multiplication is commutative and associative") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    RationalEgf a = random_series(rng, 10, false, false);
    RationalEgf b = random_series(rng, 10, false, false);
    RationalEgf c = random_series(rng, 10, false, false);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("egf_exp of the all-ones connected series gives bell numbers") {
  RationalEgf c(16);
  for (unsigned n = 1; n <= 16; ++n) c[n] = 1;
  RationalEgf a = egf_exp(c);
  for (unsigned n = 0; n <= 16; ++n) {
    CAPTURE(n);
    CHECK(a[n] == Rational(bell(n)));
  }
}

TEST_CASE("egf_exp basics") {
  RationalEgf zero(5);
  RationalEgf one = egf_exp(zero);
  CHECK(one == RationalEgf::constant(5, Rational(1)));

  RationalEgf x = RationalEgf::x(7);
  RationalEgf ex = egf_exp(x);
  for (unsigned n = 0; n <= 7; ++n) CHECK(ex[n] == 1);

  RationalEgf bad = RationalEgf::constant(4, Rational(2));
  CHECK_THROWS_AS(egf_exp(bad), std::domain_error);
}

TEST_CASE("egf_log inverts egf_exp and vice versa") {
  // log of the bell egf is e^x - 1
  RationalEgf bell_egf(12);
  for (unsigned n = 0; n <= 12; ++n) bell_egf[n] = Rational(bell(n));
  RationalEgf c = egf_log(bell_egf);
  CHECK(c[0] == 0);
  for (unsigned n = 1; n <= 12; ++n) CHECK(c[n] == 1);

  RationalEgf one = RationalEgf::constant(6, Rational(1));
  CHECK(egf_log(one) == RationalEgf(6));

  CHECK_THROWS_AS(egf_log(RationalEgf(3)), std::domain_error);

  std::mt19937 rng(37);
  for (int trial = 0; trial < 12; ++trial) {
    RationalEgf s = random_series(rng, 12, true, false);
    CHECK(egf_log(egf_exp(s)) == s);
    RationalEgf u = random_series(rng, 12, false, true);
    CHECK(egf_exp(egf_log(u)) == u);
  }
}

TEST_CASE("egf_reciprocal multiplies back to one") {
  RationalEgf one = RationalEgf::constant(8, Rational(1));
  CHECK(egf_reciprocal(one) == one);

  // 1 - x in egf form
  RationalEgf s(8);
  s[0] = 1;
  s[1] = -1;
  CHECK(egf_reciprocal(s) * s == one);

  std::mt19937 rng(41);
  for (int trial = 0; trial < 12; ++trial) {
    RationalEgf a = random_series(rng, 9, false, false);
    if (a[0] == 0) a[0] = 3;
    RationalEgf prod = egf_reciprocal(a) * a;
    CHECK(prod == RationalEgf::constant(9, Rational(1)));
  }

  CHECK_THROWS_AS(egf_reciprocal(RationalEgf(4)), std::domain_error);
}

TEST_CASE("egf_sqrt squares back") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 12; ++trial) {
    RationalEgf a = random_series(rng, 12, false, true);
    RationalEgf r = egf_sqrt(a);
    CHECK(r * r == a);
  }
  CHECK_THROWS_AS(egf_sqrt(RationalEgf::constant(3, Rational(4))), std::domain_error);
}

TEST_CASE("mul_by_x reindexes with the egf weight") {
  RationalEgf ex(6);
  for (unsigned n = 0; n <= 6; ++n) ex[n] = 1;
  RationalEgf xex = mul_by_x(ex);
  CHECK(xex[0] == 0);
  for (unsigned n = 1; n <= 6; ++n) CHECK(xex[n] == n);
}

TEST_CASE("w_to_v maps the bell-polynomial family to constant y") {
  // W_n(y) = B_n(y) comes from exp(y(e^x - 1)), so V_n(y) = y for n >= 1.
  const unsigned order = 8;
  BivariateEgf w(order);
  for (unsigned n = 0; n <= order; ++n) w[n] = bell_polynomial(n);
  std::vector<Polynomial> v = w_to_v(w);
  REQUIRE(v.size() == order);
  for (const auto& vn : v) {
    CHECK(vn == Polynomial::variable());
  }
}

TEST_CASE("w_to_v of the trivial series is zero") {
  BivariateEgf w(5);
  w[0] = Polynomial(1);
  for (const auto& vn : w_to_v(w)) CHECK(vn.is_zero());
  BivariateEgf bad(3);
  bad[0] = Polynomial(2);
  CHECK_THROWS_AS(w_to_v(bad), std::domain_error);
}

TEST_CASE("v_to_w inverts w_to_v on random polynomial series") {
  std::mt19937 rng(53);
  std::uniform_int_distribution<int> coeff(-4, 4);
  for (int trial = 0; trial < 8; ++trial) {
    BivariateEgf w(8);
    w[0] = Polynomial(1);
    for (unsigned n = 1; n <= 8; ++n) {
      Polynomial p;
      for (int d = 0; d <= 2; ++d) {
        p += Polynomial::monomial(d, Rational(coeff(rng)));
      }
      w[n] = p;
    }
    CHECK(v_to_w(w_to_v(w)) == w);
  }
}

TEST_CASE("exp and log work with polynomial coefficients") {
  // exp(y(e^x - 1)) built coefficientwise equals the bell-polynomial series.
  const unsigned order = 10;
  BivariateEgf c(order);
  for (unsigned n = 1; n <= order; ++n) c[n] = Polynomial::variable();
  BivariateEgf w = egf_exp(c);
  for (unsigned n = 0; n <= order; ++n) {
    CAPTURE(n);
    CHECK(w[n] == bell_polynomial(n));
  }
}

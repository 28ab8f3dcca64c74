#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "bellpf/exact.hpp"
#include "bellpf/polynomial.hpp"

namespace bellpf {

// Truncated exponential generating function sum_{n=0}^{M} a_n x^n/n!.
// Coefficients are stored as a_n (not a_n/n!), so the product is the binomial
// convolution c_n = sum_k C(n,k) a_k b_{n-k}. Coeff is an exact ring type:
// Rational or Polynomial. Arithmetic requires equal truncation order; use
// truncated() to align orders explicitly.
template <typename Coeff>
class EgfSeries {
 public:
  explicit EgfSeries(unsigned order) : a_(order + 1, Coeff(0)) {}
  EgfSeries(unsigned order, std::vector<Coeff> coeffs) : a_(std::move(coeffs)) {
    if (a_.size() != order + 1) {
      throw std::invalid_argument("EgfSeries: need order+1 coefficients");
    }
  }

  static EgfSeries constant(unsigned order, Coeff c) {
    EgfSeries s(order);
    s.a_[0] = std::move(c);
    return s;
  }
  // The series x itself (a_1 = 1).
  static EgfSeries x(unsigned order) {
    EgfSeries s(order);
    if (order >= 1) s.a_[1] = Coeff(1);
    return s;
  }

  unsigned order() const { return static_cast<unsigned>(a_.size()) - 1; }
  const Coeff& operator[](size_t n) const { return a_[n]; }
  Coeff& operator[](size_t n) { return a_[n]; }
  const std::vector<Coeff>& coeffs() const { return a_; }

  EgfSeries truncated(unsigned new_order) const {
    if (new_order > order()) {
      throw std::invalid_argument("EgfSeries::truncated: cannot extend order");
    }
    return EgfSeries(new_order, std::vector<Coeff>(a_.begin(), a_.begin() + new_order + 1));
  }

  EgfSeries& operator+=(const EgfSeries& o) {
    check_order(o);
    for (size_t n = 0; n < a_.size(); ++n) a_[n] += o.a_[n];
    return *this;
  }
  EgfSeries& operator-=(const EgfSeries& o) {
    check_order(o);
    for (size_t n = 0; n < a_.size(); ++n) a_[n] -= o.a_[n];
    return *this;
  }
  EgfSeries& operator*=(const EgfSeries& o) {
    check_order(o);
    const unsigned M = order();
    std::vector<Coeff> out(M + 1, Coeff(0));
    for (unsigned n = 0; n <= M; ++n) {
      for (unsigned k = 0; k <= n; ++k) {
        Coeff term = a_[k] * o.a_[n - k];
        out[n] += term * Rational(binomial(n, k));
      }
    }
    a_ = std::move(out);
    return *this;
  }
  EgfSeries& operator*=(const Coeff& c) {
    for (auto& v : a_) v = v * c;
    return *this;
  }

  friend EgfSeries operator+(EgfSeries a, const EgfSeries& b) { return a += b; }
  friend EgfSeries operator-(EgfSeries a, const EgfSeries& b) { return a -= b; }
  friend EgfSeries operator*(EgfSeries a, const EgfSeries& b) { return a *= b; }
  friend EgfSeries operator*(EgfSeries a, const Coeff& c) { return a *= c; }
  friend EgfSeries operator*(const Coeff& c, EgfSeries a) { return a *= c; }
  friend bool operator==(const EgfSeries& a, const EgfSeries& b) { return a.a_ == b.a_; }

 private:
  void check_order(const EgfSeries& o) const {
    if (o.a_.size() != a_.size()) {
      throw std::invalid_argument("EgfSeries: truncation order mismatch");
    }
  }
  std::vector<Coeff> a_;
};

using RationalEgf = EgfSeries<Rational>;
using BivariateEgf = EgfSeries<Polynomial>;

inline BivariateEgf to_bivariate(const RationalEgf& a) {
  std::vector<Polynomial> c;
  c.reserve(a.order() + 1);
  for (const auto& q : a.coeffs()) c.emplace_back(q);
  return BivariateEgf(a.order(), std::move(c));
}

// x * A(x): shifts coefficients with the egf reindexing b_n = n a_{n-1}.
template <typename Coeff>
EgfSeries<Coeff> mul_by_x(const EgfSeries<Coeff>& a) {
  EgfSeries<Coeff> b(a.order());
  for (unsigned n = 1; n <= a.order(); ++n) {
    b[n] = a[n - 1] * Rational(n);
  }
  return b;
}

// exp of a series with zero constant term, via the recurrence from
// A' = C' A: a_{n+1} = sum_{k=0}^{n} C(n,k) c_{k+1} a_{n-k}, a_0 = 1.
template <typename Coeff>
EgfSeries<Coeff> egf_exp(const EgfSeries<Coeff>& c) {
  if (!(c[0] == Coeff(0))) {
    throw std::domain_error("egf_exp: constant term must be zero");
  }
  const unsigned M = c.order();
  EgfSeries<Coeff> a(M);
  a[0] = Coeff(1);
  for (unsigned n = 0; n + 1 <= M; ++n) {
    Coeff s(0);
    for (unsigned k = 0; k <= n; ++k) {
      Coeff term = c[k + 1] * a[n - k];
      s += term * Rational(binomial(n, k));
    }
    a[n + 1] = std::move(s);
  }
  return a;
}

// log of a series with constant term one, inverting the exp recurrence:
// c_{n+1} = a_{n+1} - sum_{k=0}^{n-1} C(n,k) c_{k+1} a_{n-k}.
template <typename Coeff>
EgfSeries<Coeff> egf_log(const EgfSeries<Coeff>& a) {
  if (!(a[0] == Coeff(1))) {
    throw std::domain_error("egf_log: constant term must be one");
  }
  const unsigned M = a.order();
  EgfSeries<Coeff> c(M);
  for (unsigned n = 0; n + 1 <= M; ++n) {
    Coeff s = a[n + 1];
    for (unsigned k = 0; k + 1 <= n; ++k) {
      Coeff term = c[k + 1] * a[n - k];
      s -= term * Rational(binomial(n, k));
    }
    c[n + 1] = std::move(s);
  }
  return c;
}

// 1/A for a_0 != 0: b_0 = 1/a_0, b_n = -(1/a_0) sum_{k=1}^n C(n,k) a_k b_{n-k}.
inline RationalEgf egf_reciprocal(const RationalEgf& a) {
  if (a[0] == 0) {
    throw std::domain_error("egf_reciprocal: constant term must be nonzero");
  }
  const unsigned M = a.order();
  RationalEgf b(M);
  Rational inv0 = Rational(1) / a[0];
  b[0] = inv0;
  for (unsigned n = 1; n <= M; ++n) {
    Rational s(0);
    for (unsigned k = 1; k <= n; ++k) {
      s += Rational(binomial(n, k)) * a[k] * b[n - k];
    }
    b[n] = -inv0 * s;
  }
  return b;
}

// sqrt(A) for a_0 = 1: b_n = (a_n - sum_{k=1}^{n-1} C(n,k) b_k b_{n-k}) / 2.
inline RationalEgf egf_sqrt(const RationalEgf& a) {
  if (!(a[0] == 1)) {
    throw std::domain_error("egf_sqrt: constant term must be one");
  }
  const unsigned M = a.order();
  RationalEgf b(M);
  b[0] = 1;
  for (unsigned n = 1; n <= M; ++n) {
    Rational s = a[n];
    for (unsigned k = 1; k + 1 <= n; ++k) {
      s -= Rational(binomial(n, k)) * b[k] * b[n - k];
    }
    b[n] = s / 2;
  }
  return b;
}

// Vertex multipliers V_1..V_M from a PFI series W with W_0 = 1:
// exp(sum V_n x^n/n!) = sum W_n x^n/n!.
inline std::vector<Polynomial> w_to_v(const BivariateEgf& w) {
  if (!(w[0] == Polynomial(1))) {
    throw std::domain_error("w_to_v: W_0 must be one");
  }
  BivariateEgf v = egf_log(w);
  std::vector<Polynomial> out;
  out.reserve(w.order());
  for (unsigned n = 1; n <= w.order(); ++n) out.push_back(v[n]);
  return out;
}

inline BivariateEgf v_to_w(const std::vector<Polynomial>& v) {
  const unsigned M = static_cast<unsigned>(v.size());
  BivariateEgf c(M);
  for (unsigned n = 1; n <= M; ++n) c[n] = v[n - 1];
  return egf_exp(c);
}

}  // namespace bellpf

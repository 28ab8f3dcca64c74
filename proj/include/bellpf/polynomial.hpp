#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bellpf/exact.hpp"

namespace bellpf {

/// Dense univariate polynomial over exact rationals, coefficients stored in
/// ascending powers with no trailing zeros (the zero polynomial stores none).
/// Used for Bell polynomials B_n(y) and vertex multipliers V_n(y).
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(int c) : Polynomial(Rational(c)) {}
  Polynomial(Rational c) {
    if (c != 0) coeffs_.push_back(std::move(c));
  }
  explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  /// The monomial y.
  static Polynomial variable() { return monomial(1, Rational(1)); }
  static Polynomial monomial(int power, Rational c);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of the zero polynomial is reported as 0.
  int degree() const { return coeffs_.empty() ? 0 : static_cast<int>(coeffs_.size()) - 1; }
  Rational coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(coeffs_.size())) ? coeffs_[k] : Rational(0);
  }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Rational evaluate(const Rational& y) const;
  double evaluate(double y) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Human-readable form, e.g. "2 + 6*y".
  std::string to_text(std::string_view var = "y") const;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

}  // namespace bellpf

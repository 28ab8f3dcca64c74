#pragma once

#include <complex>
#include <map>
#include <string>
#include <utility>

#include "bellpf/exact.hpp"
#include "bellpf/polynomial.hpp"

namespace bellpf {

// Polynomial in z and conj(z) with exact complex coefficients: the image of a
// normally ordered operator under <z|.|z>, term (p,q) standing for
// conj(z)^p z^q. Supports the ring operations needed to sit as an egf
// coefficient type.
class ZPolynomial {
 public:
  using Key = std::pair<unsigned, unsigned>;  // (conj(z) power, z power)

  ZPolynomial() = default;
  ZPolynomial(int c) { add_term(0, 0, ComplexRational(c)); }
  explicit ZPolynomial(ComplexRational c) { add_term(0, 0, std::move(c)); }

  static ZPolynomial monomial(unsigned p, unsigned q, ComplexRational c) {
    ZPolynomial out;
    out.add_term(p, q, std::move(c));
    return out;
  }

  const std::map<Key, ComplexRational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  ComplexRational coeff(unsigned p, unsigned q) const;
  void add_term(unsigned p, unsigned q, const ComplexRational& c);

  ZPolynomial& operator+=(const ZPolynomial& o);
  ZPolynomial& operator-=(const ZPolynomial& o);
  ZPolynomial& operator*=(const ZPolynomial& o);

  friend ZPolynomial operator+(ZPolynomial a, const ZPolynomial& b) { return a += b; }
  friend ZPolynomial operator-(ZPolynomial a, const ZPolynomial& b) { return a -= b; }
  friend ZPolynomial operator*(const ZPolynomial& a, const ZPolynomial& b);
  friend ZPolynomial operator*(ZPolynomial a, const Rational& c);
  friend ZPolynomial operator*(const Rational& c, ZPolynomial a);
  friend bool operator==(const ZPolynomial& a, const ZPolynomial& b) {
    return a.terms_ == b.terms_;
  }

  std::complex<double> evaluate(std::complex<double> z) const;

  // Specializes to real z, writing conj(z)^p z^q = y^{(p+q)/2} with y = z^2.
  // Requires every term to have even total degree and a real coefficient.
  Polynomial collapse_real_z() const;

  std::string to_text() const;

 private:
  std::map<Key, ComplexRational> terms_;
};

}  // namespace bellpf

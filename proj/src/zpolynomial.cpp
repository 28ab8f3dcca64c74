#include "bellpf/zpolynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace bellpf {

ComplexRational ZPolynomial::coeff(unsigned p, unsigned q) const {
  auto it = terms_.find({p, q});
  return it == terms_.end() ? ComplexRational() : it->second;
}

void ZPolynomial::add_term(unsigned p, unsigned q, const ComplexRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(Key{p, q}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ZPolynomial& ZPolynomial::operator+=(const ZPolynomial& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

ZPolynomial& ZPolynomial::operator-=(const ZPolynomial& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, ComplexRational() - c);
  return *this;
}

ZPolynomial operator*(const ZPolynomial& a, const ZPolynomial& b) {
  ZPolynomial out;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    }
  }
  return out;
}

ZPolynomial& ZPolynomial::operator*=(const ZPolynomial& o) {
  *this = *this * o;
  return *this;
}

ZPolynomial operator*(ZPolynomial a, const Rational& c) {
  ZPolynomial out;
  ComplexRational cc{c};
  for (const auto& [k, v] : a.terms_) out.add_term(k.first, k.second, v * cc);
  return out;
}

ZPolynomial operator*(const Rational& c, ZPolynomial a) { return std::move(a) * c; }

std::complex<double> ZPolynomial::evaluate(std::complex<double> z) const {
  std::complex<double> acc = 0.0;
  const std::complex<double> zb = std::conj(z);
  for (const auto& [k, c] : terms_) {
    std::complex<double> t = c.to_complex();
    for (unsigned i = 0; i < k.first; ++i) t *= zb;
    for (unsigned i = 0; i < k.second; ++i) t *= z;
    acc += t;
  }
  return acc;
}

Polynomial ZPolynomial::collapse_real_z() const {
  Polynomial out;
  for (const auto& [k, c] : terms_) {
    unsigned total = k.first + k.second;
    if (total % 2 != 0) {
      throw std::domain_error("collapse_real_z: odd total degree term has no y image");
    }
    if (!(c.im == 0)) {
      throw std::domain_error("collapse_real_z: complex coefficient");
    }
    out += Polynomial::monomial(static_cast<int>(total / 2), c.re);
  }
  return out;
}

std::string ZPolynomial::to_text() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << "(" << to_string(c) << ")";
    if (k.first > 0) {
      out << "*zbar";
      if (k.first > 1) out << "^" << k.first;
    }
    if (k.second > 0) {
      out << "*z";
      if (k.second > 1) out << "^" << k.second;
    }
  }
  return out.str();
}

}  // namespace bellpf

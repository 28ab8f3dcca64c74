#include "bellpf/exact.hpp"

#include <cctype>
#include <stdexcept>

namespace bellpf {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  size_t begin = text.find_first_not_of(" \t");
  size_t end = text.find_last_not_of(" \t");
  if (begin == std::string_view::npos) {
    throw std::invalid_argument("empty rational literal");
  }
  std::string_view s = text.substr(begin, end - begin + 1);

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  const auto bad = [&] {
    return std::invalid_argument("malformed rational literal: '" + std::string(text) + "'");
  };

  std::string_view num = s;
  std::string_view den;
  bool decimal = false;
  if (size_t slash = s.find('/'); slash != std::string_view::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw bad();
  } else if (size_t dot = s.find('.'); dot != std::string_view::npos) {
    decimal = true;
    num = s.substr(0, dot);
    den = s.substr(dot + 1);  // fractional digits
    if (!all_digits(num) || !all_digits(den)) throw bad();
  } else if (!all_digits(num)) {
    throw bad();
  }

  Rational value;
  if (decimal) {
    Integer whole(std::string(num), 10);
    Integer frac(std::string(den), 10);
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, den.size());
    value = make_rational(whole * scale + frac, scale);
  } else if (!den.empty()) {
    Integer n(std::string(num), 10);
    Integer d(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("zero denominator in rational literal");
    value = make_rational(n, d);
  } else {
    value = Rational(Integer(std::string(num), 10));
  }
  if (negative) value = -value;
  return value;
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Integer& n) { return n.get_str(); }

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const ComplexRational& c) {
  if (c.im == 0) return to_string(c.re);
  std::string s = to_string(c.re);
  s += (c.im > 0) ? " + " : " - ";
  s += to_string(Rational(abs(c.im)));
  s += "*i";
  return s;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace bellpf

#include "bellpf/serialize.hpp"

#include <cstdio>

namespace bellpf {

std::string format_double(double v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, v);
  return buf;
}

Json series_json(const RationalEgf& s) {
  Json coeffs = Json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(to_string(c));
  return Json{{"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

Json polynomial_json(const Polynomial& p) {
  Json coeffs = Json::array();
  if (p.is_zero()) {
    coeffs.push_back("0");
    return coeffs;
  }
  for (const auto& c : p.coeffs()) coeffs.push_back(to_string(c));
  return coeffs;
}

Json normal_polynomial_json(const NormalPolynomial& p) {
  Json terms = Json::array();
  for (const auto& [k, c] : p.terms()) {
    terms.push_back(Json{{"p", k.first}, {"q", k.second}, {"coeff", to_string(c)}});
  }
  return Json{{"terms", std::move(terms)}};
}

Json zpolynomial_json(const ZPolynomial& p) {
  Json terms = Json::array();
  for (const auto& [k, c] : p.terms()) {
    terms.push_back(Json{{"p", k.first},
                         {"q", k.second},
                         {"re", to_string(c.re)},
                         {"im", to_string(c.im)}});
  }
  return Json{{"terms", std::move(terms)}};
}

Json vn_series_json(const std::string& model, const Rational& c1, const Rational& c2,
                    const PfiVnSeries& s) {
  Json vn = Json::array();
  for (unsigned n = 1; n <= s.order; ++n) {
    vn.push_back(Json{{"n", n}, {"poly", polynomial_json(s.vn[n - 1])}});
  }
  return Json{{"model", model},
              {"c1", to_string(c1)},
              {"c2", to_string(c2)},
              {"order", s.order},
              {"Vn", std::move(vn)}};
}

}  // namespace bellpf

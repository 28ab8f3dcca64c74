#pragma once

#include <string>

#include "json.hpp"

#include "bellpf/boson.hpp"
#include "bellpf/egf.hpp"
#include "bellpf/partition.hpp"
#include "bellpf/polynomial.hpp"
#include "bellpf/zpolynomial.hpp"

namespace bellpf {

using Json = nlohmann::ordered_json;

// Fixed-precision scientific/shortest formatting, locale-free.
std::string format_double(double v, int precision = 12);

// {"order": M, "coeffs": ["1", "1/2", ...]}
Json series_json(const RationalEgf& s);

// ["2", "6"] ascending powers; the zero polynomial serializes as ["0"].
Json polynomial_json(const Polynomial& p);

// {"terms": [{"p":2,"q":2,"coeff":"3"}, ...]}
Json normal_polynomial_json(const NormalPolynomial& p);

// {"terms": [{"p":1,"q":1,"re":"1","im":"0"}, ...]}
Json zpolynomial_json(const ZPolynomial& p);

// {"model":"su11","c1":"2","c2":"4","order":4,"Vn":[{"n":1,"poly":["2","6"]},...]}
Json vn_series_json(const std::string& model, const Rational& c1, const Rational& c2,
                    const PfiVnSeries& s);

}  // namespace bellpf

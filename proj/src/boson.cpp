#include "bellpf/boson.hpp"

#include <algorithm>
#include <sstream>

#include "bellpf/egf.hpp"

namespace bellpf {

NormalPolynomial NormalPolynomial::monomial(unsigned p, unsigned q, Rational c) {
  NormalPolynomial out;
  out.add_term(p, q, c);
  return out;
}

Rational NormalPolynomial::coeff(unsigned p, unsigned q) const {
  auto it = terms_.find({p, q});
  return it == terms_.end() ? Rational(0) : it->second;
}

void NormalPolynomial::add_term(unsigned p, unsigned q, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(Key{p, q}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

NormalPolynomial NormalPolynomial::times_letter(BosonOp op) const {
  NormalPolynomial out;
  for (const auto& [k, c] : terms_) {
    auto [p, q] = k;
    if (op == BosonOp::Ann) {
      out.add_term(p, q + 1, c);
    } else {
      out.add_term(p + 1, q, c);
      if (q > 0) {
        Rational qc = c * q;
        out.add_term(p, q - 1, qc);
      }
    }
  }
  return out;
}

NormalPolynomial& NormalPolynomial::operator+=(const NormalPolynomial& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

NormalPolynomial& NormalPolynomial::operator-=(const NormalPolynomial& o) {
  for (const auto& [k, c] : o.terms_) {
    Rational neg = -c;
    add_term(k.first, k.second, neg);
  }
  return *this;
}

NormalPolynomial& NormalPolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

NormalPolynomial operator*(const NormalPolynomial& a, const NormalPolynomial& b) {
  NormalPolynomial out;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      const unsigned p = ka.first, q = ka.second;
      const unsigned r = kb.first, s = kb.second;
      Rational cc = ca * cb;
      const unsigned jmax = std::min(q, r);
      for (unsigned j = 0; j <= jmax; ++j) {
        Integer w = factorial(j);
        w *= binomial(q, j);
        w *= binomial(r, j);
        Rational term = cc * Rational(w);
        out.add_term(p + r - j, q - j + s, term);
      }
    }
  }
  return out;
}

std::string NormalPolynomial::to_text() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    auto [p, q] = k;
    const bool unit = (c == 1) && (p + q > 0);
    if (!unit) out << to_string(c);
    bool need_star = !unit;
    if (p > 0) {
      if (need_star) out << "*";
      out << "ad";
      if (p > 1) out << "^" << p;
      need_star = true;
    }
    if (q > 0) {
      if (need_star) out << "*";
      out << "a";
      if (q > 1) out << "^" << q;
    }
  }
  return out.str();
}

NormalPolynomial normal_order(const BosonWord& w) {
  NormalPolynomial acc = NormalPolynomial::identity();
  for (BosonOp op : w) acc = acc.times_letter(op);
  return acc;
}

namespace {

NormalPolynomial pow_normal(const NormalPolynomial& base, unsigned e) {
  NormalPolynomial acc = NormalPolynomial::identity();
  for (unsigned i = 0; i < e; ++i) acc = acc * base;
  return acc;
}

}  // namespace

NormalPolynomial normal_order(const ExprPtr& e) {
  struct Visitor {
    NormalPolynomial operator()(const OperatorExpr::Literal& l) const {
      return NormalPolynomial(l.value);
    }
    NormalPolynomial operator()(const OperatorExpr::Letter& l) const {
      return l.op == BosonOp::Ann ? NormalPolynomial::monomial(0, 1)
                                  : NormalPolynomial::monomial(1, 0);
    }
    NormalPolynomial operator()(const OperatorExpr::Sum& s) const {
      NormalPolynomial acc;
      for (const auto& t : s.terms) acc += normal_order(t);
      return acc;
    }
    NormalPolynomial operator()(const OperatorExpr::Product& p) const {
      NormalPolynomial acc = NormalPolynomial::identity();
      for (const auto& f : p.factors) acc = acc * normal_order(f);
      return acc;
    }
    NormalPolynomial operator()(const OperatorExpr::Power& p) const {
      return pow_normal(normal_order(p.base), p.exponent);
    }
  };
  return std::visit(Visitor{}, e->node);
}

std::map<unsigned, Integer> stirling_from_normal_ordering(unsigned n) {
  if (n == 0) throw std::invalid_argument("stirling_from_normal_ordering: n must be >= 1");
  BosonWord w;
  w.reserve(2 * n);
  for (unsigned i = 0; i < n; ++i) {
    w.push_back(BosonOp::Cre);
    w.push_back(BosonOp::Ann);
  }
  NormalPolynomial nf = normal_order(w);
  std::map<unsigned, Integer> out;
  for (const auto& [k, c] : nf.terms()) {
    if (k.first != k.second) {
      throw std::logic_error("normal form of (ad a)^n has an off-diagonal term");
    }
    if (c.get_den() != 1) {
      throw std::logic_error("normal form of (ad a)^n has a non-integer coefficient");
    }
    out[k.first] = c.get_num();
  }
  return out;
}

ZPolynomial coherent_expectation(const NormalPolynomial& p) {
  ZPolynomial out;
  for (const auto& [k, c] : p.terms()) {
    out.add_term(k.first, k.second, ComplexRational(c));
  }
  return out;
}

std::complex<double> coherent_expectation(const NormalPolynomial& p, std::complex<double> z) {
  return coherent_expectation(p).evaluate(z);
}

std::vector<NormalPolynomial> number_power_normal_forms(unsigned order) {
  std::vector<NormalPolynomial> out;
  out.reserve(order + 1);
  out.push_back(NormalPolynomial::identity());
  for (unsigned n = 1; n <= order; ++n) {
    out.push_back(out.back().times_letter(BosonOp::Cre).times_letter(BosonOp::Ann));
  }
  return out;
}

std::vector<NormalPolynomial> forgetful_exponential_terms(unsigned order) {
  // exp(ad a (e^x - 1)) with ad a treated as a scalar while expanding, then
  // each (ad a)^j frozen in place as (ad)^j a^j. Coefficient of x^n/n! is
  // sum_j [(e^x - 1)^j]_n / j! on the monomial (ad)^j a^j; the powers of
  // e^x - 1 come from the series module, not from the rewrite engine.
  RationalEgf e(order);
  for (unsigned n = 1; n <= order; ++n) e[n] = 1;

  std::vector<NormalPolynomial> out(order + 1);
  RationalEgf epow = RationalEgf::constant(order, Rational(1));
  Rational invfact(1);
  for (unsigned j = 0; j <= order; ++j) {
    if (j > 0) {
      epow *= e;
      invfact /= Rational(j);
    }
    for (unsigned n = 0; n <= order; ++n) {
      Rational c = epow[n] * invfact;
      out[n].add_term(j, j, c);
    }
  }
  return out;
}

ForgetfulReport compare_term_series(const std::vector<NormalPolynomial>& lhs,
                                    const std::vector<NormalPolynomial>& rhs) {
  ForgetfulReport rep;
  if (lhs.empty() || lhs.size() != rhs.size()) {
    throw std::invalid_argument("compare_term_series: series length mismatch");
  }
  rep.order = static_cast<unsigned>(lhs.size()) - 1;
  rep.matches.resize(lhs.size());
  rep.all_match = true;
  for (size_t n = 0; n < lhs.size(); ++n) {
    rep.matches[n] = (lhs[n] == rhs[n]);
    rep.all_match = rep.all_match && rep.matches[n];
  }
  return rep;
}

ForgetfulReport verify_forgetful_identity(unsigned order) {
  if (order == 0) throw std::invalid_argument("verify_forgetful_identity: order must be >= 1");
  return compare_term_series(number_power_normal_forms(order),
                             forgetful_exponential_terms(order));
}

}  // namespace bellpf

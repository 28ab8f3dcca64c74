#pragma once

#include <complex>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bellpf/exact.hpp"
#include "bellpf/zpolynomial.hpp"

namespace bellpf {

enum class BosonOp { Ann, Cre };  // a, a-dagger
using BosonWord = std::vector<BosonOp>;

// Normally ordered operator polynomial: sum of c_{p,q} (ad)^p a^q with exact
// rational coefficients and no zero terms stored.
class NormalPolynomial {
 public:
  using Key = std::pair<unsigned, unsigned>;  // (creation power p, annihilation power q)

  NormalPolynomial() = default;
  NormalPolynomial(int c) { add_term(0, 0, Rational(c)); }
  explicit NormalPolynomial(Rational c) { add_term(0, 0, std::move(c)); }

  static NormalPolynomial identity() { return NormalPolynomial(1); }
  static NormalPolynomial monomial(unsigned p, unsigned q, Rational c = Rational(1));

  const std::map<Key, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(unsigned p, unsigned q) const;
  void add_term(unsigned p, unsigned q, const Rational& c);

  // Right-multiplication by one letter, the workhorse of word ordering:
  // (ad)^p a^q * a  -> (ad)^p a^{q+1}
  // (ad)^p a^q * ad -> (ad)^{p+1} a^q + q (ad)^p a^{q-1}
  NormalPolynomial times_letter(BosonOp op) const;

  NormalPolynomial& operator+=(const NormalPolynomial& o);
  NormalPolynomial& operator-=(const NormalPolynomial& o);
  NormalPolynomial& operator*=(const Rational& c);

  friend NormalPolynomial operator+(NormalPolynomial a, const NormalPolynomial& b) {
    return a += b;
  }
  friend NormalPolynomial operator-(NormalPolynomial a, const NormalPolynomial& b) {
    return a -= b;
  }
  // Full product, contracting across the middle with
  // a^q (ad)^r = sum_j j! C(q,j) C(r,j) (ad)^{r-j} a^{q-j}.
  friend NormalPolynomial operator*(const NormalPolynomial& a, const NormalPolynomial& b);
  friend NormalPolynomial operator*(NormalPolynomial a, const Rational& c) { return a *= c; }
  friend NormalPolynomial operator*(const Rational& c, NormalPolynomial a) { return a *= c; }
  friend bool operator==(const NormalPolynomial& a, const NormalPolynomial& b) {
    return a.terms_ == b.terms_;
  }

  std::string to_text() const;

 private:
  std::map<Key, Rational> terms_;
};

// Operator expression AST. Nodes are immutable and shared.
struct OperatorExpr;
using ExprPtr = std::shared_ptr<const OperatorExpr>;

struct OperatorExpr {
  struct Literal {
    Rational value;
  };
  struct Letter {
    BosonOp op;
  };
  struct Sum {
    std::vector<ExprPtr> terms;
  };
  struct Product {
    std::vector<ExprPtr> factors;
  };
  struct Power {
    ExprPtr base;
    unsigned exponent;
  };
  std::variant<Literal, Letter, Sum, Product, Power> node;
};

ExprPtr make_literal(Rational c);
ExprPtr make_letter(BosonOp op);
ExprPtr make_sum(std::vector<ExprPtr> terms);
ExprPtr make_product(std::vector<ExprPtr> factors);
ExprPtr make_power(ExprPtr base, unsigned exponent);
bool expr_equal(const ExprPtr& a, const ExprPtr& b);

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, size_t offset, std::vector<std::string> expected);
  size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  size_t offset_;
  std::vector<std::string> expected_;
};

// Grammar: expr := term ('+' term)*; term := factor ('*' factor)*;
// factor := base ('^' uint)?; base := rational | 'a' | 'ad' | '(' expr ')'.
ExprPtr parse_expression(std::string_view text);

// Canonical text form; parse_expression(pretty_print(e)) reproduces e.
std::string pretty_print(const ExprPtr& e);

NormalPolynomial normal_order(const BosonWord& w);
NormalPolynomial normal_order(const ExprPtr& e);

// Coefficients of (ad)^k a^k in the normal form of (ad a)^n; equals the
// second-kind Stirling row by the classic normal-ordering expansion.
std::map<unsigned, Integer> stirling_from_normal_ordering(unsigned n);

ZPolynomial coherent_expectation(const NormalPolynomial& p);
std::complex<double> coherent_expectation(const NormalPolynomial& p, std::complex<double> z);

// Both sides of the normal-ordering exponential identity, order by order:
// lhs_n = normal form of (ad a)^n from the rewrite engine,
// rhs_n = n-th coefficient of the forgetfully ordered exp(ad a (e^x - 1)),
// assembled from powers of (e^x - 1) in the series module.
std::vector<NormalPolynomial> number_power_normal_forms(unsigned order);
std::vector<NormalPolynomial> forgetful_exponential_terms(unsigned order);

struct ForgetfulReport {
  unsigned order = 0;
  std::vector<bool> matches;  // per order 0..M
  bool all_match = false;
};

ForgetfulReport compare_term_series(const std::vector<NormalPolynomial>& lhs,
                                    const std::vector<NormalPolynomial>& rhs);
ForgetfulReport verify_forgetful_identity(unsigned order);

}  // namespace bellpf

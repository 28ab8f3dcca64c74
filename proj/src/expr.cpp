#include <cctype>
#include <sstream>

#include "bellpf/boson.hpp"

namespace bellpf {

ExprPtr make_literal(Rational c) {
  return std::make_shared<OperatorExpr>(OperatorExpr{OperatorExpr::Literal{std::move(c)}});
}

ExprPtr make_letter(BosonOp op) {
  return std::make_shared<OperatorExpr>(OperatorExpr{OperatorExpr::Letter{op}});
}

ExprPtr make_sum(std::vector<ExprPtr> terms) {
  if (terms.empty()) throw std::invalid_argument("make_sum: no terms");
  if (terms.size() == 1) return terms.front();
  return std::make_shared<OperatorExpr>(OperatorExpr{OperatorExpr::Sum{std::move(terms)}});
}

ExprPtr make_product(std::vector<ExprPtr> factors) {
  if (factors.empty()) throw std::invalid_argument("make_product: no factors");
  if (factors.size() == 1) return factors.front();
  return std::make_shared<OperatorExpr>(OperatorExpr{OperatorExpr::Product{std::move(factors)}});
}

ExprPtr make_power(ExprPtr base, unsigned exponent) {
  return std::make_shared<OperatorExpr>(
      OperatorExpr{OperatorExpr::Power{std::move(base), exponent}});
}

bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->node.index() != b->node.index()) return false;
  struct Cmp {
    const OperatorExpr& other;
    bool operator()(const OperatorExpr::Literal& l) const {
      return l.value == std::get<OperatorExpr::Literal>(other.node).value;
    }
    bool operator()(const OperatorExpr::Letter& l) const {
      return l.op == std::get<OperatorExpr::Letter>(other.node).op;
    }
    bool operator()(const OperatorExpr::Sum& s) const {
      const auto& o = std::get<OperatorExpr::Sum>(other.node);
      if (s.terms.size() != o.terms.size()) return false;
      for (size_t i = 0; i < s.terms.size(); ++i) {
        if (!expr_equal(s.terms[i], o.terms[i])) return false;
      }
      return true;
    }
    bool operator()(const OperatorExpr::Product& p) const {
      const auto& o = std::get<OperatorExpr::Product>(other.node);
      if (p.factors.size() != o.factors.size()) return false;
      for (size_t i = 0; i < p.factors.size(); ++i) {
        if (!expr_equal(p.factors[i], o.factors[i])) return false;
      }
      return true;
    }
    bool operator()(const OperatorExpr::Power& p) const {
      const auto& o = std::get<OperatorExpr::Power>(other.node);
      return p.exponent == o.exponent && expr_equal(p.base, o.base);
    }
  };
  return std::visit(Cmp{*b}, a->node);
}

ParseError::ParseError(std::string message, size_t offset, std::vector<std::string> expected)
    : std::runtime_error(std::move(message)), offset_(offset), expected_(std::move(expected)) {}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ExprPtr run() {
    ExprPtr e = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) {
      fail({"'+'", "'*'", "'^'", "end of input"});
    }
    return e;
  }

 private:
  [[noreturn]] void fail(std::vector<std::string> expected) {
    std::ostringstream msg;
    msg << "syntax error at offset " << pos_ << ": expected ";
    for (size_t i = 0; i < expected.size(); ++i) {
      if (i) msg << (i + 1 == expected.size() ? " or " : ", ");
      msg << expected[i];
    }
    throw ParseError(msg.str(), pos_, std::move(expected));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  ExprPtr parse_expr() {
    std::vector<ExprPtr> terms;
    terms.push_back(parse_term());
    while (eat('+')) terms.push_back(parse_term());
    return make_sum(std::move(terms));
  }

  ExprPtr parse_term() {
    std::vector<ExprPtr> factors;
    factors.push_back(parse_factor());
    while (eat('*')) factors.push_back(parse_factor());
    return make_product(std::move(factors));
  }

  ExprPtr parse_factor() {
    ExprPtr base = parse_base();
    if (eat('^')) {
      skip_ws();
      size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == start) fail({"non-negative integer exponent"});
      unsigned long e = 0;
      try {
        e = std::stoul(std::string(text_.substr(start, pos_ - start)));
      } catch (const std::out_of_range&) {
        pos_ = start;
        fail({"exponent within unsigned range"});
      }
      return make_power(std::move(base), static_cast<unsigned>(e));
    }
    return base;
  }

  ExprPtr parse_base() {
    skip_ws();
    if (pos_ >= text_.size()) fail({"rational", "'a'", "'ad'", "'('"});
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      ExprPtr inner = parse_expr();
      if (!eat(')')) fail({"')'"});
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
      return parse_rational_literal();
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string_view word = text_.substr(start, pos_ - start);
      if (word == "a") return make_letter(BosonOp::Ann);
      if (word == "ad") return make_letter(BosonOp::Cre);
      pos_ = start;
      fail({"'a'", "'ad'"});
    }
    fail({"rational", "'a'", "'ad'", "'('"});
  }

  ExprPtr parse_rational_literal() {
    size_t start = pos_;
    if (text_[pos_] == '-') ++pos_;
    size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      fail({"rational"});
    }
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      size_t den = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == den) fail({"denominator digits"});
    }
    return make_literal(parse_rational(text_.substr(start, pos_ - start)));
  }

  std::string_view text_;
  size_t pos_ = 0;
};

// Grammar levels, most general first. A node prints bare into a slot that
// admits its level; otherwise it gets parentheses.
enum Level : int { kExpr = 0, kTerm = 1, kFactor = 2, kBase = 3 };

Level level_of(const OperatorExpr& e) {
  if (std::holds_alternative<OperatorExpr::Sum>(e.node)) return kExpr;
  if (std::holds_alternative<OperatorExpr::Product>(e.node)) return kTerm;
  if (std::holds_alternative<OperatorExpr::Power>(e.node)) return kFactor;
  return kBase;  // literal or letter, both lex as a single base token
}

void print_into(std::ostream& out, const ExprPtr& e, Level slot) {
  const bool parens = level_of(*e) < slot;
  if (parens) out << "(";
  struct Printer {
    std::ostream& out;
    void operator()(const OperatorExpr::Literal& l) const { out << to_string(l.value); }
    void operator()(const OperatorExpr::Letter& l) const {
      out << (l.op == BosonOp::Ann ? "a" : "ad");
    }
    void operator()(const OperatorExpr::Sum& s) const {
      for (size_t i = 0; i < s.terms.size(); ++i) {
        if (i) out << " + ";
        print_into(out, s.terms[i], kTerm);
      }
    }
    void operator()(const OperatorExpr::Product& p) const {
      for (size_t i = 0; i < p.factors.size(); ++i) {
        if (i) out << "*";
        print_into(out, p.factors[i], kFactor);
      }
    }
    void operator()(const OperatorExpr::Power& p) const {
      print_into(out, p.base, kBase);
      out << "^" << p.exponent;
    }
  };
  std::visit(Printer{out}, e->node);
  if (parens) out << ")";
}

}  // namespace

ExprPtr parse_expression(std::string_view text) { return Parser(text).run(); }

std::string pretty_print(const ExprPtr& e) {
  std::ostringstream out;
  print_into(out, e, kExpr);
  return out.str();
}

}  // namespace bellpf

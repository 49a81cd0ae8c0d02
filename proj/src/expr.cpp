#include "hankel/expr.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <sstream>

#include "hankel/specfun.hpp"

namespace hankel {

namespace {

NodePtr make(Op op, NodePtr lhs = nullptr, NodePtr rhs = nullptr, long double value = 0) {
  auto node = std::make_shared<Node>();
  node->op = op;
  node->lhs = std::move(lhs);
  node->rhs = std::move(rhs);
  node->value = value;
  return node;
}

NodePtr make_constant(long double value) { return make(Op::constant, nullptr, nullptr, value); }

bool has_variable(const Node& n) {
  if (n.op == Op::variable) return true;
  if (n.lhs && has_variable(*n.lhs)) return true;
  if (n.rhs && has_variable(*n.rhs)) return true;
  return false;
}

class Parser {
 public:
  explicit Parser(const std::string& src) : src_(src) {}

  NodePtr parse_all() {
    skip_space();
    if (pos_ >= src_.size()) throw ParseError("empty expression", pos_);
    NodePtr node = parse_sum();
    skip_space();
    if (pos_ < src_.size()) throw ParseError(std::string("unexpected '") + src_[pos_] + "'", pos_);
    return node;
  }

 private:
  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (pos_ >= src_.size()) throw ParseError(std::string("expected '") + c + "' before end of input", pos_);
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
  }

  NodePtr parse_sum() {
    NodePtr lhs = parse_product();
    for (;;) {
      if (accept('+')) {
        lhs = make(Op::add, lhs, parse_product());
      } else if (accept('-')) {
        lhs = make(Op::sub, lhs, parse_product());
      } else {
        return lhs;
      }
    }
  }

  NodePtr parse_product() {
    NodePtr lhs = parse_unary();
    for (;;) {
      if (accept('*')) {
        lhs = make(Op::mul, lhs, parse_unary());
      } else if (accept('/')) {
        lhs = make(Op::div, lhs, parse_unary());
      } else {
        return lhs;
      }
    }
  }

  NodePtr parse_unary() {
    if (accept('-')) return make(Op::neg, parse_unary());
    if (accept('+')) return parse_unary();
    return parse_power();
  }

  NodePtr parse_power() {
    NodePtr base = parse_primary();
    if (accept('^')) return make(Op::pow, base, parse_unary());
    return base;
  }

  NodePtr parse_primary() {
    skip_space();
    if (pos_ >= src_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_identifier();
    if (accept('(')) {
      NodePtr inner = parse_sum();
      expect(')');
      return inner;
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  NodePtr parse_number() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (pos_ < src_.size() && src_[pos_] == '.') {
      ++pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      std::size_t p = pos_ + 1;
      if (p < src_.size() && (src_[p] == '+' || src_[p] == '-')) ++p;
      if (p < src_.size() && std::isdigit(static_cast<unsigned char>(src_[p]))) {
        pos_ = p;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      }
    }
    const std::string text = src_.substr(start, pos_ - start);
    if (text == ".") throw ParseError("malformed number", start);
    return make_constant(std::strtold(text.c_str(), nullptr));
  }

  NodePtr parse_identifier() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
      ++pos_;
    }
    const std::string name = src_.substr(start, pos_ - start);
    if (name == "x") return make(Op::variable);
    if (name == "pi") return make_constant(std::numbers::pi_v<long double>);
    if (name == "e") return make_constant(std::numbers::e_v<long double>);

    static const std::pair<const char*, Op> unary[] = {
        {"sin", Op::sin}, {"cos", Op::cos}, {"exp", Op::exp}, {"log", Op::log}, {"sqrt", Op::sqrt}};
    for (const auto& [fname, op] : unary) {
      if (name == fname) {
        expect('(');
        NodePtr arg = parse_sum();
        expect(')');
        return make(op, arg);
      }
    }
    if (name == "besselj") {
      expect('(');
      NodePtr order = parse_sum();
      if (has_variable(*order)) throw ParseError("besselj order must be constant", start);
      expect(',');
      NodePtr arg = parse_sum();
      expect(')');
      return make(Op::besselj, order, arg);
    }
    throw ParseError("unknown identifier '" + name + "'", start);
  }

  const std::string& src_;
  std::size_t pos_ = 0;
};

template <typename Scalar>
Scalar eval_node(const Node& n, Scalar x);

template <typename Scalar>
Scalar bessel_signed(Scalar nu, Scalar u) {
  if (u >= 0) return bessel_j(nu, u);
  if (nu != std::round(nu)) throw DomainError("besselj: negative argument with non-integer order");
  const Scalar v = bessel_j(nu, -u);
  return std::fmod(std::abs(nu), Scalar(2)) == 1 ? -v : v;
}

template <typename Scalar>
Scalar eval_node(const Node& n, Scalar x) {
  switch (n.op) {
    case Op::constant:
      return static_cast<Scalar>(n.value);
    case Op::variable:
      return x;
    case Op::add:
      return eval_node(*n.lhs, x) + eval_node(*n.rhs, x);
    case Op::sub:
      return eval_node(*n.lhs, x) - eval_node(*n.rhs, x);
    case Op::mul:
      return eval_node(*n.lhs, x) * eval_node(*n.rhs, x);
    case Op::div: {
      const Scalar d = eval_node(*n.rhs, x);
      if (d == 0) throw DomainError("division by zero");
      return eval_node(*n.lhs, x) / d;
    }
    case Op::pow: {
      const Scalar base = eval_node(*n.lhs, x);
      const Scalar p = eval_node(*n.rhs, x);
      if (base < 0 && p != std::round(p)) throw DomainError("non-integer power of a negative number");
      if (base == 0 && p < 0) throw DomainError("negative power of zero");
      return std::pow(base, p);
    }
    case Op::neg:
      return -eval_node(*n.lhs, x);
    case Op::sin:
      return std::sin(eval_node(*n.lhs, x));
    case Op::cos:
      return std::cos(eval_node(*n.lhs, x));
    case Op::exp:
      return std::exp(eval_node(*n.lhs, x));
    case Op::log: {
      const Scalar v = eval_node(*n.lhs, x);
      if (!(v > 0)) throw DomainError("log of a non-positive number");
      return std::log(v);
    }
    case Op::sqrt: {
      const Scalar v = eval_node(*n.lhs, x);
      if (v < 0) throw DomainError("sqrt of a negative number");
      return std::sqrt(v);
    }
    case Op::besselj:
      return bessel_signed(eval_node(*n.lhs, x), eval_node(*n.rhs, x));
  }
  throw UsageError("unknown expression node");
}

template <typename Scalar>
Jet<Scalar> jet_node(const Node& n, Scalar c, int len) {
  switch (n.op) {
    case Op::constant:
      return Jet<Scalar>::constant(c, static_cast<Scalar>(n.value), len);
    case Op::variable:
      return Jet<Scalar>::variable(c, len);
    case Op::add:
      return jet_node(*n.lhs, c, len) + jet_node(*n.rhs, c, len);
    case Op::sub:
      return jet_node(*n.lhs, c, len) - jet_node(*n.rhs, c, len);
    case Op::mul:
      return jet_mul(jet_node(*n.lhs, c, len), jet_node(*n.rhs, c, len));
    case Op::div: {
      const Jet<Scalar> d = jet_node(*n.rhs, c, len);
      if (d[0] == 0) throw DomainError("division by zero");
      return jet_div(jet_node(*n.lhs, c, len), d);
    }
    case Op::pow: {
      const Jet<Scalar> base = jet_node(*n.lhs, c, len);
      if (!has_variable(*n.rhs)) {
        const Scalar p = eval_node(*n.rhs, c);
        if (base[0] < 0 && p != std::round(p)) throw DomainError("non-integer power of a negative number");
        if (base[0] == 0 && p < 0) throw DomainError("negative power of zero");
        return pow(base, p);
      }
      return exp(jet_mul(jet_node(*n.rhs, c, len), log(base)));
    }
    case Op::neg:
      return -jet_node(*n.lhs, c, len);
    case Op::sin:
      return sin(jet_node(*n.lhs, c, len));
    case Op::cos:
      return cos(jet_node(*n.lhs, c, len));
    case Op::exp:
      return exp(jet_node(*n.lhs, c, len));
    case Op::log:
      return log(jet_node(*n.lhs, c, len));
    case Op::sqrt: {
      const Jet<Scalar> v = jet_node(*n.lhs, c, len);
      if (!(v[0] > 0)) throw DomainError("sqrt: jet requires a positive argument");
      return sqrt(v);
    }
    case Op::besselj: {
      // J^(i)(u) = 2^-i sum_k (-1)^k C(i,k) J_{nu-i+2k}(u)
      const Scalar nu = eval_node(*n.lhs, c);
      const Jet<Scalar> u = jet_node(*n.rhs, c, len);
      std::vector<Scalar> derivs(static_cast<std::size_t>(len));
      for (int i = 0; i < len; ++i) {
        Scalar sum = 0;
        Scalar binom = 1;
        for (int k = 0; k <= i; ++k) {
          const Scalar term = binom * bessel_signed(nu - Scalar(i) + Scalar(2 * k), u[0]);
          sum += (k % 2 == 0) ? term : -term;
          binom = binom * Scalar(i - k) / Scalar(k + 1);
        }
        derivs[static_cast<std::size_t>(i)] = std::ldexp(sum, -i);
      }
      return compose(derivs, u);
    }
  }
  throw UsageError("unknown expression node");
}

void print_node(const Node& n, std::ostream& out) {
  auto binary = [&](const char* op) {
    out << '(';
    print_node(*n.lhs, out);
    out << op;
    print_node(*n.rhs, out);
    out << ')';
  };
  auto call = [&](const char* name) {
    out << name << '(';
    print_node(*n.lhs, out);
    out << ')';
  };
  switch (n.op) {
    case Op::constant: {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.21Lg", std::abs(n.value));
      if (n.value < 0 || std::signbit(n.value)) {
        out << "(-" << buf << ')';
      } else {
        out << buf;
      }
      return;
    }
    case Op::variable:
      out << 'x';
      return;
    case Op::add:
      return binary("+");
    case Op::sub:
      return binary("-");
    case Op::mul:
      return binary("*");
    case Op::div:
      return binary("/");
    case Op::pow:
      return binary("^");
    case Op::neg:
      out << "(-";
      print_node(*n.lhs, out);
      out << ')';
      return;
    case Op::sin:
      return call("sin");
    case Op::cos:
      return call("cos");
    case Op::exp:
      return call("exp");
    case Op::log:
      return call("log");
    case Op::sqrt:
      return call("sqrt");
    case Op::besselj:
      out << "besselj(";
      print_node(*n.lhs, out);
      out << ',';
      print_node(*n.rhs, out);
      out << ')';
      return;
  }
}

NodePtr substitute_node(const NodePtr& n, const NodePtr& inner) {
  if (n->op == Op::variable) return inner;
  if (!n->lhs && !n->rhs) return n;
  return make(n->op, n->lhs ? substitute_node(n->lhs, inner) : nullptr,
              n->rhs ? substitute_node(n->rhs, inner) : nullptr, n->value);
}

}  // namespace

ExprFunction::ExprFunction() : root_(make_constant(0)), source_("0") {}

ExprFunction::ExprFunction(NodePtr root, std::string source)
    : root_(std::move(root)), source_(std::move(source)) {
  if (!root_) throw UsageError("expression: null root");
  if (source_.empty()) source_ = print();
}

template <typename Scalar>
Scalar ExprFunction::eval(Scalar x) const {
  return eval_node(*root_, x);
}

template <typename Scalar>
Jet<Scalar> ExprFunction::eval_jet(Scalar center, int n) const {
  if (n < 1) throw UsageError("eval_jet: length must be at least 1");
  return jet_node(*root_, center, n);
}

std::string ExprFunction::print() const {
  std::ostringstream out;
  print_node(*root_, out);
  return out.str();
}

bool ExprFunction::depends_on_x() const { return has_variable(*root_); }

bool ExprFunction::is_zero() const { return !depends_on_x() && eval<long double>(0) == 0; }

ExprFunction ExprFunction::substitute(const ExprFunction& inner) const {
  return ExprFunction(substitute_node(root_, inner.root_));
}

ExprFunction ExprFunction::operator*(const ExprFunction& other) const {
  return ExprFunction(make(Op::mul, root_, other.root_));
}

ExprFunction ExprFunction::operator+(const ExprFunction& other) const {
  return ExprFunction(make(Op::add, root_, other.root_));
}

ExprFunction ExprFunction::operator-(const ExprFunction& other) const {
  return ExprFunction(make(Op::sub, root_, other.root_));
}

ExprFunction ExprFunction::constant(long double value) { return ExprFunction(make_constant(value)); }

ExprFunction ExprFunction::variable() { return ExprFunction(make(Op::variable), "x"); }

ExprFunction parse(const std::string& src) {
  Parser parser(src);
  return ExprFunction(parser.parse_all(), src);
}

void check_domain(const ExprFunction& fn, double a, double b, int probes) {
  for (int i = 0; i < probes; ++i) {
    const double x = probes == 1 ? a : a + (b - a) * i / (probes - 1);
    double v = 0;
    try {
      v = fn.eval(x);
    } catch (const DomainError& e) {
      throw DomainError(std::string(e.what()) + " at x = " + std::to_string(x));
    }
    if (!std::isfinite(v)) throw DomainError("non-finite value at x = " + std::to_string(x));
  }
}

ExprFunction mirror(const ExprFunction& fn, double a, double b) {
  const long double s = static_cast<long double>(a) + static_cast<long double>(b);
  return fn.substitute(ExprFunction(make(Op::sub, make_constant(s), make(Op::variable))));
}

template double ExprFunction::eval<double>(double) const;
template long double ExprFunction::eval<long double>(long double) const;
template Jet<double> ExprFunction::eval_jet<double>(double, int) const;
template Jet<long double> ExprFunction::eval_jet<long double>(long double, int) const;

}  // namespace hankel

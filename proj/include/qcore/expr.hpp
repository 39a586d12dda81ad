#pragma once

/// @file expr.hpp
/// @brief Series expressions ("recipes"): parse once, evaluate at any order.
///
/// Grammar (whitespace insignificant, `*` is never implicit):
///
///     expr   := ['+'|'-'] term (('+'|'-') term)*
///     term   := power (('*'|'/') power)*
///     power  := atom ['^' ['-'] integer]
///     atom   := integer | 'q' | '(' expr ')' | name ['(' expr (',' expr)* ')']
///
/// Names taking a monomial argument x = +-q^j (bare name means x = q):
///     phi(x) psi(x) chi(x) R(x) f(x) c5(x) a5(x) b5(x)
/// and also
///     f(x, y)       Ramanujan's general theta function
///     fJ            the Euler product (q^J; q^J)_inf, e.g. f1, f20
///     poch(x, q^m)  the Pochhammer symbol (x; q^m)_inf
///     ap(E, m, r)   sum over n of [q^{mn+r}]E q^n
///     alt(E)        E with q -> -q
///     dil(E, m)     E with q -> q^m
///
/// One-argument f follows f(-q) = f1, so f(q) = f1 with q -> -q. The aliases
/// a5bar and b5bar are accepted for a5 and b5.

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "lexer.hpp"
#include "series.hpp"
#include "theta.hpp"

namespace qcore {

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

enum class NamedSeries { phi, psi, chi, rr, f_one, c5, a5bar, b5bar };

class Expr {
 public:
  struct Constant {
    Coefficient value;
  };
  struct Monomial {
    std::size_t exponent;
  };
  struct Named {
    NamedSeries which;
    Sign sign;
    std::size_t step;
  };
  struct Euler {
    std::size_t j;
  };
  struct Theta {
    ThetaSpec spec;
  };
  struct Poch {
    PochhammerFactor factor;
  };
  enum class BinOp { add, sub, mul, div };
  struct Binary {
    BinOp op;
    ExprPtr lhs, rhs;
  };
  struct Negate {
    ExprPtr arg;
  };
  struct Power {
    ExprPtr base;
    int exponent;
  };
  struct Alternate {
    ExprPtr arg;
  };
  struct Dilate {
    ExprPtr arg;
    std::size_t factor;
  };
  struct Progression {
    ExprPtr arg;
    std::size_t modulus, residue;
  };

  using Node = std::variant<Constant, Monomial, Named, Euler, Theta, Poch, Binary, Negate, Power, Alternate, Dilate,
                            Progression>;

  explicit Expr(Node node) : node_(std::move(node)) {}
  const Node& node() const { return node_; }

  template <typename T>
  static ExprPtr make(T value) {
    return std::make_shared<const Expr>(Node(std::move(value)));
  }

 private:
  Node node_;
};

namespace detail {

// +-q^j if the expression is syntactically a signed monomial.
inline std::optional<std::pair<Sign, std::size_t>> as_monomial(const ExprPtr& e) {
  if (auto* m = std::get_if<Expr::Monomial>(&e->node())) return std::pair{Sign::plus, m->exponent};
  if (auto* n = std::get_if<Expr::Negate>(&e->node())) {
    if (auto inner = as_monomial(n->arg)) return std::pair{inner->first == Sign::plus ? Sign::minus : Sign::plus, inner->second};
  }
  return std::nullopt;
}

inline std::optional<long> as_integer(const ExprPtr& e) {
  if (auto* c = std::get_if<Expr::Constant>(&e->node()))
    if (c->value.fits_slong_p()) return c->value.get_si();
  if (auto* n = std::get_if<Expr::Negate>(&e->node()))
    if (auto v = as_integer(n->arg)) return -*v;
  return std::nullopt;
}

class ExprParser {
 public:
  explicit ExprParser(std::string_view src) : ts_(tokenize(src)) {}

  ExprPtr parse_all() {
    ExprPtr e = expr();
    if (!ts_.at_end()) ts_.fail("unexpected token '" + ts_.peek().text + "'");
    return e;
  }

 private:
  ExprPtr expr() {
    ExprPtr e;
    if (ts_.accept("-")) {
      e = Expr::make(Expr::Negate{term()});
    } else {
      ts_.accept("+");
      e = term();
    }
    for (;;) {
      if (ts_.accept("+")) {
        ExprPtr rhs = term();
        e = Expr::make(Expr::Binary{Expr::BinOp::add, e, rhs});
      } else if (ts_.accept("-")) {
        ExprPtr rhs = term();
        e = Expr::make(Expr::Binary{Expr::BinOp::sub, e, rhs});
      } else {
        return e;
      }
    }
  }

  ExprPtr term() {
    ExprPtr e = power();
    for (;;) {
      if (ts_.accept("*")) {
        ExprPtr rhs = power();
        e = Expr::make(Expr::Binary{Expr::BinOp::mul, e, rhs});
      } else if (ts_.accept("/")) {
        ExprPtr rhs = power();
        e = Expr::make(Expr::Binary{Expr::BinOp::div, e, rhs});
      } else {
        return e;
      }
    }
  }

  ExprPtr power() {
    ExprPtr base = atom();
    if (!ts_.accept("^")) return base;
    bool neg = false;
    bool paren = ts_.accept("(");
    if (ts_.accept("-")) neg = true;
    if (ts_.peek().kind != Token::Kind::number) ts_.fail("expected integer exponent");
    int k = std::stoi(ts_.next().text);
    if (paren) ts_.expect(")");
    if (neg) k = -k;
    if (auto* m = std::get_if<Expr::Monomial>(&base->node())) {
      if (k < 0) ts_.fail("negative power of q is not a power series");
      return Expr::make(Expr::Monomial{m->exponent * static_cast<std::size_t>(k)});
    }
    return Expr::make(Expr::Power{base, k});
  }

  std::vector<ExprPtr> arguments() {
    std::vector<ExprPtr> args;
    if (!ts_.accept("(")) return args;
    args.push_back(expr());
    while (ts_.accept(",")) args.push_back(expr());
    ts_.expect(")");
    return args;
  }

  std::pair<Sign, std::size_t> monomial_arg(const ExprPtr& e, std::size_t pos) {
    auto m = as_monomial(e);
    if (!m || m->second == 0) throw ParseError("argument must be of the form +-q^j with j >= 1", pos);
    return *m;
  }

  std::size_t positive_int(const ExprPtr& e, std::size_t pos, bool allow_zero = false) {
    auto v = as_integer(e);
    if (!v || *v < 0 || (*v == 0 && !allow_zero)) throw ParseError("expected a positive integer argument", pos);
    return static_cast<std::size_t>(*v);
  }

  ExprPtr atom() {
    const Token& tok = ts_.peek();
    if (tok.kind == Token::Kind::number) {
      ts_.next();
      return Expr::make(Expr::Constant{Coefficient(tok.text)});
    }
    if (ts_.accept("(")) {
      ExprPtr e = expr();
      ts_.expect(")");
      return e;
    }
    if (tok.kind != Token::Kind::ident) ts_.fail("expected a series expression");
    const std::string name = ts_.next().text;
    const std::size_t pos = tok.pos;
    if (name == "q") return Expr::make(Expr::Monomial{1});

    if (name.size() > 1 && name[0] == 'f' && name.find_first_not_of("0123456789", 1) == std::string::npos) {
      const std::size_t j = std::stoul(name.substr(1));
      if (j == 0) throw ParseError("f0 is not defined", pos);
      return Expr::make(Expr::Euler{j});
    }

    const std::size_t args_pos = ts_.peek().pos;
    std::vector<ExprPtr> args = arguments();
    auto arity = [&](std::size_t lo, std::size_t hi) {
      if (args.size() < lo || args.size() > hi)
        throw ParseError("wrong number of arguments to '" + name + "'", args_pos);
    };

    static const std::pair<std::string_view, NamedSeries> kNamed[] = {
        {"phi", NamedSeries::phi},   {"psi", NamedSeries::psi},     {"chi", NamedSeries::chi},
        {"R", NamedSeries::rr},      {"c5", NamedSeries::c5},       {"a5", NamedSeries::a5bar},
        {"a5bar", NamedSeries::a5bar}, {"b5", NamedSeries::b5bar}, {"b5bar", NamedSeries::b5bar}};
    for (const auto& [key, which] : kNamed) {
      if (name != key) continue;
      arity(0, 1);
      auto [s, j] = args.empty() ? std::pair{Sign::plus, std::size_t{1}} : monomial_arg(args[0], args_pos);
      return Expr::make(Expr::Named{which, s, j});
    }
    if (name == "f") {
      arity(0, 2);
      if (args.size() == 2) {
        auto [s1, e1] = monomial_arg(args[0], args_pos);
        auto [s2, e2] = monomial_arg(args[1], args_pos);
        return Expr::make(Expr::Theta{ThetaSpec{s1, e1, s2, e2}});
      }
      auto [s, j] = args.empty() ? std::pair{Sign::plus, std::size_t{1}} : monomial_arg(args[0], args_pos);
      return Expr::make(Expr::Named{NamedSeries::f_one, s, j});
    }
    if (name == "poch") {
      arity(2, 2);
      auto [s, e] = monomial_arg(args[0], args_pos);
      auto [sm, m] = monomial_arg(args[1], args_pos);
      if (sm != Sign::plus) throw ParseError("poch base must be q^m", args_pos);
      return Expr::make(Expr::Poch{PochhammerFactor{s, e, m, 1}});
    }
    if (name == "ap") {
      arity(3, 3);
      const std::size_t m = positive_int(args[1], args_pos);
      const std::size_t r = positive_int(args[2], args_pos, true);
      if (r >= m) throw ParseError("ap residue must be below the modulus", args_pos);
      return Expr::make(Expr::Progression{args[0], m, r});
    }
    if (name == "alt") {
      arity(1, 1);
      return Expr::make(Expr::Alternate{args[0]});
    }
    if (name == "dil") {
      arity(2, 2);
      const std::size_t factor = positive_int(args[1], args_pos);
      return Expr::make(Expr::Dilate{args[0], factor});
    }
    throw ParseError("unknown series name '" + name + "'", pos);
  }

  TokenStream ts_;
};

}  // namespace detail

inline ExprPtr parse_expr(std::string_view src) { return detail::ExprParser(src).parse_all(); }

namespace detail {

inline TruncatedSeries named_series(const Expr::Named& n, std::size_t order) {
  switch (n.which) {
    case NamedSeries::phi: return phi(n.sign, n.step, order);
    case NamedSeries::psi: return psi(n.sign, n.step, order);
    case NamedSeries::chi: return chi(n.sign, n.step, order);
    case NamedSeries::f_one: return f_theta(n.sign, n.step, order);
    case NamedSeries::rr: return specialize(rr_quotient(1, order / n.step), n.sign, n.step, order);
    case NamedSeries::c5: return specialize(gen_c5(order / n.step), n.sign, n.step, order);
    case NamedSeries::a5bar: return specialize(gen_a5bar(order / n.step), n.sign, n.step, order);
    case NamedSeries::b5bar: return specialize(gen_b5bar(order / n.step), n.sign, n.step, order);
  }
  throw std::logic_error("unhandled named series");
}

}  // namespace detail

/// Evaluates a recipe to exactly `order` (children are requested at whatever
/// order they need, e.g. ap(E, m, r) evaluates E at m*order + r).
inline TruncatedSeries evaluate(const ExprPtr& e, std::size_t order) {
  return std::visit(
      [&](const auto& n) -> TruncatedSeries {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Expr::Constant>) {
          return TruncatedSeries::monomial(0, n.value, order);
        } else if constexpr (std::is_same_v<T, Expr::Monomial>) {
          return TruncatedSeries::monomial(n.exponent, 1, order);
        } else if constexpr (std::is_same_v<T, Expr::Named>) {
          return detail::named_series(n, order);
        } else if constexpr (std::is_same_v<T, Expr::Euler>) {
          return euler_f(n.j, order);
        } else if constexpr (std::is_same_v<T, Expr::Theta>) {
          return theta_general(n.spec, order);
        } else if constexpr (std::is_same_v<T, Expr::Poch>) {
          return expand_pochhammer(n.factor, order);
        } else if constexpr (std::is_same_v<T, Expr::Binary>) {
          if (n.op == Expr::BinOp::mul) {
            if (auto* m = std::get_if<Expr::Monomial>(&n.lhs->node())) return shift(evaluate(n.rhs, order), m->exponent);
            if (auto* m = std::get_if<Expr::Monomial>(&n.rhs->node())) return shift(evaluate(n.lhs, order), m->exponent);
            if (auto* c = std::get_if<Expr::Constant>(&n.lhs->node())) return scale(evaluate(n.rhs, order), c->value);
          }
          const TruncatedSeries a = evaluate(n.lhs, order);
          const TruncatedSeries b = evaluate(n.rhs, order);
          switch (n.op) {
            case Expr::BinOp::add: return add(a, b);
            case Expr::BinOp::sub: return sub(a, b);
            case Expr::BinOp::mul: return mul(a, b);
            case Expr::BinOp::div: return div(a, b);
          }
          throw std::logic_error("unhandled operator");
        } else if constexpr (std::is_same_v<T, Expr::Negate>) {
          return negate(evaluate(n.arg, order));
        } else if constexpr (std::is_same_v<T, Expr::Power>) {
          return pow(evaluate(n.base, order), n.exponent);
        } else if constexpr (std::is_same_v<T, Expr::Alternate>) {
          return alternate(evaluate(n.arg, order));
        } else if constexpr (std::is_same_v<T, Expr::Dilate>) {
          return inflate(evaluate(n.arg, order / n.factor), n.factor, order);
        } else {
          static_assert(std::is_same_v<T, Expr::Progression>);
          return extract_ap(evaluate(n.arg, n.modulus * order + n.residue), n.modulus, n.residue);
        }
      },
      e->node());
}

inline TruncatedSeries evaluate(std::string_view src, std::size_t order) { return evaluate(parse_expr(src), order); }

}  // namespace qcore

#pragma once

/// @file relation.hpp
/// @brief Linear relations between terms of named sequences, such as
///        "b5(10n+2) = 1/4*a5(2n+1) + 1/2*c5(2n)".
///
/// A side is a rational linear combination of sequence reads seq(a*n + b)
/// with integer a >= 0 and integer b. Constants may use + - * / and
/// parentheses, and the identifier K when the caller binds it (recurrence and
/// congruence families in 5^k). Reads at negative indices are 0.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "lexer.hpp"

namespace qcore {

using Rational = mpq_class;

enum class Sequence { c5, a5bar, b5bar };

inline const char* to_string(Sequence s) {
  switch (s) {
    case Sequence::c5: return "c5";
    case Sequence::a5bar: return "a5";
    case Sequence::b5bar: return "b5";
  }
  return "?";
}

inline std::optional<Sequence> sequence_from_name(std::string_view name) {
  if (name == "c5") return Sequence::c5;
  if (name == "a5" || name == "a5bar") return Sequence::a5bar;
  if (name == "b5" || name == "b5bar") return Sequence::b5bar;
  return std::nullopt;
}

/// coefficient * seq(slope * n + offset)
struct SequenceRead {
  Rational coefficient;
  Sequence seq;
  long long slope;
  long long offset;
};

/// constant + sum of reads
struct LinearForm {
  Rational constant;
  std::vector<SequenceRead> reads;

  bool is_constant() const { return reads.empty(); }
};

namespace detail {

// Intermediate value during parsing: constant + ncoef*n + reads.
struct LinValue {
  Rational constant;
  Rational ncoef;
  std::vector<SequenceRead> reads;

  bool scalar() const { return ncoef == 0 && reads.empty(); }
};

inline LinValue scaled(LinValue v, const Rational& k) {
  v.constant *= k;
  v.ncoef *= k;
  for (auto& r : v.reads) r.coefficient *= k;
  return v;
}

inline LinValue combined(LinValue a, const LinValue& b, int sign) {
  a.constant += sign * b.constant;
  a.ncoef += sign * b.ncoef;
  for (auto r : b.reads) {
    r.coefficient *= sign;
    a.reads.push_back(r);
  }
  return a;
}

class RelationParser {
 public:
  RelationParser(std::string_view src, std::optional<long long> k_value) : ts_(tokenize(src)), k_(k_value) {}

  TokenStream& stream() { return ts_; }

  LinValue sum() {
    LinValue v;
    if (ts_.accept("-")) {
      v = scaled(product(), -1);
    } else {
      ts_.accept("+");
      v = product();
    }
    for (;;) {
      if (ts_.accept("+")) {
        v = combined(std::move(v), product(), 1);
      } else if (ts_.accept("-")) {
        v = combined(std::move(v), product(), -1);
      } else {
        return v;
      }
    }
  }

 private:
  LinValue product() {
    LinValue v = unary();
    for (;;) {
      const std::size_t pos = ts_.peek().pos;
      if (ts_.accept("*")) {
        LinValue rhs = unary();
        if (v.scalar()) {
          v = scaled(std::move(rhs), v.constant);
        } else if (rhs.scalar()) {
          v = scaled(std::move(v), rhs.constant);
        } else {
          throw ParseError("product of two non-constant terms", pos);
        }
      } else if (ts_.accept("/")) {
        LinValue rhs = unary();
        if (!rhs.scalar() || rhs.constant == 0) throw ParseError("division by a non-constant or zero", pos);
        v = scaled(std::move(v), Rational(1) / rhs.constant);
      } else {
        return v;
      }
    }
  }

  LinValue unary() {
    if (ts_.accept("-")) return scaled(unary(), -1);
    return atom();
  }

  LinValue atom() {
    const Token tok = ts_.peek();
    if (tok.kind == Token::Kind::number) {
      ts_.next();
      LinValue v;
      v.constant = Rational(mpz_class(tok.text));
      // "5n" reads as 5*n
      if (ts_.peek().kind == Token::Kind::ident && ts_.peek().text == "n") {
        ts_.next();
        v.ncoef = v.constant;
        v.constant = 0;
      }
      return v;
    }
    if (ts_.accept("(")) {
      LinValue v = sum();
      ts_.expect(")");
      return v;
    }
    if (tok.kind != Token::Kind::ident) ts_.fail("expected a term");
    ts_.next();
    if (tok.text == "n") {
      LinValue v;
      v.ncoef = 1;
      return v;
    }
    if (tok.text == "K") {
      if (!k_) throw ParseError("K is only defined inside a family", tok.pos);
      LinValue v;
      v.constant = Rational(mpz_class(std::to_string(*k_)));
      return v;
    }
    auto seq = sequence_from_name(tok.text);
    if (!seq) throw ParseError("unknown sequence '" + tok.text + "'", tok.pos);
    ts_.expect("(");
    const std::size_t arg_pos = ts_.peek().pos;
    LinValue arg = sum();
    ts_.expect(")");
    if (!arg.reads.empty()) throw ParseError("nested sequence reads are not linear", arg_pos);
    if (arg.ncoef.get_den() != 1 || arg.constant.get_den() != 1 || arg.ncoef < 0)
      throw ParseError("index must be a*n + b with integers a >= 0, b", arg_pos);
    LinValue v;
    v.reads.push_back(SequenceRead{Rational(1), *seq, arg.ncoef.get_num().get_si(), arg.constant.get_num().get_si()});
    return v;
  }

  TokenStream ts_;
  std::optional<long long> k_;
};

inline LinearForm to_form(LinValue v, std::size_t pos) {
  if (v.ncoef != 0) throw ParseError("bare n outside a sequence index", pos);
  return LinearForm{std::move(v.constant), std::move(v.reads)};
}

}  // namespace detail

/// Parsed equality chain "A = B [= C ...]" or congruence "A == B mod M".
struct Relation {
  std::vector<LinearForm> sides;
  std::optional<Rational> modulus;  // set for congruences
};

inline Relation parse_relation(std::string_view src, std::optional<long long> k_value = std::nullopt) {
  detail::RelationParser p(src, k_value);
  auto& ts = p.stream();
  Relation rel;
  std::size_t pos = ts.peek().pos;
  rel.sides.push_back(detail::to_form(p.sum(), pos));
  if (ts.accept("==")) {
    pos = ts.peek().pos;
    rel.sides.push_back(detail::to_form(p.sum(), pos));
    if (!(ts.peek().kind == Token::Kind::ident && ts.peek().text == "mod")) ts.fail("expected 'mod' in congruence");
    ts.next();
    pos = ts.peek().pos;
    detail::LinValue m = p.sum();
    if (!m.scalar() || m.constant.get_den() != 1 || m.constant <= 0)
      throw ParseError("modulus must be a positive integer constant", pos);
    rel.modulus = m.constant;
  } else {
    while (ts.accept("=")) {
      pos = ts.peek().pos;
      rel.sides.push_back(detail::to_form(p.sum(), pos));
    }
    if (rel.sides.size() < 2) ts.fail("expected '=' or '=='");
  }
  if (!ts.at_end()) ts.fail("unexpected token '" + ts.peek().text + "'");
  return rel;
}

}  // namespace qcore

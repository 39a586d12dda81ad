#pragma once

/// @file lexer.hpp
/// @brief Tokenizer shared by the series-expression and relation parsers.

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qcore {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : std::invalid_argument(what + " (at column " + std::to_string(pos + 1) + ")"), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

struct Token {
  enum class Kind { number, ident, punct, end };
  Kind kind = Kind::end;
  std::string text;
  std::size_t pos = 0;
};

inline std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    const char ch = src[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
      out.push_back({Token::Kind::number, std::string(src.substr(start, i - start)), start});
    } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) ++i;
      out.push_back({Token::Kind::ident, std::string(src.substr(start, i - start)), start});
    } else if (ch == '=' && i + 1 < src.size() && src[i + 1] == '=') {
      i += 2;
      out.push_back({Token::Kind::punct, "==", start});
    } else if (std::string_view("+-*/^(),=").find(ch) != std::string_view::npos) {
      ++i;
      out.push_back({Token::Kind::punct, std::string(1, ch), start});
    } else {
      throw ParseError(std::string("unexpected character '") + ch + "'", start);
    }
  }
  out.push_back({Token::Kind::end, "", src.size()});
  return out;
}

/// Cursor over a token vector with the usual peek/accept/expect helpers.
class TokenStream {
 public:
  explicit TokenStream(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }
  bool at_end() const { return peek().kind == Token::Kind::end; }

  bool accept(std::string_view punct) {
    if (peek().kind == Token::Kind::punct && peek().text == punct) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(std::string_view punct) {
    if (!accept(punct)) throw ParseError("expected '" + std::string(punct) + "'", peek().pos);
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, peek().pos); }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace qcore

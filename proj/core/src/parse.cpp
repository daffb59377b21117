#include "invkit/parse.hpp"

#include <cctype>

namespace invkit {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Caret, Slash, LParen,
                 RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line, column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  Token next() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      advance();
    std::size_t line = line_, col = col_;
    if (pos_ >= s_.size()) return {Tok::End, "", line, col};
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string t;
      while (pos_ < s_.size() &&
             std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        t += s_[pos_];
        advance();
      }
      return {Tok::Number, t, line, col};
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string t;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
              s_[pos_] == '_')) {
        t += s_[pos_];
        advance();
      }
      return {Tok::Ident, t, line, col};
    }
    advance();
    switch (c) {
      case '+': return {Tok::Plus, "+", line, col};
      case '-': return {Tok::Minus, "-", line, col};
      case '*': return {Tok::Star, "*", line, col};
      case '^': return {Tok::Caret, "^", line, col};
      case '/': return {Tok::Slash, "/", line, col};
      case '(': return {Tok::LParen, "(", line, col};
      case ')': return {Tok::RParen, ")", line, col};
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line,
                     col);
  }

 private:
  void advance() {
    if (s_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1, col_ = 1;
};

class Parser {
 public:
  Parser(std::string_view text, RingPtr ring, MonomialOrder order)
      : lex_(text), ring_(std::move(ring)), order_(order) {
    cur_ = lex_.next();
  }

  Polynomial parse() {
    Polynomial p = expr();
    if (cur_.kind != Tok::End)
      throw ParseError("trailing input after expression (implicit "
                       "multiplication is not allowed)",
                       cur_.line, cur_.column);
    return p;
  }

 private:
  void bump() { cur_ = lex_.next(); }

  [[noreturn]] void expected(const std::string& what) {
    std::string got = cur_.kind == Tok::End ? "end of input"
                                            : "'" + cur_.text + "'";
    throw ParseError("expected " + what + ", found " + got, cur_.line,
                     cur_.column);
  }

  Polynomial expr() {
    Polynomial p = term();
    while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
      bool minus = cur_.kind == Tok::Minus;
      bump();
      Polynomial q = term();
      p = minus ? p - q : p + q;
    }
    if (cur_.kind == Tok::Number || cur_.kind == Tok::Ident ||
        cur_.kind == Tok::LParen)
      throw ParseError("implicit multiplication is not allowed", cur_.line,
                       cur_.column);
    return p;
  }

  Polynomial term() {
    Polynomial p = signed_factor();
    while (cur_.kind == Tok::Star) {
      bump();
      p = p * signed_factor();
    }
    if (cur_.kind == Tok::Number || cur_.kind == Tok::Ident ||
        cur_.kind == Tok::LParen)
      throw ParseError("implicit multiplication is not allowed", cur_.line,
                       cur_.column);
    return p;
  }

  Polynomial signed_factor() {
    if (cur_.kind == Tok::Minus) {
      bump();
      return -factor();
    }
    return factor();
  }

  Polynomial factor() {
    Polynomial p = atom();
    if (cur_.kind == Tok::Caret) {
      bump();
      if (cur_.kind != Tok::Number) expected("a natural exponent");
      unsigned long e = 0;
      try {
        e = std::stoul(cur_.text);
      } catch (const std::out_of_range&) {
        e = kMaxExponent + 1;
      }
      if (e > kMaxExponent)
        throw ParseError("exponent exceeds the supported bound (" +
                             std::to_string(kMaxExponent) + ")",
                         cur_.line, cur_.column);
      bump();
      p = p.pow(e);
    }
    return p;
  }

  static constexpr unsigned long kMaxExponent = 1000000;

  Polynomial atom() {
    switch (cur_.kind) {
      case Tok::Number: {
        mpz_class num(cur_.text);
        bump();
        mpz_class den = 1;
        if (cur_.kind == Tok::Slash) {
          bump();
          if (cur_.kind != Tok::Number) expected("a natural denominator");
          den = mpz_class(cur_.text);
          if (den == 0)
            throw ParseError("zero denominator", cur_.line, cur_.column);
          bump();
        }
        Coeff c = Coeff::from_mpq(ring_->field(), mpq_class(num, den));
        return Polynomial::constant(ring_, c, order_);
      }
      case Tok::Ident: {
        auto idx = ring_->var_index(cur_.text);
        if (!idx)
          throw ParseError("unknown identifier '" + cur_.text +
                               "' (not a declared ring variable)",
                           cur_.line, cur_.column);
        bump();
        return Polynomial::variable(ring_, *idx, order_);
      }
      case Tok::LParen: {
        bump();
        Polynomial p = expr();
        if (cur_.kind != Tok::RParen) expected("')'");
        bump();
        return p;
      }
      default:
        expected("a rational, identifier, or '('");
    }
  }

  Lexer lex_;
  Token cur_{Tok::End, "", 0, 0};
  RingPtr ring_;
  MonomialOrder order_;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring,
                            MonomialOrder order) {
  return Parser(text, ring, order).parse();
}

mpq_class parse_rational_literal(std::string_view text) {
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  skip_ws();
  bool neg = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    neg = text[i] == '-';
    ++i;
  }
  skip_ws();
  auto digits = [&]() -> std::string {
    std::string d;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      d += text[i++];
    if (d.empty()) throw ParseError("expected digits in rational", 1, i + 1);
    return d;
  };
  mpz_class num(digits());
  mpz_class den = 1;
  skip_ws();
  if (i < text.size() && text[i] == '/') {
    ++i;
    skip_ws();
    den = mpz_class(digits());
    if (den == 0) throw ParseError("zero denominator", 1, i);
  }
  skip_ws();
  if (i != text.size())
    throw ParseError("trailing input in rational literal", 1, i + 1);
  mpq_class q(num, den);
  q.canonicalize();
  if (neg) q = -q;
  return q;
}

}  // namespace invkit

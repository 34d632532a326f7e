#include <cctype>

#include "sepgraph/leavitt.hpp"

namespace sepgraph {

namespace {

struct Token {
  enum Kind { Ident, Number, Hat, Plus, Minus, Slash, LParen, RParen, End } kind;
  std::string text;
  size_t pos;
};

class Lexer {
public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

private:
  void advance() {
    while (pos_ < text_.size() && std::isspace((unsigned char)text_[pos_]))
      ++pos_;
    size_t start = pos_;
    if (pos_ >= text_.size()) {
      tok_ = {Token::End, "", start};
      return;
    }
    char c = text_[pos_];
    if (std::isdigit((unsigned char)c)) {
      while (pos_ < text_.size() && std::isdigit((unsigned char)text_[pos_]))
        ++pos_;
      tok_ = {Token::Number, text_.substr(start, pos_ - start), start};
      return;
    }
    if (std::isalpha((unsigned char)c) || c == '_') {
      while (pos_ < text_.size() &&
             (std::isalnum((unsigned char)text_[pos_]) || text_[pos_] == '_'))
        ++pos_;
      tok_ = {Token::Ident, text_.substr(start, pos_ - start), start};
      return;
    }
    ++pos_;
    switch (c) {
    case '^': tok_ = {Token::Hat, "^", start}; return;
    case '+': tok_ = {Token::Plus, "+", start}; return;
    case '-': tok_ = {Token::Minus, "-", start}; return;
    case '/': tok_ = {Token::Slash, "/", start}; return;
    case '(': tok_ = {Token::LParen, "(", start}; return;
    case ')': tok_ = {Token::RParen, ")", start}; return;
    default:
      throw Error(ErrorKind::SyntaxError,
                  std::string("unexpected character '") + c + "' at column " +
                      std::to_string(start + 1));
    }
  }

  const std::string& text_;
  size_t pos_ = 0;
  Token tok_{Token::End, "", 0};
};

class Parser {
public:
  Parser(const std::string& text, const SeparatedGraph& g,
         const RewriteOptions& opts)
      : lex_(text), g_(g), opts_(opts) {}

  AlgebraElement parse() {
    AlgebraElement e = expr();
    if (lex_.peek().kind != Token::End)
      throw err("trailing input");
    return e;
  }

private:
  Error err(const std::string& msg) {
    return Error(ErrorKind::SyntaxError,
                 msg + " at column " + std::to_string(lex_.peek().pos + 1));
  }

  AlgebraElement expr() {
    bool neg = false;
    if (lex_.peek().kind == Token::Minus) {
      lex_.take();
      neg = true;
    }
    AlgebraElement acc = term();
    if (neg)
      acc = scale(-Scalar::one(), acc);
    while (lex_.peek().kind == Token::Plus || lex_.peek().kind == Token::Minus) {
      bool minus = lex_.take().kind == Token::Minus;
      AlgebraElement t = term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  bool starts_factor(Token::Kind k) const {
    return k == Token::Ident || k == Token::Number || k == Token::LParen;
  }

  AlgebraElement term() {
    AlgebraElement acc = factor();
    while (starts_factor(lex_.peek().kind))
      acc = multiply(acc, factor(), g_, opts_);
    return acc;
  }

  AlgebraElement factor() {
    const Token& t = lex_.peek();
    switch (t.kind) {
    case Token::Number: {
      BigInt num(lex_.take().text);
      BigInt den = 1;
      if (lex_.peek().kind == Token::Slash) {
        lex_.take();
        if (lex_.peek().kind != Token::Number)
          throw err("expected denominator");
        den = BigInt(lex_.take().text);
        if (den == 0)
          throw err("zero denominator");
      }
      return constant(Scalar(BigRat(num, den)));
    }
    case Token::LParen: {
      lex_.take();
      AlgebraElement e = expr();
      if (lex_.peek().kind != Token::RParen)
        throw err("expected ')'");
      lex_.take();
      return e;
    }
    case Token::Ident:
      return symbol(lex_.take());
    default:
      throw err("expected identifier, scalar, or '('");
    }
  }

  AlgebraElement symbol(const Token& t) {
    int v = g_.find_vertex(t.text);
    if (v >= 0)
      return AlgebraElement::vertex(v);
    int e = g_.find_edge(t.text);
    if (e >= 0) {
      bool ghost = false;
      if (lex_.peek().kind == Token::Hat) {
        lex_.take();
        ghost = true;
      }
      return AlgebraElement::word({Letter{e, ghost}});
    }
    if (t.text == "i") // graph symbols shadow the imaginary unit
      return constant(Scalar::imag_unit());
    throw Error(ErrorKind::UnknownSymbol, "'" + t.text + "'");
  }

  // scalar multiples of the identity: sum of all vertices
  AlgebraElement constant(const Scalar& c) {
    AlgebraElement e;
    for (int v = 0; v < g_.vertex_count(); ++v)
      e.add_term(Monomial::at_vertex(v), c);
    return e;
  }

  Lexer lex_;
  const SeparatedGraph& g_;
  const RewriteOptions& opts_;
};

} // namespace

AlgebraElement parse_expr(const std::string& text, const SeparatedGraph& g,
                          const RewriteOptions& opts) {
  return normal_form(Parser(text, g, opts).parse(), g, opts);
}

} // namespace sepgraph

#include "gentile/parser.hpp"

#include <cctype>
#include <vector>

namespace gentile {

namespace {

struct Token {
  enum class Kind {
    annihilate,
    create,
    integer,
    plus,
    minus,
    star,
    slash,
    caret,
    lparen,
    rparen,
    lbracket,
    rbracket,
    lbrace,
    rbrace,
    comma,
    end
  };
  Kind kind;
  std::size_t offset;
  std::string_view text;  // digits for integer tokens
};

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == 'e') {
      if (i + 1 < text.size() && text[i + 1] == '+') {
        tokens.push_back({Token::Kind::create, i, text.substr(i, 2)});
        i += 2;
      } else {
        tokens.push_back({Token::Kind::annihilate, i, text.substr(i, 1)});
        ++i;
      }
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      tokens.push_back({Token::Kind::integer, i, text.substr(i, j - i)});
      i = j;
      continue;
    }
    Token::Kind kind;
    switch (c) {
      case '+': kind = Token::Kind::plus; break;
      case '-': kind = Token::Kind::minus; break;
      case '*': kind = Token::Kind::star; break;
      case '/': kind = Token::Kind::slash; break;
      case '^': kind = Token::Kind::caret; break;
      case '(': kind = Token::Kind::lparen; break;
      case ')': kind = Token::Kind::rparen; break;
      case '[': kind = Token::Kind::lbracket; break;
      case ']': kind = Token::Kind::rbracket; break;
      case '{': kind = Token::Kind::lbrace; break;
      case '}': kind = Token::Kind::rbrace; break;
      case ',': kind = Token::Kind::comma; break;
      default:
        throw ParseError(i, std::string("unexpected character '") + c + "'");
    }
    tokens.push_back({kind, i, text.substr(i, 1)});
    ++i;
  }
  tokens.push_back({Token::Kind::end, text.size(), {}});
  return tokens;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  ExprPtr run() {
    ExprPtr e = parse_expr();
    if (peek().kind != Token::Kind::end)
      throw ParseError(peek().offset, "expected '+', '-' or end of input");
    return e;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    const std::size_t i = std::min(pos_ + ahead, tokens_.size() - 1);
    return tokens_[i];
  }
  const Token& advance() { return tokens_[pos_++]; }
  bool accept(Token::Kind kind) {
    if (peek().kind != kind) return false;
    ++pos_;
    return true;
  }
  void expect(Token::Kind kind, const char* what) {
    if (!accept(kind)) throw ParseError(peek().offset, std::string("expected ") + what);
  }

  ExprPtr parse_expr() {
    std::vector<ExprPtr> terms;
    bool negative = false;
    if (accept(Token::Kind::minus))
      negative = true;
    else
      accept(Token::Kind::plus);
    terms.push_back(parse_term(negative));
    while (true) {
      if (accept(Token::Kind::plus))
        negative = false;
      else if (accept(Token::Kind::minus))
        negative = true;
      else
        break;
      terms.push_back(parse_term(negative));
    }
    if (terms.size() == 1) return terms.front();
    return sum(std::move(terms));
  }

  // A term is an optional rational scalar followed by juxtaposed (or '*'
  // separated) factors. A lone "1" is the identity operator, matching the
  // atom production rather than the scalar one.
  ExprPtr parse_term(bool negative) {
    bool have_scalar = false;
    Rational scalar = 1;
    if (peek().kind == Token::Kind::integer &&
        (peek(1).kind == Token::Kind::slash || peek().text != "1")) {
      scalar = parse_scalar();
      have_scalar = true;
    }

    std::vector<ExprPtr> factors;
    while (true) {
      if (accept(Token::Kind::star)) {
        factors.push_back(parse_factor());
        continue;
      }
      if (starts_atom(peek().kind)) {
        factors.push_back(parse_factor());
        continue;
      }
      break;
    }

    if (!have_scalar && factors.empty())
      throw ParseError(peek().offset, "expected 'e', 'e+', '1', a scalar, '(', '[' or '{'");

    ExprPtr body;
    if (factors.empty())
      body = one();
    else if (factors.size() == 1)
      body = factors.front();
    else
      body = product(std::move(factors));

    if (negative) scalar = -scalar;
    if (scalar == 1) return body;
    return scalar_mul(std::move(scalar), std::move(body));
  }

  static bool starts_atom(Token::Kind kind) {
    switch (kind) {
      case Token::Kind::annihilate:
      case Token::Kind::create:
      case Token::Kind::integer:
      case Token::Kind::lparen:
      case Token::Kind::lbracket:
      case Token::Kind::lbrace:
        return true;
      default:
        return false;
    }
  }

  Rational parse_scalar() {
    const Token& num_tok = advance();
    BigInt num(std::string(num_tok.text));
    if (accept(Token::Kind::slash)) {
      if (peek().kind != Token::Kind::integer)
        throw ParseError(peek().offset, "expected denominator after '/'");
      const Token& den_tok = advance();
      BigInt den(std::string(den_tok.text));
      if (den == 0) throw ParseError(den_tok.offset, "denominator must be nonzero");
      return Rational(num, den);
    }
    return Rational(num);
  }

  ExprPtr parse_factor() {
    ExprPtr base = parse_atom();
    if (accept(Token::Kind::caret)) {
      if (peek().kind != Token::Kind::integer)
        throw ParseError(peek().offset, "expected nonnegative integer exponent after '^'");
      const Token& tok = advance();
      unsigned long long exponent = 0;
      for (char c : tok.text) {
        const unsigned digit = static_cast<unsigned>(c - '0');
        if (exponent > (~0ull - digit) / 10) throw ParseError(tok.offset, "exponent too large");
        exponent = exponent * 10 + digit;
      }
      return power(std::move(base), exponent);
    }
    return base;
  }

  ExprPtr parse_atom() {
    const Token& tok = peek();
    switch (tok.kind) {
      case Token::Kind::annihilate:
        advance();
        return generator(Generator::annihilate);
      case Token::Kind::create:
        advance();
        return generator(Generator::create);
      case Token::Kind::integer:
        if (tok.text != "1")
          throw ParseError(tok.offset, "only '1' may appear as an operator atom");
        advance();
        return one();
      case Token::Kind::lparen: {
        advance();
        ExprPtr inner = parse_expr();
        expect(Token::Kind::rparen, "')'");
        return inner;
      }
      case Token::Kind::lbracket: {
        advance();
        ExprPtr lhs = parse_expr();
        expect(Token::Kind::comma, "','");
        ExprPtr rhs = parse_expr();
        expect(Token::Kind::rbracket, "']'");
        return commutator(std::move(lhs), std::move(rhs));
      }
      case Token::Kind::lbrace: {
        advance();
        ExprPtr lhs = parse_expr();
        expect(Token::Kind::comma, "','");
        ExprPtr rhs = parse_expr();
        expect(Token::Kind::rbrace, "'}'");
        return anticommutator(std::move(lhs), std::move(rhs));
      }
      default:
        throw ParseError(tok.offset, "expected 'e', 'e+', '1', '(', '[' or '{'");
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

ExprPtr parse(std::string_view text) { return Parser(lex(text)).run(); }

}  // namespace gentile

#include "orelim/parse.hpp"

#include <cctype>
#include <map>
#include <string>
#include <vector>

#include "orelim/error.hpp"

namespace orelim {
namespace {

enum class Role { Gen, X1, X2 };

struct Token {
  enum Kind { Number, Name, Op, End } kind;
  std::string text;
  std::uint64_t value = 0;  // Number, reduced mod p
  std::uint64_t raw = 0;    // Number, saturating exact value (exponents)
  int line = 1;
  int col = 1;
};

class Lexer {
 public:
  Lexer(std::string_view s, std::uint64_t p, int line, int col) : s_(s), p_(p), line_(line), col_(col) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (pos_ < s_.size()) {
      const char c = s_[pos_];
      if (c == '\n') {
        ++line_;
        col_ = 1;
        ++pos_;
        continue;
      }
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
        continue;
      }
      Token t;
      t.line = line_;
      t.col = col_;
      if (std::isdigit(static_cast<unsigned char>(c))) {
        t.kind = Token::Number;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
          const auto d = static_cast<std::uint64_t>(s_[pos_] - '0');
          t.text += s_[pos_];
          t.value = static_cast<std::uint64_t>((static_cast<unsigned __int128>(t.value) * 10 + d) % p_);
          t.raw = t.raw > (UINT64_MAX - d) / 10 ? UINT64_MAX : t.raw * 10 + d;
          advance();
        }
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        t.kind = Token::Name;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
          t.text += s_[pos_];
          advance();
        }
      } else if (std::string_view("+-*^()").find(c) != std::string_view::npos) {
        t.kind = Token::Op;
        t.text = c;
        advance();
      } else {
        throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
      }
      out.push_back(std::move(t));
    }
    out.push_back({Token::End, "", 0, 0, line_, col_});
    return out;
  }

 private:
  void advance() {
    ++pos_;
    ++col_;
  }

  std::string_view s_;
  std::uint64_t p_;
  std::size_t pos_ = 0;
  int line_;
  int col_;
};

// Recursive descent that evaluates straight into the bivariate ring.
class Parser {
 public:
  Parser(std::vector<Token> toks, Automorphism s1, Automorphism s2, std::map<std::string, Role> names)
      : toks_(std::move(toks)), s1_(std::move(s1)), s2_(std::move(s2)), names_(std::move(names)) {}

  BivarOrePoly parse_all() {
    if (peek().kind == Token::End) error("empty expression", peek());
    BivarOrePoly v = expr();
    if (peek().kind != Token::End) error("unexpected '" + peek().text + "'", peek());
    return v;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  bool accept(const char* op) {
    if (peek().kind == Token::Op && peek().text == op) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] static void error(const std::string& msg, const Token& t) {
    throw ParseError(msg, t.line, t.col);
  }
  BivarOrePoly constant(FieldElem c) const { return BivarOrePoly::constant(s1_, s2_, c); }

  BivarOrePoly expr() {
    BivarOrePoly acc(s1_, s2_);
    bool negate = false;
    if (accept("-"))
      negate = true;
    else
      accept("+");
    acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (accept("+"))
        acc = acc + term();
      else if (accept("-"))
        acc = acc - term();
      else
        return acc;
    }
  }

  BivarOrePoly term() {
    BivarOrePoly acc = factor();
    while (accept("*")) acc = acc * factor();
    return acc;
  }

  BivarOrePoly factor() {
    if (accept("-")) return -factor();
    BivarOrePoly base = primary();
    if (accept("^")) {
      const Token& t = peek();
      if (t.kind != Token::Number) error("expected an integer exponent", t);
      if (t.raw > 100000) error("exponent too large", t);
      const std::uint64_t e = t.raw;
      ++pos_;
      BivarOrePoly r = constant(s1_.ctx().one());
      for (std::uint64_t i = 0; i < e; ++i) r = r * base;
      return r;
    }
    return base;
  }

  BivarOrePoly primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Token::Number:
        ++pos_;
        return constant(FieldElem{t.value});
      case Token::Name: {
        auto it = names_.find(t.text);
        if (it == names_.end()) error("unknown name '" + t.text + "'", t);
        ++pos_;
        switch (it->second) {
          case Role::Gen: return constant(s1_.ctx().gen());
          case Role::X1: return BivarOrePoly::x1_pow(s1_, s2_, 1);
          case Role::X2: return BivarOrePoly::x2_pow(s1_, s2_, 1);
        }
        break;
      }
      case Token::Op:
        if (t.text == "(") {
          ++pos_;
          BivarOrePoly v = expr();
          if (!accept(")")) error("expected ')'", peek());
          return v;
        }
        break;
      case Token::End:
        error("unexpected end of input", t);
    }
    error("unexpected '" + t.text + "'", t);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  Automorphism s1_, s2_;
  std::map<std::string, Role> names_;
};

BivarOrePoly evaluate(std::string_view text, const Automorphism& s1, const Automorphism& s2,
                      std::map<std::string, Role> names, int line = 1, int col = 1) {
  Lexer lex(text, s1.ctx().characteristic(), line, col);
  Parser parser(lex.run(), s1, s2, std::move(names));
  return parser.parse_all();
}

void skip_ws(std::string_view s, std::size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

std::uint64_t read_uint(std::string_view s, std::size_t& i, const char* what) {
  skip_ws(s, i);
  if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
    throw ParseError(std::string("expected ") + what, 1, static_cast<int>(i) + 1);
  std::uint64_t v = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    const auto d = static_cast<std::uint64_t>(s[i] - '0');
    if (v > (UINT64_MAX - d) / 10) throw ParseError(std::string(what) + " overflows", 1, static_cast<int>(i) + 1);
    v = v * 10 + d;
    ++i;
  }
  return v;
}

void expect(std::string_view s, std::size_t& i, std::string_view lit) {
  skip_ws(s, i);
  if (s.substr(i, lit.size()) != lit)
    throw ParseError("expected '" + std::string(lit) + "'", 1, static_cast<int>(i) + 1);
  i += lit.size();
}

}  // namespace

FieldPtr parse_field(std::string_view s) {
  std::size_t i = 0;
  expect(s, i, "GF(");
  const std::uint64_t p = read_uint(s, i, "characteristic");
  std::uint64_t m = 1;
  skip_ws(s, i);
  if (i < s.size() && s[i] == '^') {
    ++i;
    m = read_uint(s, i, "extension degree");
  }
  if (m > 64) throw ParseError("extension degree too large", 1, static_cast<int>(i) + 1);
  std::optional<std::vector<std::uint64_t>> modulus;
  skip_ws(s, i);
  if (i < s.size() && s[i] == ';') {
    ++i;
    expect(s, i, "modulus");
    expect(s, i, "=");
    const std::size_t close = s.rfind(')');
    if (close == std::string_view::npos || close < i)
      throw ParseError("expected ')'", 1, static_cast<int>(s.size()) + 1);
    if (!is_prime(p)) fail(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    // The modulus is a polynomial over GF(p); t plays the role of x1.
    const FieldPtr prime = FieldCtx::create(p, 1);
    const Automorphism id(prime, 0);
    const BivarOrePoly poly =
        evaluate(s.substr(i, close - i), id, id, {{"t", Role::X1}}, 1, static_cast<int>(i) + 1);
    if (poly.degree_x2() > 0) throw ParseError("modulus must be a polynomial in t", 1, static_cast<int>(i) + 1);
    std::vector<std::uint64_t> coeffs;
    const OrePoly low = poly.coeff_x2(0);
    for (auto c : low.coeffs()) coeffs.push_back(c.packed);
    modulus = std::move(coeffs);
    i = close;
  }
  expect(s, i, ")");
  skip_ws(s, i);
  if (i != s.size()) throw ParseError("trailing text after field spec", 1, static_cast<int>(i) + 1);
  return FieldCtx::create(p, static_cast<unsigned>(m), std::move(modulus));
}

FieldElem parse_field_elem(const FieldPtr& field, std::string_view text) {
  const Automorphism id(field, 0);
  const BivarOrePoly v = evaluate(text, id, id, {{"t", Role::Gen}});
  if (v.is_zero()) return field->zero();
  if (v.degree_x2() != 0 || v.coeff_x2(0).degree() != 0)
    throw ParseError("field element literal must not contain indeterminates", 1, 1);
  return v.coeff_x2(0).coeff(0);
}

OrePoly parse_ore_poly(const Automorphism& sigma, std::string_view text) {
  const BivarOrePoly v = evaluate(text, sigma, sigma, {{"t", Role::Gen}, {"x", Role::X1}});
  return v.coeff_x2(0);
}

BivarOrePoly parse_bivar(const Automorphism& sigma1, const Automorphism& sigma2,
                         std::string_view text) {
  return evaluate(text, sigma1, sigma2, {{"t", Role::Gen}, {"x1", Role::X1}, {"x2", Role::X2}});
}

}  // namespace orelim

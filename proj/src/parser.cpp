#include "matfac/parser.hpp"

#include <cctype>

#include "matfac/errors.hpp"

namespace mfac {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Parser {
 public:
  Parser(std::string_view text, const Ring& ring)
      : text_(text), ring_(ring), zeta_name_(zeta_symbol(ring)) {}

  Polynomial parse() {
    skip();
    if (pos_ >= text_.size()) throw ParseError("empty expression", pos_);
    Polynomial p = expr();
    skip();
    if (pos_ < text_.size()) {
      throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    }
    return p;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Integer integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected integer", start);
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    while (accept('*')) acc *= unary();
    return acc;
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (!accept('^')) return base;
    skip();
    if (pos_ < text_.size() && text_[pos_] == '-') throw ParseError("negative exponent", pos_);
    std::size_t at = pos_;
    Integer e = integer();
    if (!e.fits_uint_p() || e > 4096) throw ParseError("exponent too large", at);
    skip();
    if (pos_ < text_.size() && text_[pos_] == '^') throw ParseError("chained exponent", pos_);
    return base.pow(static_cast<unsigned>(e.get_ui()));
  }

  Polynomial atom() {
    skip();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = integer();
      Integer den = 1;
      if (accept('/')) {
        std::size_t at = pos_;
        den = integer();
        if (den == 0) throw ParseError("zero denominator", at);
      }
      return ring_.constant(ring_.field().from_rational(Rational(num, den)));
    }
    if (ident_start(c)) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      if (auto idx = ring_.index_of(name)) return ring_.var(*idx);
      if (name == zeta_name_ || name == "zeta") return ring_.constant(ring_.field().zeta());
      throw ParseError("unknown variable '" + name + "'", start);
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view text_;
  const Ring& ring_;
  std::string zeta_name_;
  std::size_t pos_ = 0;
};

std::string monomial_string(const Exponents& e, const Ring& ring) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += ring.vars()[i];
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

// Finds q rational and j minimal with c = q * zeta^j.
bool as_scaled_root(const CycloElem& c, Rational& q, int& j) {
  const CycloField& k = c.field();
  CycloElem zinv = k.zeta().inverse();
  CycloElem cur = c;
  for (int i = 0; i < k.conductor(); ++i) {
    if (cur.is_rational()) {
      q = cur.rational_part();
      j = i;
      return true;
    }
    cur *= zinv;
  }
  return false;
}

std::string root_power(const std::string& symbol, int j) {
  return j == 1 ? symbol : symbol + "^" + std::to_string(j);
}

}  // namespace

Polynomial parse_poly(std::string_view text, const Ring& ring) { return Parser(text, ring).parse(); }

std::string zeta_symbol(const Ring& ring) {
  if (!ring.index_of("z")) return "z";
  if (!ring.index_of("zeta")) return "zeta";
  throw std::invalid_argument("ring variables shadow both spellings of the root of unity");
}

std::string to_string(const CycloElem& c, const std::string& symbol) {
  Rational q;
  int j = 0;
  if (as_scaled_root(c, q, j)) {
    if (j == 0) return q.get_str();
    if (q == 1) return root_power(symbol, j);
    if (q == -1) return "-" + root_power(symbol, j);
    return q.get_str() + "*" + root_power(symbol, j);
  }
  return "(" + c.basis_string(symbol) + ")";
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  const std::string symbol = zeta_symbol(p.ring());
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    std::string mono = monomial_string(e, p.ring());
    Rational q;
    int j = 0;
    bool negative = false;
    std::string body;
    if (as_scaled_root(c, q, j)) {
      negative = q < 0;
      Rational mag = abs(q);
      std::string coeff;
      if (j == 0) {
        if (mag != 1 || mono.empty()) coeff = mag.get_str();
      } else {
        coeff = (mag == 1 ? "" : mag.get_str() + "*") + root_power(symbol, j);
      }
      body = coeff.empty() ? mono : (mono.empty() ? coeff : coeff + "*" + mono);
    } else {
      body = "(" + c.basis_string(symbol) + ")";
      if (!mono.empty()) body += "*" + mono;
    }
    if (first) {
      out = (negative ? "-" : "") + body;
      first = false;
    } else {
      out += (negative ? " - " : " + ") + body;
    }
  }
  return out;
}

}  // namespace mfac

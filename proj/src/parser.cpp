#include "jacplane/parser.hpp"

#include <cctype>
#include <map>

namespace jacplane {

namespace {

// The parser works over general (not yet homogeneous) polynomials; the
// homogeneity and nonzero checks run on the final result so that errors can
// report both offending degrees.
using GenPoly = std::map<Monomial, i64>;

GenPoly gp_mul(const GenPoly& a, const GenPoly& b) {
  GenPoly out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      const Monomial m{ma.a + mb.a, ma.b + mb.b, ma.c + mb.c};
      auto [it, ins] = out.try_emplace(m, 0);
      it->second = checked_add(it->second, checked_mul(ca, cb));
      if (it->second == 0) out.erase(it);
    }
  return out;
}

void gp_add_into(GenPoly& a, const GenPoly& b, i64 sign) {
  for (const auto& [m, c] : b) {
    auto [it, ins] = a.try_emplace(m, 0);
    it->second = checked_add(it->second, checked_mul(sign, c));
    if (it->second == 0) a.erase(it);
  }
}

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  HomogPoly run() {
    GenPoly p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    if (p.empty()) throw InputError("zero polynomial rejected");
    int deg = p.begin()->first.degree();
    for (const auto& [m, c] : p) {
      if (m.degree() != deg)
        throw InputError("non-homogeneous input: terms of degree " +
                         std::to_string(deg) + " and " +
                         std::to_string(m.degree()));
    }
    HomogPoly out = HomogPoly::zero(deg);
    for (const auto& [m, c] : p)
      out = add(out, HomogPoly::monomial(m, c));
    return out;
  }

private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ == text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  i64 parse_uint() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected number");
    i64 v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = checked_add(checked_mul(v, 10), text_[pos_] - '0');
      ++pos_;
    }
    return v;
  }

  bool factor_ahead() {
    const char c = peek();
    return c == 'x' || c == 'y' || c == 'z' || c == '(';
  }

  GenPoly factor() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      GenPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c != 'x' && c != 'y' && c != 'z') fail("expected factor");
    ++pos_;
    int e = 1;
    if (accept('^')) {
      const i64 v = parse_uint();
      if (v > 1 << 20) fail("exponent too large");
      e = int(v);
    }
    Monomial m;
    if (c == 'x') m.a = e;
    if (c == 'y') m.b = e;
    if (c == 'z') m.c = e;
    return GenPoly{{m, 1}};
  }

  GenPoly term() {
    GenPoly acc{{Monomial{}, 1}};
    bool saw_anything = false;
    skip_ws();
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      acc = GenPoly{{Monomial{}, parse_uint()}};
      saw_anything = true;
    }
    for (;;) {
      const std::size_t mark = pos_;
      const bool star = accept('*');
      if (!factor_ahead()) {
        if (star) fail("expected factor after '*'");
        pos_ = mark;
        break;
      }
      acc = gp_mul(acc, factor());
      saw_anything = true;
    }
    if (!saw_anything) fail("expected term");
    return acc;
  }

  GenPoly expr() {
    GenPoly acc;
    i64 sign = accept('-') ? -1 : 1;
    gp_add_into(acc, term(), sign);
    for (;;) {
      if (accept('+'))
        sign = 1;
      else if (accept('-'))
        sign = -1;
      else
        break;
      gp_add_into(acc, term(), sign);
    }
    return acc;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

HomogPoly parse_poly(std::string_view text) { return Parser(text).run(); }

}  // namespace jacplane

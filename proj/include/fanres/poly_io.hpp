#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "error.hpp"
#include "polyring.hpp"

namespace fanres {

struct RenderStyle {
  const std::vector<LatticeVec>* vector_labels = nullptr;  // label Y by lattice vector when set
  bool single_p_as_p = true;                              // print "p" when there is one p-variable
};

inline std::string render_term_body(const Term& t, const RenderStyle& st, bool& empty) {
  std::string s;
  auto put = [&](const std::string& f) {
    if (!s.empty()) s += "*";
    s += f;
  };
  const bool single = st.single_p_as_p && t.p.size() == 1;
  for (std::size_t k = 0; k < t.p.size(); ++k) {
    if (t.p.e[k] == 0) continue;
    std::string f = single ? "p" : "p" + std::to_string(k + 1);
    if (t.p.e[k] != 1) f += "^" + std::to_string(t.p.e[k]);
    put(f);
  }
  for (std::size_t k = 0; k < t.y.size(); ++k) {
    if (t.y.e[k] == 0) continue;
    std::string f = st.vector_labels ? "Y" + to_string(st.vector_labels->at(k)) : "Y" + std::to_string(k + 1);
    if (t.y.e[k] != 1) f += "^" + std::to_string(t.y.e[k]);
    put(f);
  }
  empty = s.empty();
  return s;
}

inline std::string render(const Poly& g, const RenderStyle& st = {}) {
  if (g.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const Term& t : g.terms()) {
    const bool neg = t.coeff < 0;
    const std::int64_t a = neg ? checked::neg(t.coeff) : t.coeff;
    bool empty = false;
    const std::string body = render_term_body(t, st, empty);
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (empty)
      out += std::to_string(a);
    else if (a != 1)
      out += std::to_string(a) + "*" + body;
    else
      out += body;
    first = false;
  }
  return out;
}

namespace detail {

class PolyParser {
 public:
  PolyParser(const std::string& s, std::size_t M, std::size_t n, const std::vector<LatticeVec>* H)
      : s_(s), M_(M), n_(n), H_(H) {}

  Poly parse() {
    Poly out;
    skip();
    bool first = true;
    while (pos_ < s_.size()) {
      std::int64_t sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected + or -");
      }
      out += term(sign);
      first = false;
      skip();
    }
    if (first) fail("empty polynomial");
    return out;
  }

 private:
  Poly term(std::int64_t sign) {
    std::int64_t c = sign;
    Monomial p(n_), y(M_);
    while (true) {
      skip();
      const char ch = peek();
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        c = checked::mul(c, integer());
      } else if (ch == 'p') {
        ++pos_;
        std::size_t idx = 1;
        if (std::isdigit(static_cast<unsigned char>(peek()))) idx = static_cast<std::size_t>(integer());
        if (idx < 1 || idx > n_) fail("p-index out of range");
        p.e[idx - 1] = checked::add32(p.e[idx - 1], power());
      } else if (ch == 'Y') {
        ++pos_;
        std::size_t idx = 0;
        if (peek() == '(') {
          ++pos_;
          const std::int64_t x = signed_integer();
          expect(',');
          const std::int64_t yy = signed_integer();
          expect(')');
          if (!H_) fail("vector-labeled Y needs the generator list");
          for (std::size_t k = 0; k < H_->size(); ++k)
            if ((*H_)[k] == LatticeVec{x, yy}) idx = k + 1;
          if (idx == 0) fail("unknown generator vector");
        } else {
          idx = static_cast<std::size_t>(integer());
        }
        if (idx < 1 || idx > M_) fail("Y-index out of range");
        y.e[idx - 1] = checked::add32(y.e[idx - 1], power());
      } else {
        fail("unexpected character");
      }
      skip();
      if (peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    return Poly::term(c, std::move(p), std::move(y));
  }

  std::int32_t power() {
    skip();
    if (peek() != '^') return 1;
    ++pos_;
    skip();
    return static_cast<std::int32_t>(integer());
  }

  std::int64_t integer() {
    skip();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
    std::int64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) v = checked::add(checked::mul(v, 10), s_[pos_++] - '0');
    return v;
  }

  std::int64_t signed_integer() {
    skip();
    if (peek() == '-') {
      ++pos_;
      return -integer();
    }
    return integer();
  }

  void expect(char c) {
    skip();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::InvalidInput, "cannot parse polynomial '" + s_ + "' at offset " + std::to_string(pos_) + ": " + what);
  }

  const std::string& s_;
  std::size_t M_, n_;
  const std::vector<LatticeVec>* H_;
  std::size_t pos_ = 0;
};

}  // namespace detail

// Grammar: [+-] term ([+-] term)*, term = factor (* factor)*, factor = INT | p[k][^e] | Yk[^e] | Y(x,y)[^e].
inline Poly parse_poly(const std::string& s, std::size_t M, std::size_t n, const std::vector<LatticeVec>* H = nullptr) {
  return detail::PolyParser(s, M, n, H).parse();
}

}  // namespace fanres

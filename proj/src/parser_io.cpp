#include "unmix/parser_io.hpp"

#include <cctype>
#include <limits>
#include <sstream>

namespace unmix::io {

namespace {

class ExprParser {
 public:
  ExprParser(std::string_view text, const VarOrderPtr& order)
      : text_(text), order_(order) {}

  Polynomial parse() {
    skip_space();
    if (at_end()) fail("empty expression");
    Polynomial p = expr();
    skip_space();
    if (!at_end()) fail_unexpected();
    return p;
  }

 private:
  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      skip_space();
      if (peek() == '+') {
        ++pos_;
        acc += term();
      } else if (peek() == '-') {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    bool negate = false;
    for (;;) {
      skip_space();
      if (peek() == '-') {
        negate = !negate;
        ++pos_;
      } else if (peek() == '+') {
        ++pos_;
      } else {
        break;
      }
    }
    Polynomial acc = factor();
    for (;;) {
      skip_space();
      if (peek() != '*') break;
      ++pos_;
      acc = acc * factor();
    }
    return negate ? -acc : acc;
  }

  Polynomial factor() {
    Polynomial b = base();
    skip_space();
    if (peek() != '^') return b;
    ++pos_;
    skip_space();
    std::size_t start = pos_;
    if (!std::isdigit(static_cast<unsigned char>(peek()))) {
      fail("exponent must be a non-negative integer");
    }
    unsigned long long e = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      e = e * 10 + static_cast<unsigned>(peek() - '0');
      if (e > std::numeric_limits<std::uint32_t>::max()) {
        pos_ = start;
        fail("exponent too large");
      }
      ++pos_;
    }
    return b.pow(static_cast<std::uint32_t>(e));
  }

  Polynomial base() {
    skip_space();
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      Integer value(std::string(text_.substr(start, pos_ - start)));
      return Polynomial::constant(order_, Rational(value));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      auto idx = order_->index_of(name);
      if (!idx) {
        pos_ = start;
        fail("unknown variable '" + std::string(name) + "'");
      }
      return Polynomial::variable(order_, *idx);
    }
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      skip_space();
      if (peek() != ')') {
        if (at_end()) fail("missing ')'");
        fail_unexpected();
      }
      ++pos_;
      return inner;
    }
    if (at_end()) fail("unexpected end of expression");
    fail_unexpected();
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, 0, pos_ + 1);
  }
  [[noreturn]] void fail_unexpected() const {
    fail(std::string("unexpected character '") + text_[pos_] + "'");
  }

  std::string_view text_;
  const VarOrderPtr& order_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

void append_coefficient(std::string& out, const Rational& c) {
  out += c.get_num().get_str();
  if (c.get_den() != 1) {
    out += '/';
    out += c.get_den().get_str();
  }
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, const VarOrderPtr& order) {
  return ExprParser(text, order).parse();
}

SystemFile parse_system(std::string_view text) {
  SystemFile sys;
  std::size_t line_no = 0;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    std::size_t end = text.find('\n', begin);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(begin, end - begin);
    begin = end + 1;
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);

    std::string_view body = raw;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) {
      std::string_view comment = trim(raw.substr(hash + 1));
      if (comment.substr(0, 5) == "name:") sys.name = std::string(trim(comment.substr(5)));
      body = raw.substr(0, hash);
    }
    // Column offsets below are relative to the untrimmed line.
    std::size_t lead = 0;
    while (lead < body.size() && std::isspace(static_cast<unsigned char>(body[lead]))) ++lead;
    std::string_view content = trim(body);
    if (content.empty()) continue;

    if (!sys.order) {
      if (content.substr(0, 4) != "vars" ||
          (content.size() > 4 && !std::isspace(static_cast<unsigned char>(content[4])))) {
        throw ParseError("expected \"vars\" declaration", line_no, lead + 1);
      }
      std::vector<std::string> names;
      std::istringstream in{std::string(content.substr(4))};
      for (std::string name; in >> name;) {
        bool ok = std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_';
        for (char ch : name) ok = ok && (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_');
        if (!ok) throw ParseError("invalid variable name '" + name + "'", line_no, lead + 1);
        for (const auto& prev : names) {
          if (prev == name) {
            throw ParseError("duplicate variable '" + name + "'", line_no, lead + 1);
          }
        }
        names.push_back(name);
      }
      if (names.empty()) throw ParseError("no variables declared", line_no, lead + 1);
      try {
        sys.order = make_order(std::move(names));
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), line_no, lead + 1);
      }
      continue;
    }

    try {
      sys.polys.push_back(parse_polynomial(body, sys.order));
    } catch (const ParseError& e) {
      throw ParseError(e.message(), line_no, e.column());
    }
  }
  if (!sys.order) throw ParseError("missing \"vars\" declaration", line_no, 1);
  bool any_nonzero = false;
  for (const auto& p : sys.polys) any_nonzero = any_nonzero || !p.is_zero();
  if (!any_nonzero) throw ParseError("empty system: no non-zero polynomial", line_no, 1);
  return sys;
}

std::string render_polynomial(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    Rational c = t.coeff;
    if (c < 0) {
      out += '-';
      c = -c;
    } else if (!first) {
      out += '+';
    }
    first = false;
    if (t.mono.is_one()) {
      append_coefficient(out, c);
      continue;
    }
    bool need_star = false;
    if (c != 1) {
      append_coefficient(out, c);
      need_star = true;
    }
    for (std::size_t i = 0; i < p.order().size(); ++i) {
      auto e = t.mono[i];
      if (e == 0) continue;
      if (need_star) out += '*';
      out += p.order().name(i);
      if (e > 1) {
        out += '^';
        out += std::to_string(e);
      }
      need_star = true;
    }
  }
  return out;
}

std::vector<std::string> render_all(std::span<const Polynomial> polys) {
  std::vector<std::string> out;
  out.reserve(polys.size());
  for (const auto& p : polys) out.push_back(render_polynomial(p));
  return out;
}

}  // namespace unmix::io

#pragma once

// Text forms shared by the library and the command line:
//   integer   := [+-]digits
//   fraction  := integer [ '/' integer ]
//   slope     := fraction | "inf" | "empty"
//   terms     := integer { ',' integer }
//   pair      := '(' slope ',' slope ')'
// Whitespace between tokens is ignored. Errors report a 1-based column.

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "smallknot/cfrac.hpp"
#include "smallknot/error.hpp"
#include "smallknot/rational.hpp"
#include "smallknot/slope_table.hpp"

namespace smallknot {

namespace detail {

class cursor {
 public:
  explicit cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ == text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool accept_word(std::string_view w) {
    skip_space();
    if (text_.substr(pos_, w.size()) != w) return false;
    std::size_t end = pos_ + w.size();
    if (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) return false;
    pos_ = end;
    return true;
  }
  void expect_end() {
    if (!done()) fail("unexpected trailing input");
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw parse_error(pos_ + 1, what + " in \"" + std::string(text_) + "\"");
  }

  integer read_integer() {
    skip_space();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      fail("expected integer");
    }
    std::string s(text_.substr(start, pos_ - start));
    if (s.front() == '+') s.erase(0, 1);
    return integer(s);
  }

  std::size_t position() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

inline fraction read_fraction(cursor& c) {
  std::size_t at = c.position();
  integer num = c.read_integer();
  integer den = 1;
  if (c.accept('/')) den = c.read_integer();
  if (den == 0) {
    throw parse_error(at + 1, "zero denominator; write inf for 1/0");
  }
  return fraction(num, den);
}

inline extended_slope read_slope(cursor& c) {
  if (c.accept_word("inf")) return extended_slope::infinity();
  if (c.accept_word("empty")) return extended_slope::empty();
  return read_fraction(c);
}

}  // namespace detail

inline integer parse_integer(std::string_view text) {
  detail::cursor c(text);
  integer v = c.read_integer();
  c.expect_end();
  return v;
}

inline fraction parse_fraction(std::string_view text) {
  detail::cursor c(text);
  fraction f = detail::read_fraction(c);
  c.expect_end();
  return f;
}

inline extended_slope parse_slope(std::string_view text) {
  detail::cursor c(text);
  extended_slope s = detail::read_slope(c);
  c.expect_end();
  return s;
}

inline continued_fraction parse_cf(std::string_view text) {
  detail::cursor c(text);
  std::vector<integer> terms;
  do {
    std::size_t at = c.position();
    terms.push_back(c.read_integer());
    if (terms.back() == 0) throw parse_error(at + 1, "continued fraction terms must be nonzero");
  } while (c.accept(','));
  c.expect_end();
  return continued_fraction(std::move(terms));
}

inline slope_pair parse_pair(std::string_view text) {
  detail::cursor c(text);
  c.expect('(');
  extended_slope a = detail::read_slope(c);
  c.expect(',');
  extended_slope b = detail::read_slope(c);
  c.expect(')');
  c.expect_end();
  return slope_pair(std::move(a), std::move(b));
}

/// Slopes separated by commas or whitespace; '#' starts a comment.
inline std::vector<extended_slope> parse_slope_list(std::string_view text) {
  std::vector<extended_slope> out;
  std::size_t line_start = 0;
  std::size_t line_no = 1;
  while (line_start <= text.size()) {
    std::size_t nl = text.find('\n', line_start);
    std::string_view line = text.substr(line_start, nl == std::string_view::npos ? std::string_view::npos : nl - line_start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    try {
      detail::cursor c(line);
      while (!c.done()) {
        out.push_back(detail::read_slope(c));
        c.accept(',');
      }
    } catch (const parse_error& e) {
      throw error(errc::parse_error, "line " + std::to_string(line_no) + ", " + e.what());
    }
    if (nl == std::string_view::npos) break;
    line_start = nl + 1;
    ++line_no;
  }
  return out;
}

inline std::string format_terms(const std::vector<integer>& terms) {
  std::string out = "[";
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) out += ",";
    out += terms[i].str();
  }
  return out + "]";
}

}  // namespace smallknot

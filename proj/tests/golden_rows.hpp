#pragma once

// Reads printed-table rows such as
//   "1/3: -q^{-3/2} - q^{-3/2}(-1/2 + q + 1/2 q^8 + ...)"
// into exact data, independently of the library's own formatter.

#include <cctype>
#include <fstream>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "zhat/cyclotomic.hpp"
#include "zhat/rational.hpp"

namespace golden {

struct Row {
  zhat::RationalPhase zeta;
  zhat::BigRational constant{0};
  zhat::BigRational constant_exponent{0};
  zhat::BigRational prefactor{0};
  /// relative exponent -> coefficient inside the bracket
  std::map<std::int64_t, zhat::BigRational> body;
  std::int64_t last_exponent = 0;
  std::string text;
};

class Parser {
 public:
  explicit Parser(std::string s) : s_(std::move(s)) {}

  Row row() {
    Row r;
    const auto colon = s_.find(':');
    r.zeta = zhat::RationalPhase::parse(s_.substr(0, colon));
    pos_ = colon + 1;
    r.text = s_.substr(colon + 2);
    skip();
    // optional constant term before " - q^{..}("
    const std::size_t bracket = s_.find('(', pos_);
    const std::size_t lead = s_.rfind(" - ", bracket);
    if (lead != std::string::npos && lead > pos_) {
      const auto [c, e] = monomial(true);
      r.constant = c;
      r.constant_exponent = e;
      skip();
    }
    expect('-');
    skip();
    const auto [one, pre] = monomial(false);
    if (one != 1) throw std::runtime_error("bracket prefix must be a bare power of q");
    r.prefactor = pre;
    expect('(');
    bool first = true;
    while (true) {
      skip();
      if (s_.compare(pos_, 3, "...") == 0) break;
      int sign = 1;
      if (!first || s_[pos_] == '-' || s_[pos_] == '+') {
        if (s_[pos_] == '-') sign = -1;
        else if (s_[pos_] != '+') throw std::runtime_error("expected sign at " + std::to_string(pos_));
        ++pos_;
        skip();
      }
      if (s_.compare(pos_, 3, "...") == 0) break;
      auto [c, e] = monomial(true);
      if (!zhat::is_integer(e)) throw std::runtime_error("non-integral bracket exponent");
      const auto ei = zhat::to_int64(e.get_num());
      r.body[ei] += sign * c;
      r.last_exponent = ei;
      first = false;
    }
    return r;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && s_[pos_] == ' ') ++pos_;
  }
  void expect(char c) {
    if (pos_ >= s_.size() || s_[pos_] != c) {
      throw std::runtime_error(std::string("expected '") + c + "' at " + std::to_string(pos_));
    }
    ++pos_;
  }
  zhat::BigRational number() {
    const std::size_t start = pos_;
    if (s_[pos_] == '-') ++pos_;
    while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/')) ++pos_;
    return zhat::parse_rational(s_.substr(start, pos_ - start));
  }
  // [coef][ ]q[^e | ^{e}] or a bare coefficient (exponent 0)
  std::pair<zhat::BigRational, zhat::BigRational> monomial(bool allow_coef) {
    zhat::BigRational c(1);
    if (allow_coef && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '-')) {
      if (s_[pos_] == '-' && s_[pos_ + 1] == 'q') {
        c = -1;
        ++pos_;
      } else {
        c = number();
      }
      skip();
    }
    if (pos_ >= s_.size() || s_[pos_] != 'q') return {c, zhat::BigRational(0)};
    ++pos_;
    if (s_[pos_] != '^') return {c, zhat::BigRational(1)};
    ++pos_;
    if (s_[pos_] == '{') {
      ++pos_;
      auto e = number();
      expect('}');
      return {c, e};
    }
    return {c, number()};
  }

  std::string s_;
  std::size_t pos_ = 0;
};

inline std::vector<Row> read_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<Row> rows;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) rows.push_back(Parser(line).row());
  }
  return rows;
}

}  // namespace golden

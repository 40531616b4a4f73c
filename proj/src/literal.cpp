#include "lincert/literal.hpp"

#include <cctype>
#include <limits>
#include <vector>

namespace lincert {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  LinearSystem parse() {
    skip_ws();
    if (peek() == 'L') {
      ++pos_;
      skip_ws();
      if (peek() == '_') ++pos_;
    }
    const Int degree = integer("degree");
    expect('(');
    std::vector<Int> mults;
    skip_ws();
    if (peek() != ')') {
      while (true) {
        term(mults);
        skip_ws();
        if (peek() == ',') {
          const std::size_t comma = pos_++;
          skip_ws();
          if (peek() == ')' || peek() == ',' || peek() == '\0') throw SyntaxError(comma, "dangling comma");
          continue;
        }
        break;
      }
    }
    expect(')');
    skip_ws();
    if (pos_ != text_.size()) throw SyntaxError(pos_, "trailing characters");
    return LinearSystem::normalize(degree, std::move(mults));
  }

 private:
  void term(std::vector<Int>& out) {
    const Int value = integer("multiplicity");
    Int count = 1;
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      const std::size_t at = pos_;
      count = integer("exponent");
      if (count < 1) throw SyntaxError(at, "exponent must be >= 1");
      if (count > (Int{1} << 24)) throw SyntaxError(at, "exponent too large");
    }
    out.insert(out.end(), static_cast<std::size_t>(count), value);
  }

  Int integer(const char* what) {
    skip_ws();
    const std::size_t start = pos_;
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = peek() == '-';
      ++pos_;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) {
      throw SyntaxError(start, std::string("expected ") + what);
    }
    Int value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      const Int digit = peek() - '0';
      if (value > (std::numeric_limits<Int>::max() - digit) / 10) {
        throw SyntaxError(start, std::string(what) + " out of range");
      }
      value = value * 10 + digit;
      ++pos_;
    }
    return negative ? -value : value;
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) throw SyntaxError(pos_, std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

LinearSystem parse_system(std::string_view text) { return Parser(text).parse(); }

std::string format_system(const LinearSystem& system) {
  std::string out = std::to_string(system.degree()) + "(";
  auto m = system.multiplicities();
  for (std::size_t i = 0; i < m.size();) {
    std::size_t j = i;
    while (j < m.size() && m[j] == m[i]) ++j;
    if (i != 0) out += ',';
    out += std::to_string(m[i]);
    if (j - i >= 2) out += '^' + std::to_string(j - i);
    i = j;
  }
  out += ')';
  return out;
}

}  // namespace lincert

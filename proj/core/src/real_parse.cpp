#include <cctype>
#include <string>

#include "dioph/errors.hpp"
#include "dioph/real.hpp"

namespace dioph {

namespace {

class Parser {
 public:
  explicit Parser(std::string text) : s_(std::move(text)) {}

  Real parse() {
    Real v = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("cannot parse real \"" + s_ + "\" at offset " + std::to_string(pos_) + ": " + why);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  template <class Op>
  Real apply(Op op, const Real& a, const Real& b) {
    try {
      return op(a, b);
    } catch (const DomainError& e) {
      fail(e.what());
    }
  }

  Real expr() {
    Real v = term();
    for (;;) {
      if (accept('+')) {
        v = apply([](const Real& a, const Real& b) { return a + b; }, v, term());
      } else if (accept('-')) {
        v = apply([](const Real& a, const Real& b) { return a - b; }, v, term());
      } else {
        return v;
      }
    }
  }

  Real term() {
    Real v = unary();
    for (;;) {
      if (accept('*')) {
        v = apply([](const Real& a, const Real& b) { return a * b; }, v, unary());
      } else if (accept('/')) {
        v = apply([](const Real& a, const Real& b) { return a / b; }, v, unary());
      } else {
        return v;
      }
    }
  }

  Real unary() {
    if (accept('-')) return apply([](const Real& a, const Real&) { return -a; }, unary(), Real());
    if (accept('+')) return unary();
    return primary();
  }

  Real primary() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    if (accept('(')) {
      Real v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Real number() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
    const std::string digits = s_.substr(start, pos_ - start);
    if (pos_ < s_.size() && s_[pos_] == '@') {
      ++pos_;
      const std::size_t pstart = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pstart == pos_) fail("expected digit count after '@'");
      return Real::decimal(digits, std::stoi(s_.substr(pstart, pos_ - pstart)));
    }
    const auto dot = digits.find('.');
    if (dot != digits.rfind('.') || digits == ".") fail("malformed number");
    if (dot == std::string::npos) return Real(mpz_class(digits));
    const std::string frac = digits.substr(dot + 1);
    mpz_class num(digits.substr(0, dot).empty() ? std::string("0") : digits.substr(0, dot));
    mpz_class den = 1;
    for (char ch : frac) {
      num = num * 10 + (ch - '0');
      den *= 10;
    }
    return Real::rational(num, den);
  }

  Real identifier() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    const std::string id = s_.substr(start, pos_ - start);
    if (id == "pi") return Real::pi();
    if (id == "e") return Real::e();
    if (id == "golden") return Real::golden();
    if (id == "sqrt2") return Real::sqrt2();
    if (id == "sqrt") {
      if (!accept('(')) fail("expected '(' after sqrt");
      Real arg = expr();
      if (!accept(')')) fail("expected ')'");
      const mpq_class* q = arg.as_rational();
      if (!q) fail("sqrt argument must be rational");
      if (*q < 0) fail("sqrt of a negative number");
      return Real::surd(0, 1, q->get_num() * q->get_den(), q->get_den());
    }
    fail("unknown identifier '" + id + "'");
  }

  std::string s_;
  std::size_t pos_ = 0;
};

std::string normalize_minus(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    // U+2212 MINUS SIGN
    if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
        static_cast<unsigned char>(text[i + 1]) == 0x88 && static_cast<unsigned char>(text[i + 2]) == 0x92) {
      out += '-';
      i += 2;
    } else {
      out += text[i];
    }
  }
  return out;
}

}  // namespace

Real Real::parse(std::string_view text) { return Parser(normalize_minus(text)).parse(); }

}  // namespace dioph

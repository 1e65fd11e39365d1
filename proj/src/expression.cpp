#include "divkit/expression.hpp"

#include <cctype>
#include <cmath>
#include <memory>
#include <numbers>
#include <string>

#include "divkit/errors.hpp"

namespace divkit {
namespace {

using Fn = std::function<double(double)>;

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  Fn parse() {
    Fn result = parse_sum();
    skip_ws();
    if (pos_ != src_.size()) fail("unexpected character");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw FormatError("expression '" + std::string(src_) + "': " + what + " at offset " +
                      std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Fn parse_sum() {
    Fn lhs = parse_product();
    for (;;) {
      if (accept('+')) {
        Fn rhs = parse_product();
        lhs = [lhs, rhs](double z) { return lhs(z) + rhs(z); };
      } else if (accept('-')) {
        Fn rhs = parse_product();
        lhs = [lhs, rhs](double z) { return lhs(z) - rhs(z); };
      } else {
        return lhs;
      }
    }
  }

  Fn parse_product() {
    Fn lhs = parse_unary();
    for (;;) {
      if (accept('*')) {
        Fn rhs = parse_unary();
        lhs = [lhs, rhs](double z) { return lhs(z) * rhs(z); };
      } else if (accept('/')) {
        Fn rhs = parse_unary();
        lhs = [lhs, rhs](double z) { return lhs(z) / rhs(z); };
      } else {
        return lhs;
      }
    }
  }

  Fn parse_unary() {
    if (accept('-')) {
      Fn inner = parse_unary();
      return [inner](double z) { return -inner(z); };
    }
    if (accept('+')) return parse_unary();
    return parse_power();
  }

  Fn parse_power() {
    Fn base = parse_atom();
    if (accept('^')) {
      Fn exponent = parse_unary();
      return [base, exponent](double z) { return std::pow(base(z), exponent(z)); };
    }
    return base;
  }

  Fn parse_atom() {
    skip_ws();
    if (pos_ >= src_.size()) fail("unexpected end");
    const char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      Fn inner = parse_sum();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c))) return parse_identifier();
    fail("unexpected character");
  }

  Fn parse_number() {
    const char* begin = src_.data() + pos_;
    char* end = nullptr;
    const double value = std::strtod(begin, &end);
    if (end == begin) fail("bad number");
    pos_ += static_cast<std::size_t>(end - begin);
    return [value](double) { return value; };
  }

  Fn parse_identifier() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
      ++pos_;
    const std::string name(src_.substr(start, pos_ - start));
    if (name == "z") return [](double z) { return z; };
    if (name == "pi") return [](double) { return std::numbers::pi; };
    if (name == "e") return [](double) { return std::numbers::e; };

    double (*unary)(double) = nullptr;
    if (name == "exp") unary = [](double x) { return std::exp(x); };
    else if (name == "log") unary = [](double x) { return std::log(x); };
    else if (name == "sqrt") unary = [](double x) { return std::sqrt(x); };
    else if (name == "abs") unary = [](double x) { return std::fabs(x); };
    else if (name == "log1p") unary = [](double x) { return std::log1p(x); };
    else if (name == "expm1") unary = [](double x) { return std::expm1(x); };
    else if (name == "sign") unary = [](double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); };
    else fail("unknown identifier '" + name + "'");

    if (!accept('(')) fail("expected '(' after " + name);
    Fn arg = parse_sum();
    if (!accept(')')) fail("expected ')'");
    return [unary, arg](double z) { return unary(arg(z)); };
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

}  // namespace

std::function<double(double)> compile_expression(std::string_view source) {
  return Parser(source).parse();
}

}  // namespace divkit

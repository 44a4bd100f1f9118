#include "mgdiag/cli/poly_parser.hpp"

#include <cctype>
#include <limits>

#include "mgdiag/errors.hpp"

namespace mgdiag::cli {

using exactalg::MultiPoly;
using exactalg::RingContext;

namespace {

constexpr int kMaxExponent = 1'000'000;

class Parser {
 public:
  Parser(std::string_view text, const RingContext& ctx) : text_(text), ctx_(ctx) {}

  MultiPoly parse() {
    skip_space();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    MultiPoly result = expr();
    skip_space();
    if (!at_end()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return result;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (!at_end() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly expr() {
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    MultiPoly acc = term();
    if (negate) acc = -acc;
    while (true) {
      if (accept('+')) {
        acc = acc + term();
      } else if (accept('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  MultiPoly term() {
    MultiPoly acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  MultiPoly factor() {
    MultiPoly base = atom();
    if (!accept('^')) return base;
    skip_space();
    std::size_t start = pos_;
    if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      throw ParseError("expected a nonnegative integer exponent", start);
    }
    long long exponent = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      exponent = exponent * 10 + (text_[pos_] - '0');
      if (exponent > kMaxExponent) throw ParseError("exponent too large", start);
      ++pos_;
    }
    return base.pow(static_cast<unsigned>(exponent));
  }

  MultiPoly atom() {
    skip_space();
    if (at_end()) throw ParseError("unexpected end of input", pos_);
    const std::size_t start = pos_;
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      // reduce digit by digit so arbitrarily long literals are fine
      const auto& F = ctx_.field();
      exactalg::Coeff value = 0;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        value = F.add(F.mul(value, F.reduce(10)), F.reduce(text_[pos_] - '0'));
        ++pos_;
      }
      return MultiPoly::constant(ctx_, value);
    }
    if (c == 'x' || c == 'y') {
      ++pos_;
      if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        throw ParseError(std::string("expected an index after '") + c + "'", pos_);
      }
      long long index = 0;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        index = index * 10 + (text_[pos_] - '0');
        if (index > std::numeric_limits<int>::max()) throw ParseError("variable index too large", start);
        ++pos_;
      }
      const int block = c == 'x' ? ctx_.x_count() : ctx_.y_count();
      if (index < 1 || index > block) {
        throw ParseError("unknown variable " + std::string(text_.substr(start, pos_ - start)), start);
      }
      const int offset = c == 'x' ? 0 : ctx_.x_count();
      return MultiPoly::variable(ctx_, offset + static_cast<int>(index) - 1);
    }
    throw ParseError(std::string("unexpected '") + c + "'", start);
  }

  std::string_view text_;
  const RingContext& ctx_;
  std::size_t pos_ = 0;
};

}  // namespace

PolyExpr parse_polynomial(std::string_view text, int m, int n, std::uint32_t p) {
  RingContext ctx(m, n, p);
  MultiPoly poly = Parser(text, ctx).parse();
  return {std::string(text), std::move(poly), m, n, p};
}

}  // namespace mgdiag::cli

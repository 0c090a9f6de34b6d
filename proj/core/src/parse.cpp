#include "ddk/parse.hpp"

#include <cctype>

namespace ddk {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::invalid_argument(message + " at position " + std::to_string(position)), position_(position) {}

namespace {

class Parser {
 public:
  Parser(RootSystemPtr rs, std::string_view text, bool allow_vars)
      : rs_(std::move(rs)), text_(text), allow_vars_(allow_vars) {}

  RationalSection parse() {
    RationalSection v = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }
  [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const { throw ParseError(msg, at); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  RationalSection expr() {
    RationalSection v = term();
    for (;;) {
      if (accept('+'))
        v = v + term();
      else if (accept('-'))
        v = v - term();
      else
        return v;
    }
  }

  RationalSection term() {
    RationalSection v = unary();
    for (;;) {
      if (accept('*')) {
        v = v * unary();
      } else if (accept('/')) {
        skip_space();
        std::size_t at = pos_;
        v = divide(v, unary(), at);
      } else {
        return v;
      }
    }
  }

  RationalSection unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  RationalSection power() {
    RationalSection base = atom();
    if (!accept('^')) return base;
    skip_space();
    std::size_t at = pos_;
    Rational e = integer();
    if (e > 255) fail_at("exponent too large", at);
    RationalSection out = RationalSection::constant(rs_, FieldElem::one());
    for (long t = 0; t < e.get_num().get_si(); ++t) out = out * base;
    return out;
  }

  Rational integer() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return Rational(mpz_class(std::string(text_.substr(start, pos_ - start))));
  }

  RationalSection atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return RationalSection::constant(rs_, FieldElem(integer()));
    if (accept('(')) {
      RationalSection v = expr();
      expect(')');
      return v;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string_view word = text_.substr(start, pos_ - start);
      if (word == "i") return RationalSection::constant(rs_, FieldElem::imag_unit());
      if (word == "sqrt") {
        expect('(');
        skip_space();
        std::size_t at = pos_;
        RationalSection arg = expr();
        expect(')');
        const bool rational_constant =
            arg.is_zero() ||
            (arg.is_polynomial() && arg.num().is_constant() && arg.num().constant_term().is_rational());
        if (!rational_constant) fail_at("sqrt needs a rational constant", at);
        Rational r = arg.is_zero() ? Rational(0) : arg.num().constant_term().rational_part();
        if (sgn(r) < 0) fail_at("sqrt of a negative number", at);
        return RationalSection::constant(rs_, FieldElem::sqrt(r));
      }
      if (word[0] == 'x') {
        if (!allow_vars_) fail_at("variables are not allowed here", start);
        int idx = 0;
        if (word.size() == 1) {
          if (!rs_->is_line()) fail_at("bare 'x' is only valid for A1; use x1..x" + std::to_string(rs_->ambient_dim()), start);
          idx = 1;
        } else {
          for (char d : word.substr(1)) {
            if (!std::isdigit(static_cast<unsigned char>(d))) fail_at("unknown identifier '" + std::string(word) + "'", start);
            idx = idx * 10 + (d - '0');
            if (idx > 99) break;
          }
        }
        if (idx < 1 || idx > rs_->ambient_dim())
          fail_at("variable '" + std::string(word) + "' out of range x1..x" + std::to_string(rs_->ambient_dim()), start);
        return RationalSection::variable(rs_, idx - 1);
      }
      fail_at("unknown identifier '" + std::string(word) + "'", start);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  // a / d where d must be c * prod <alpha,x>^e (optionally itself over root forms).
  RationalSection divide(const RationalSection& a, const RationalSection& d, std::size_t at) {
    if (d.is_zero()) fail_at("division by zero", at);
    Polynomial p = d.num();
    std::vector<int> exps(static_cast<std::size_t>(rs_->num_roots()), 0);
    for (int r = 0; r < rs_->num_roots(); ++r) {
      while (!p.is_constant()) {
        auto q = p.divide_by_root_form(rs_->root(r));
        if (!q) break;
        p = std::move(*q);
        ++exps[static_cast<std::size_t>(r)];
      }
    }
    if (!p.is_constant()) fail_at("division only by constants and products of root forms", at);
    RationalSection out = a * p.constant_term().inv();
    out = RationalSection(rs_, times_root_forms(*rs_, out.num(), d.den()), out.den());
    for (int r = 0; r < rs_->num_roots(); ++r)
      if (exps[static_cast<std::size_t>(r)] > 0)
        out = out * RationalSection::inverse_root_form(rs_, r, exps[static_cast<std::size_t>(r)]);
    return out;
  }

  RootSystemPtr rs_;
  std::string_view text_;
  bool allow_vars_;
  std::size_t pos_ = 0;
};

}  // namespace

FieldElem parse_scalar(std::string_view text) {
  static const RootSystemPtr kLine = make_root_system(RootSystemA::line());
  RationalSection v = Parser(kLine, text, false).parse();
  return v.is_zero() ? FieldElem::zero() : v.num().constant_term();
}

RationalSection parse_section(const RootSystemPtr& rs, std::string_view text) {
  return Parser(rs, text, true).parse();
}

}  // namespace ddk

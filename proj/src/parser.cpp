#include <cctype>

#include "edr/error.hpp"
#include "edr/instances.hpp"

namespace edr {
namespace {

class Parser {
 public:
  Parser(const RingHandle& ring, std::string_view text) : ring_(ring), text_(text) {}

  Element parse() {
    Element e = expr();
    skipSpace();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(ErrorCode::ParseError, pos_, msg); }

  void skipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  // Accepts '-' and U+2212 MINUS SIGN.
  bool takeMinus() {
    skipSpace();
    if (pos_ < text_.size() && text_[pos_] == '-') {
      ++pos_;
      return true;
    }
    if (text_.substr(pos_, 3) == "\xE2\x88\x92") {
      pos_ += 3;
      return true;
    }
    return false;
  }

  bool take(char c) {
    skipSpace();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Element expr() {
    Element acc = term();
    while (true) {
      if (take('+'))
        acc = acc + term();
      else if (takeMinus())
        acc = acc - term();
      else
        return acc;
    }
  }

  Element term() {
    Element acc = unary();
    while (take('*')) acc = acc * unary();
    return acc;
  }

  Element unary() {
    if (takeMinus()) return -unary();
    return power();
  }

  Element power() {
    Element base = atom();
    if (take('^')) {
      skipSpace();
      std::size_t start = pos_;
      Integer e = digits();
      if (e > Integer(static_cast<unsigned long>(kMaxParsedExponent)))
        throw ParseError(ErrorCode::ExponentTooLarge, start, "exponent " + e.get_str() + " exceeds 2^16");
      return pow(base, e.get_ui());
    }
    return base;
  }

  Integer digits() {
    skipSpace();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a nonnegative integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Element atom() {
    skipSpace();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      Integer num = digits();
      if (take('/')) {
        Integer den = digits();
        if (den == 0) throw ParseError(ErrorCode::ParseError, start, "zero denominator");
        Rational r(num, den);
        r.canonicalize();
        try {
          return ring_->fromRational(r);
        } catch (const Error&) {
          throw ParseError(ErrorCode::ParseError, start, "rational literal not allowed in " + ring_->name());
        }
      }
      return ring_->fromInteger(num);
    }
    if (c == '(') {
      ++pos_;
      Element e = expr();
      if (!take(')')) fail("expected ')'");
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      ++pos_;
      if (auto a = ring_->atom(text_.substr(start, 1))) return *a;
      pos_ = start;
      fail("symbol '" + std::string(1, c) + "' is not defined in " + ring_->name());
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  RingHandle ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Element parseElement(const RingHandle& ring, std::string_view text) { return Parser(ring, text).parse(); }

}  // namespace edr

#include <cctype>
#include <string>

#include "gprime/error.hpp"
#include "gprime/ring.hpp"

namespace gprime {

namespace {

// Integers stay symbolic until they meet a ring element, so `3*x` is a
// scalar multiple and a bare `k` means k times the identity.
struct Value {
  bool is_int = false;
  std::int64_t k = 0;
  Elem e = kZero;
};

class Parser {
 public:
  Parser(const FiniteRing& ring, std::string_view text) : r_(ring), s_(text) {}

  Elem run() {
    skip();
    if (pos_ == s_.size()) fail("empty expression");
    Value v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return elem(v);
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::ParseError,
                "cannot parse '" + std::string(s_) + "' at column " + std::to_string(pos_ + 1) + ": " + msg);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Elem elem(const Value& v) const {
    if (!v.is_int) return v.e;
    if (v.k == 0) return kZero;
    const auto one = r_.identity();
    if (!one) fail("integer " + std::to_string(v.k) + " needs a unital ring");
    return r_.scalar(v.k, *one);
  }

  Value add(const Value& a, const Value& b, bool minus) const {
    if (a.is_int && b.is_int) return {true, minus ? a.k - b.k : a.k + b.k, kZero};
    const Elem y = elem(b);
    return {false, 0, r_.add(elem(a), minus ? r_.neg(y) : y)};
  }

  Value mul(const Value& a, const Value& b) const {
    if (a.is_int && b.is_int) return {true, a.k * b.k, kZero};
    if (a.is_int) return {false, 0, r_.scalar(a.k, b.e)};
    if (b.is_int) return {false, 0, r_.scalar(b.k, a.e)};
    return {false, 0, r_.mul(a.e, b.e)};
  }

  Value expr() {
    Value v = term();
    for (;;) {
      if (eat('+')) v = add(v, term(), false);
      else if (eat('-')) v = add(v, term(), true);
      else return v;
    }
  }

  Value term() {
    Value v = unary();
    while (eat('*')) v = mul(v, unary());
    return v;
  }

  Value unary() {
    if (eat('-')) {
      Value v = unary();
      if (v.is_int) return {true, -v.k, kZero};
      return {false, 0, r_.neg(v.e)};
    }
    return power();
  }

  Value power() {
    Value v = primary();
    if (eat('^')) {
      skip();
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("exponent expected");
      const unsigned k = static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start))));
      if (k == 0) fail("exponent must be positive");
      if (v.is_int) {
        std::int64_t acc = 1;
        for (unsigned i = 0; i < k; ++i) acc *= v.k;
        return {true, acc, kZero};
      }
      return {false, 0, r_.power(v.e, k)};
    }
    return v;
  }

  Value primary() {
    skip();
    if (pos_ >= s_.size()) fail("operand expected");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Value v = expr();
      if (!eat(')')) fail("')' expected");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      const std::string digits(s_.substr(start, pos_ - start));
      if (digits.size() > 15) fail("integer literal too large");
      return {true, std::stoll(digits), kZero};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      const std::string name(s_.substr(start, pos_ - start));
      std::vector<std::string> args;
      skip();
      if (pos_ < s_.size() && s_[pos_] == '(') args = raw_args();
      std::optional<Elem> x = r_.impl().atom(name, args);
      if (!x) fail("unknown atom '" + name + "' for ring " + r_.describe());
      return {false, 0, *x};
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  // Arguments are passed through verbatim (labels such as g^-1 are allowed).
  std::vector<std::string> raw_args() {
    ++pos_;  // '('
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (; pos_ < s_.size(); ++pos_) {
      const char c = s_[pos_];
      if (c == '(') ++depth;
      if (c == ')' && depth-- == 0) {
        out.push_back(trim(cur));
        ++pos_;
        if (out.size() == 1 && out[0].empty()) out.clear();
        return out;
      }
      if (c == ',' && depth == 0) {
        out.push_back(trim(cur));
        cur.clear();
        continue;
      }
      cur += c;
    }
    fail("unterminated argument list");
  }

  static std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
  }

  const FiniteRing& r_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Elem FiniteRing::parse(std::string_view expr) const {
  if (const auto* sub = as<SubringImpl>()) {
    const Elem x = sub->parent().parse(expr);
    if (auto l = sub->from_parent(x)) return *l;
    throw Error(ErrorKind::ParseError, "'" + std::string(expr) + "' is not an element of the subring");
  }
  return Parser(*this, expr).run();
}

}  // namespace gprime

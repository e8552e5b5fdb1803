#include <cctype>

#include "homlie/scalar.hpp"

namespace homlie {

namespace {

// Recursive-descent parser for the scalar grammar:
//   expr   := term (('+'|'-') term)*
//   term   := unary (('*'|'/') unary)*
//   unary  := '-'* power
//   power  := atom ('^' uint)?
//   atom   := uint | 'i' | 'a' | 'b' | 'c' | '(' expr ')'
class Parser {
  public:
    explicit Parser(const std::string& s) : s_(s) {}

    Scalar parse() {
        Scalar v = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return v;
    }

  private:
    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError("scalar parse error: " + msg + " in \"" + s_ + "\"", 0,
                         static_cast<int>(pos_) + 1);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    Scalar expr() {
        Scalar v = term();
        while (true) {
            if (eat('+')) v = v + term();
            else if (eat('-')) v = v - term();
            else return v;
        }
    }

    Scalar term() {
        Scalar v = unary();
        while (true) {
            if (eat('*')) v = v * unary();
            else if (eat('/')) {
                Scalar d = unary();
                if (d.is_zero()) throw DivisionByZero();
                v = v / d;
            } else {
                return v;
            }
        }
    }

    Scalar unary() {
        if (eat('-')) return -unary();
        return power();
    }

    Scalar power() {
        Scalar v = atom();
        if (eat('^')) {
            int e = uint_literal();
            v = v.pow(e);
        }
        return v;
    }

    int uint_literal() {
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail("expected exponent");
        int e = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            e = e * 10 + (s_[pos_] - '0');
            if (e > 1000) fail("exponent too large");
            ++pos_;
        }
        return e;
    }

    Scalar atom() {
        char c = peek();
        if (c == '(') {
            eat('(');
            Scalar v = expr();
            if (!eat(')')) fail("expected )");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                digits += s_[pos_++];
            return Scalar(Rational(BigInt(digits)));
        }
        if (c == 'i') {
            ++pos_;
            return Scalar::i();
        }
        if (c == 'a' || c == 'b' || c == 'c') {
            ++pos_;
            return Scalar::var(c);
        }
        fail("unexpected character");
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(const std::string& text) { return Parser(text).parse(); }

}  // namespace homlie

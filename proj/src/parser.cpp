#include "dra/parser.hpp"

#include <cctype>
#include <stdexcept>

namespace dra {

namespace {

class Parser {
public:
    Parser(std::string_view text, const Algebra& algebra) : text_(text), algebra_(algebra) {}

    WCElement run() {
        skip_ws();
        if (eof()) return algebra_.one(); // empty input = the constant 1
        WCElement e = expr();
        skip_ws();
        if (!eof()) fail("trailing input");
        return e;
    }

private:
    WCElement expr() {
        bool neg = false;
        skip_ws();
        if (peek() == '+' || peek() == '-') neg = get() == '-';
        WCElement acc = term();
        if (neg) acc = -acc;
        while (true) {
            skip_ws();
            if (peek() == '+' || peek() == '-') {
                bool minus = get() == '-';
                WCElement t = term();
                acc += minus ? -t : t;
            } else {
                return acc;
            }
        }
    }

    WCElement term() {
        WCElement acc = factor();
        while (true) {
            skip_ws();
            if (peek() == '*') {
                get();
                acc = algebra_.mul(acc, factor());
            } else {
                return acc;
            }
        }
    }

    WCElement factor() {
        WCElement base = primary();
        skip_ws();
        if (peek() == '^') {
            get();
            skip_ws();
            unsigned long k = read_uint();
            return algebra_.pow(base, static_cast<unsigned>(k));
        }
        return base;
    }

    WCElement primary() {
        skip_ws();
        char ch = peek();
        if (ch == '(') {
            get();
            WCElement e = expr();
            skip_ws();
            if (get() != ')') fail("expected ')'");
            return e;
        }
        if (ch == 'x' || ch == 'd' || ch == 'g') {
            get();
            if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("generator needs an index");
            long i = static_cast<long>(read_uint());
            if (i < 1 || i > algebra_.n()) fail("generator index out of range");
            int idx = static_cast<int>(i);
            if (ch == 'x') return algebra_.x(idx);
            if (ch == 'd') return algebra_.d(idx);
            return algebra_.g(idx);
        }
        if (ch == 'c') {
            get();
            return algebra_.scalar(Scalar::c());
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            BigInt num(read_digits());
            skip_ws();
            if (peek() == '/') {
                get();
                skip_ws();
                BigInt den(read_digits());
                return algebra_.scalar(Scalar(Rational(num, den)));
            }
            return algebra_.scalar(Scalar(Rational(num)));
        }
        fail("unexpected character");
    }

    std::string read_digits() {
        skip_ws();
        std::string out;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) out += get();
        if (out.empty()) fail("expected number");
        return out;
    }

    unsigned long read_uint() { return std::stoul(read_digits()); }

    char peek() const { return eof() ? '\0' : text_[pos_]; }
    char get() { return eof() ? '\0' : text_[pos_++]; }
    bool eof() const { return pos_ >= text_.size(); }
    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& why) const {
        throw std::invalid_argument("parse error at position " + std::to_string(pos_) + ": " + why);
    }

    std::string_view text_;
    const Algebra& algebra_;
    size_t pos_ = 0;
};

} // namespace

WCElement parse_wc(std::string_view text, const Algebra& algebra) {
    return Parser(text, algebra).run();
}

} // namespace dra

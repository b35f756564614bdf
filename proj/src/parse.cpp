#include "kxy/parse.hpp"

#include <cctype>
#include <sstream>

namespace kxy {

namespace {

class Parser {
public:
    Parser(std::string_view src, const Ring& ring) : src_(src), ring_(ring) {}

    Poly run() {
        Poly f = expr();
        skip_ws();
        if (pos_ != src_.size()) fail("unexpected trailing input");
        return f;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Int natural() {
        skip_ws();
        if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
            fail("expected a number");
        std::string digits;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
            digits.push_back(src_[pos_++]);
        return Int(digits);
    }

    Poly expr() {
        Poly f = term();
        for (;;) {
            if (accept('+'))
                f = f + term();
            else if (accept('-'))
                f = f - term();
            else
                return f;
        }
    }

    Poly term() {
        Poly f = unary();
        while (accept('*')) f = f * unary();
        return f;
    }

    Poly unary() {
        if (accept('-')) return -unary();
        return power();
    }

    Poly power() {
        Poly base = primary();
        if (accept('^')) {
            skip_ws();
            if (peek() == '-') fail("negative exponent");
            Int n = natural();
            if (n > 4096) fail("exponent too large");
            return pow(base, static_cast<int>(n.get_si()));
        }
        return base;
    }

    Poly primary() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Poly f = expr();
            if (!accept(')')) fail("expected ')'");
            return f;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int num = natural();
            if (accept('/')) {
                Int den = natural();
                if (den == 0) fail("zero denominator");
                return Poly::constant(ring_, make_rat(num, den));
            }
            return Poly::constant(ring_, Rat(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            std::string name;
            while (pos_ < src_.size() &&
                   std::isalnum(static_cast<unsigned char>(src_[pos_])))
                name.push_back(src_[pos_++]);
            auto idx = ring_.index_of(name);
            if (!idx) {
                pos_ = start;
                fail("unknown variable '" + name + "'");
            }
            return Poly::variable(ring_, ring_.var(*idx));
        }
        fail("expected a number, variable, or '('");
    }

    std::string_view src_;
    const Ring& ring_;
    std::size_t pos_ = 0;
};

void print_mono(std::ostream& os, const Mono& m, const Ring& ring, bool with_leading_star) {
    bool first = !with_leading_star;
    for (int i = 0; i < ring.size(); ++i) {
        int e = m.e[static_cast<std::size_t>(i)];
        if (e == 0) continue;
        if (!first) os << '*';
        first = false;
        os << var_name(ring.var(i));
        if (e > 1) os << '^' << e;
    }
}

}  // namespace

Poly parse_poly(std::string_view src, const Ring& ring) { return Parser(src, ring).run(); }

std::string print_poly(const Poly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        Rat a = c;
        if (first) {
            if (a < 0) {
                os << '-';
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (m.is_constant()) {
            os << rat_to_string(a);
        } else if (a == 1) {
            print_mono(os, m, f.ring(), false);
        } else {
            os << rat_to_string(a);
            print_mono(os, m, f.ring(), true);
        }
    }
    return os.str();
}

}  // namespace kxy

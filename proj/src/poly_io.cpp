#include "weh/poly_io.hpp"

#include <cctype>
#include <sstream>

namespace weh {

std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    const auto& tab = *p.table();
    bool first = true;
    // descending order: leading term first
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        if (!first) os << " + ";
        first = false;
        os << c.to_string();
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            os << "*" << tab.name(static_cast<int>(i));
            if (m[i] > 1) os << "^" << m[i];
        }
    }
    return os.str();
}

namespace {

struct Parser {
    const VarTablePtr& tab;
    const std::string& s;
    size_t pos = 0;

    explicit Parser(const VarTablePtr& t, const std::string& text) : tab(t), s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& why) {
        throw usage_error("parse error at offset " + std::to_string(pos) + ": " + why);
    }

    Poly parse_expr() {
        Poly acc = parse_term();
        while (true) {
            if (eat('+')) {
                acc += parse_term();
            } else if (eat('-')) {
                acc -= parse_term();
            } else {
                return acc;
            }
        }
    }

    Poly parse_term() {
        Poly acc = parse_factor();
        while (true) {
            if (eat('*')) {
                acc = acc * parse_factor();
            } else if (eat('/')) {
                Poly d = parse_factor();
                if (d.is_constant()) {
                    acc = acc / d.constant_term();
                } else {
                    acc = acc.exact_divide(d);
                }
            } else {
                return acc;
            }
        }
    }

    Poly parse_factor() {
        bool neg = false;
        while (true) {
            if (eat('-'))
                neg = !neg;
            else if (eat('+'))
                ;
            else
                break;
        }
        Poly base = parse_atom();
        if (eat('^')) {
            unsigned long e = parse_uint();
            base = base.pow(static_cast<uint32_t>(e));
        }
        return neg ? -base : base;
    }

    unsigned long parse_uint() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) fail("expected integer");
        return std::stoul(s.substr(start, pos - start));
    }

    Poly parse_atom() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of input");
        char c = s[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos < s.size() && s[pos] == '/') {
                size_t save = pos;
                ++pos;
                if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
                    return Poly::constant(tab, ExtScalar(rat_from_string(s.substr(start, pos - start))));
                }
                pos = save;
            }
            return Poly::constant(tab, ExtScalar(rat_from_string(s.substr(start, pos - start))));
        }
        if (c == '(') {
            ++pos;
            Poly inner = parse_expr();
            if (!eat(')')) fail("expected )");
            return inner;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos;
            while (pos < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                ++pos;
            std::string name = s.substr(start, pos - start);
            if (name == "sqrt") {
                if (!eat('(')) fail("expected ( after sqrt");
                unsigned long d = parse_uint();
                if (!eat(')')) fail("expected )");
                return Poly::constant(tab, ExtScalar::sqrt_of(static_cast<int>(d)));
            }
            return Poly::var(tab, name);
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

} // namespace

Poly parse_poly(const VarTablePtr& tab, const std::string& text) {
    Parser p(tab, text);
    Poly result = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return result;
}

} // namespace weh

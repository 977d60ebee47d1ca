#include "trajmult/parse.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "trajmult/error.hpp"

namespace trajmult {

namespace {

class Parser {
public:
    Parser(std::string_view text, std::span<const std::string> vars) : text_(text), vars_(vars) {}

    MultiPoly parse() {
        skip_space();
        if (pos_ == text_.size()) throw ParseError("empty expression", pos_);
        MultiPoly p = expr();
        skip_space();
        if (pos_ != text_.size()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
        return p;
    }

private:
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

    MultiPoly expr() {
        MultiPoly acc = term();
        while (true) {
            if (accept('+')) {
                acc += term();
            } else if (accept('-')) {
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    MultiPoly term() {
        MultiPoly acc = unary();
        while (true) {
            if (accept('*')) {
                acc *= unary();
            } else if (accept('/')) {
                skip_space();
                const std::size_t at = pos_;
                const MultiPoly divisor = unary();
                if (!divisor.is_constant()) throw ParseError("division by a non-constant expression", at);
                if (divisor.is_zero()) throw ParseError("division by zero", at);
                acc *= Rational(1 / divisor.constant_term());
            } else {
                return acc;
            }
        }
    }

    MultiPoly unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    MultiPoly power() {
        MultiPoly base = primary();
        if (!accept('^')) return base;
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == '-') throw ParseError("negative exponent", pos_);
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            throw ParseError("expected a nonnegative integer exponent", pos_);
        }
        const std::size_t start = pos_;
        unsigned long e = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            e = e * 10 + static_cast<unsigned long>(text_[pos_] - '0');
            if (e > std::numeric_limits<unsigned>::max()) throw ParseError("exponent too large", start);
            ++pos_;
        }
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == '^') throw ParseError("chained exponents need parentheses", pos_);
        MultiPoly out = MultiPoly::constant(vars_.size(), 1);
        // square-and-multiply
        MultiPoly b = std::move(base);
        while (e > 0) {
            if (e & 1u) out *= b;
            e >>= 1u;
            if (e > 0) b *= b;
        }
        return out;
    }

    MultiPoly primary() {
        skip_space();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of expression", pos_);
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            MultiPoly inner = expr();
            if (!accept(')')) throw ParseError("expected ')'", pos_);
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return MultiPoly::constant(vars_.size(), Rational(Integer(std::string(text_.substr(start, pos_ - start)), 10)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                ++pos_;
            }
            const std::string_view name = text_.substr(start, pos_ - start);
            const auto it = std::find(vars_.begin(), vars_.end(), name);
            if (it == vars_.end()) throw ParseError("unknown variable '" + std::string(name) + "'", start);
            return MultiPoly::variable(vars_.size(), static_cast<std::size_t>(it - vars_.begin()));
        }
        throw ParseError(std::string("unexpected '") + c + "'", pos_);
    }

    std::string_view text_;
    std::span<const std::string> vars_;
    std::size_t pos_ = 0;
};

void append_monomial(std::string& out, const Exponents& e, std::span<const std::string> vars) {
    bool first = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!first) out += '*';
        first = false;
        out += vars[i];
        if (e[i] > 1) out += '^' + std::to_string(e[i]);
    }
}

}  // namespace

MultiPoly parse_polynomial(std::string_view text, std::span<const std::string> vars) {
    return Parser(text, vars).parse();
}

std::string format_polynomial(const MultiPoly& p, std::span<const std::string> vars) {
    if (vars.size() != p.nvars()) {
        throw DimensionError("format_polynomial: " + std::to_string(vars.size()) + " names for " +
                             std::to_string(p.nvars()) + " variables");
    }
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : p.terms()) {
        const bool negative = t.coefficient < 0;
        const Rational magnitude = abs(t.coefficient);
        const bool constant = std::all_of(t.exponents.begin(), t.exponents.end(), [](unsigned e) { return e == 0; });
        if (first) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        if (constant) {
            out += to_string(magnitude);
            continue;
        }
        if (magnitude != 1) {
            out += to_string(magnitude);
            out += '*';
        }
        append_monomial(out, t.exponents, vars);
    }
    return out;
}

}  // namespace trajmult

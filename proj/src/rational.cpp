#include "trajmult/rational.hpp"

#include <cctype>

#include "trajmult/error.hpp"

namespace trajmult {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!all_digits(num)) {
        throw ParseError("invalid rational literal '" + std::string(text) + "'", 0);
    }
    if (!all_digits(den)) {
        throw ParseError("invalid rational literal '" + std::string(text) + "'",
                         slash == std::string_view::npos ? 0 : slash + 1);
    }
    Integer d(std::string(den), 10);
    if (d == 0) {
        throw ParseError("zero denominator in '" + std::string(text) + "'", slash + 1);
    }
    Rational r(Integer(std::string(num), 10), d);
    r.canonicalize();
    return negative ? Rational(-r) : r;
}

std::string to_string(const Rational& value) {
    return value.get_str(10);
}

std::string to_string(const Integer& value) {
    return value.get_str(10);
}

Integer factorial(unsigned long k) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), k);
    return out;
}

}  // namespace trajmult

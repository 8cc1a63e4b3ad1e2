#include "core/scalar.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>

namespace samc {

namespace {

bool is_plain_integer(const std::string& s) {
    size_t i = (!s.empty() && (s[0] == '+' || s[0] == '-')) ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    std::string s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    if (s.empty()) throw parse_error("empty scalar");

    auto slash = s.find('/');
    if (slash != std::string::npos) {
        std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        if (!is_plain_integer(num) || !is_plain_integer(den))
            throw parse_error("bad rational literal: " + text);
        mpz_class n(num, 10), d(den, 10);
        if (d == 0) throw parse_error("zero denominator: " + text);
        Rational r(n, d);
        r.canonicalize();
        return r;
    }
    if (is_plain_integer(s)) return Rational(mpz_class(s, 10));

    // Decimal / scientific literal, converted exactly.
    bool neg = false;
    size_t i = 0;
    if (s[i] == '+' || s[i] == '-') neg = (s[i] == '-'), ++i;
    std::string digits;
    long frac_digits = 0, exponent = 0;
    bool saw_digit = false, saw_point = false;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            digits.push_back(c);
            if (saw_point) ++frac_digits;
            saw_digit = true;
        } else if (c == '.' && !saw_point) {
            saw_point = true;
        } else if ((c == 'e' || c == 'E') && saw_digit) {
            std::string e = s.substr(i + 1);
            if (!is_plain_integer(e)) throw parse_error("bad exponent: " + text);
            exponent = std::strtol(e.c_str(), nullptr, 10);
            break;
        } else {
            throw parse_error("bad scalar literal: " + text);
        }
    }
    if (!saw_digit) throw parse_error("bad scalar literal: " + text);

    mpz_class mantissa(digits.empty() ? "0" : digits, 10);
    long pow10 = exponent - frac_digits;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(pow10 < 0 ? -pow10 : pow10));
    Rational r = pow10 >= 0 ? Rational(mantissa * scale) : Rational(mantissa, scale);
    r.canonicalize();
    return neg ? Rational(-r) : r;
}

double parse_double(const std::string& text) {
    auto slash = text.find('/');
    if (slash != std::string::npos)
        return to_double(parse_rational(text));
    char* end = nullptr;
    double v = std::strtod(text.c_str(), &end);
    if (end == text.c_str()) throw parse_error("bad scalar literal: " + text);
    return v;
}

std::string format_scalar(const Rational& v) {
    if (v.get_den() == 1) return v.get_num().get_str();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

std::string format_scalar(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace samc

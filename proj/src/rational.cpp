#include "simplexcolor/rational.hpp"

#include "simplexcolor/error.hpp"

#include <cctype>
#include <cmath>

namespace simplexcolor {
namespace {

bool all_digits(std::string_view s)
{
    if (s.empty()) return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

[[noreturn]] void bad(std::string_view text)
{
    throw ParseError("invalid rational literal '" + std::string(text) + "'");
}

Rational parse_decimal(std::string_view text, std::string_view body, bool negative)
{
    std::string_view mantissa = body;
    long exponent = 0;
    if (auto epos = body.find_first_of("eE"); epos != std::string_view::npos) {
        mantissa = body.substr(0, epos);
        std::string_view exp = body.substr(epos + 1);
        bool exp_negative = false;
        if (!exp.empty() && (exp.front() == '+' || exp.front() == '-')) {
            exp_negative = exp.front() == '-';
            exp.remove_prefix(1);
        }
        if (!all_digits(exp) || exp.size() > 6) bad(text);
        exponent = std::stol(std::string(exp));
        if (exp_negative) exponent = -exponent;
    }
    std::string_view int_part = mantissa;
    std::string_view frac_part;
    if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
        int_part = mantissa.substr(0, dot);
        frac_part = mantissa.substr(dot + 1);
    }
    if (int_part.empty() && frac_part.empty()) bad(text);
    if (!int_part.empty() && !all_digits(int_part)) bad(text);
    if (!frac_part.empty() && !all_digits(frac_part)) bad(text);

    std::string digits = std::string(int_part) + std::string(frac_part);
    mpz_class numerator(digits, 10);
    exponent -= static_cast<long>(frac_part.size());

    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    Rational value = exponent < 0 ? Rational(numerator, scale) : Rational(numerator * scale);
    value.canonicalize();
    return negative ? Rational(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    std::string_view s = trim(text);
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) bad(text);

    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::string_view num = s.substr(0, slash);
        std::string_view den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) bad(text);
        mpz_class d(std::string(den), 10);
        if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
        Rational value(mpz_class(std::string(num), 10), d);
        value.canonicalize();
        return negative ? Rational(-value) : value;
    }
    if (all_digits(s)) {
        Rational value(mpz_class(std::string(s), 10));
        return negative ? Rational(-value) : value;
    }
    return parse_decimal(text, s, negative);
}

Rational make_rational(long num, long den)
{
    if (den == 0) throw InputError("zero denominator");
    Rational value{mpz_class(num), mpz_class(den)};
    value.canonicalize();
    return value;
}

Rational rational_from_double(double value)
{
    if (!std::isfinite(value)) throw InputError("non-finite coordinate");
    return Rational(value);
}

std::string to_string(const Rational& value) { return value.get_str(10); }

int sign(const Rational& value) { return sgn(value); }

}  // namespace simplexcolor

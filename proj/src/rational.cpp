#include "branching/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace branching {

namespace {

BigInt parse_integer(const std::string& digits) {
    if (digits.empty()) throw std::invalid_argument("empty number");
    BigInt value = 0;
    for (char ch : digits) {
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw std::invalid_argument("invalid digit in number: " + digits);
        value = value * 10 + (ch - '0');
    }
    return value;
}

BigInt pow10(unsigned k) {
    BigInt r = 1;
    for (unsigned i = 0; i < k; ++i) r *= 10;
    return r;
}

}  // namespace

Rational parse_rational(const std::string& text_in) {
    std::string text = text_in;
    if (text.empty()) throw std::invalid_argument("empty rational");
    bool negative = false;
    std::size_t pos = 0;
    if (text[0] == '-' || text[0] == '+') {
        negative = text[0] == '-';
        pos = 1;
    }
    std::string body = text.substr(pos);
    Rational result;
    if (auto slash = body.find('/'); slash != std::string::npos) {
        BigInt num = parse_integer(body.substr(0, slash));
        BigInt den = parse_integer(body.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator: " + text);
        result = make_ratio(num, den);
    } else {
        long exponent = 0;
        if (auto e = body.find_first_of("eE"); e != std::string::npos) {
            std::string exp_text = body.substr(e + 1);
            body = body.substr(0, e);
            bool exp_negative = false;
            if (!exp_text.empty() && (exp_text[0] == '-' || exp_text[0] == '+')) {
                exp_negative = exp_text[0] == '-';
                exp_text = exp_text.substr(1);
            }
            exponent = static_cast<long>(parse_integer(exp_text));
            if (exp_negative) exponent = -exponent;
        }
        std::string int_part = body;
        std::string frac_part;
        if (auto dot = body.find('.'); dot != std::string::npos) {
            int_part = body.substr(0, dot);
            frac_part = body.substr(dot + 1);
        }
        if (int_part.empty() && frac_part.empty())
            throw std::invalid_argument("invalid rational: " + text);
        BigInt mantissa = parse_integer(int_part.empty() ? "0" : int_part) * pow10(frac_part.size());
        if (!frac_part.empty()) mantissa += parse_integer(frac_part);
        exponent -= static_cast<long>(frac_part.size());
        if (exponent >= 0)
            result = Rational(mantissa * pow10(static_cast<unsigned>(exponent)));
        else
            result = Rational(mantissa, pow10(static_cast<unsigned>(-exponent)));
    }
    return negative ? Rational(-result) : result;
}

std::string to_fraction_string(const Rational& value) {
    const BigInt num = boost::multiprecision::numerator(value);
    const BigInt den = boost::multiprecision::denominator(value);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::string to_decimal_string(const Rational& value, int digits) {
    BigInt num = boost::multiprecision::numerator(value);
    const BigInt den = boost::multiprecision::denominator(value);
    const bool negative = num < 0;
    if (negative) num = -num;
    const BigInt scale = pow10(static_cast<unsigned>(digits));
    BigInt scaled = (num * scale * 2 + den) / (den * 2);
    BigInt int_part = scaled / scale;
    BigInt frac = scaled % scale;
    std::string out = (negative && scaled != 0 ? "-" : "") + int_part.str();
    if (digits > 0) {
        std::string frac_str = frac.str();
        out += "." + std::string(static_cast<std::size_t>(digits) - frac_str.size(), '0') + frac_str;
    }
    return out;
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

BigInt isqrt_floor(const Rational& x) {
    if (x < 0) throw std::domain_error("isqrt_floor of negative value");
    BigInt n = boost::multiprecision::numerator(x) / boost::multiprecision::denominator(x);
    return boost::multiprecision::sqrt(n);
}

bool le_scaled_sqrt(const Rational& lhs, const Rational& k, const Rational& x) {
    if (lhs <= 0) return true;
    if (k <= 0 || x <= 0) return false;
    return lhs * lhs <= k * k * x;
}

bool lt_scaled_sqrt(const Rational& lhs, const Rational& k, const Rational& x) {
    if (k <= 0 || x <= 0) return lhs < 0;
    if (lhs < 0) return true;
    return lhs * lhs < k * k * x;
}

Rational pow(const Rational& base, unsigned k) {
    Rational r = 1;
    for (unsigned i = 0; i < k; ++i) r *= base;
    return r;
}

}  // namespace branching

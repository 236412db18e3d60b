#include "pursuit/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace pursuit {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

// cpp_int would read a leading 0 as an octal prefix
BigInt from_digits(const std::string& s) {
    size_t first = s.find_first_not_of('0');
    if (first == std::string::npos) return 0;
    return BigInt(s.substr(first));
}

}  // namespace

Rational parse_rational(const std::string& text) {
    std::string s = text;
    bool negative = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        negative = (s[0] == '-');
        s = s.substr(1);
    }
    if (s.empty()) throw std::invalid_argument("rational: empty literal '" + text + "'");

    Rational value;
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        std::string num = s.substr(0, slash);
        std::string den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) {
            throw std::invalid_argument("rational: malformed fraction '" + text + "'");
        }
        BigInt d = from_digits(den);
        if (d == 0) throw std::invalid_argument("rational: zero denominator in '" + text + "'");
        value = Rational(from_digits(num), d);
    } else {
        auto dot = s.find('.');
        if (dot == std::string::npos) {
            if (!all_digits(s)) throw std::invalid_argument("rational: malformed literal '" + text + "'");
            value = Rational(from_digits(s));
        } else {
            std::string whole = s.substr(0, dot);
            std::string frac = s.substr(dot + 1);
            if (whole.empty()) whole = "0";
            if (frac.empty()) frac = "0";
            if (!all_digits(whole) || !all_digits(frac)) {
                throw std::invalid_argument("rational: malformed decimal '" + text + "'");
            }
            BigInt scale = 1;
            for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
            value = Rational(from_digits(whole) * scale + from_digits(frac), scale);
        }
    }
    return negative ? Rational(-value) : value;
}

std::string fraction_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

double to_double(const Rational& r) {
    return r.convert_to<double>();
}

}  // namespace pursuit

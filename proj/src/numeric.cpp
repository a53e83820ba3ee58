#include "cmg/numeric.hpp"

#include <cctype>
#include <cstdio>
#include <sstream>

namespace cmg {

namespace {

BigInt parse_bigint(const std::string& text) {
    if (text.empty()) throw game_error("empty number");
    std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (i == text.size()) throw game_error("malformed number: " + text);
    for (; i < text.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw game_error("malformed number: " + text);
    return BigInt(text);
}

}  // namespace

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        BigInt num = parse_bigint(text.substr(0, slash));
        BigInt den = parse_bigint(text.substr(slash + 1));
        if (den == 0) throw game_error("zero denominator: " + text);
        return Rational(num, den);
    }
    auto dot = text.find('.');
    if (dot != std::string::npos) {
        std::string head = text.substr(0, dot);
        std::string frac = text.substr(dot + 1);
        bool neg = !head.empty() && head[0] == '-';
        BigInt whole = head.empty() || head == "-" || head == "+" ? BigInt(0) : parse_bigint(head);
        if (neg && whole < 0) whole = -whole;
        BigInt scale = 1;
        BigInt frac_val = 0;
        for (char c : frac) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw game_error("malformed number: " + text);
            frac_val = frac_val * 10 + (c - '0');
            scale *= 10;
        }
        Rational r = Rational(whole) + Rational(frac_val, scale);
        return neg ? -r : r;
    }
    return Rational(parse_bigint(text));
}

std::string rational_to_string(const Rational& r) {
    std::ostringstream os;
    os << boost::multiprecision::numerator(r);
    if (boost::multiprecision::denominator(r) != 1)
        os << '/' << boost::multiprecision::denominator(r);
    return os.str();
}

double parse_double(const std::string& text) {
    if (text.find('/') != std::string::npos)
        return static_cast<double>(parse_rational(text));
    std::size_t pos = 0;
    double v;
    try {
        v = std::stod(text, &pos);
    } catch (const std::exception&) {
        throw game_error("malformed number: " + text);
    }
    if (pos != text.size()) throw game_error("malformed number: " + text);
    return v;
}

std::string Backend<double>::str(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace cmg

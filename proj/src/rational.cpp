#include "malg/rational.hpp"

namespace malg {

std::string rat_str(const Rational& r) {
    Integer num = boost::multiprecision::numerator(r);
    Integer den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::optional<Rational> parse_rational(const std::string& text) {
    if (text.empty()) return std::nullopt;
    auto slash = text.find('/');
    auto is_int = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    try {
        if (slash == std::string::npos) {
            if (!is_int(text)) return std::nullopt;
            return Rational(Integer(text));
        }
        std::string num = text.substr(0, slash);
        std::string den = text.substr(slash + 1);
        if (!is_int(num) || !is_int(den)) return std::nullopt;
        Integer d(den);
        if (d == 0) return std::nullopt;
        return Rational(Integer(num), d);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

bool is_dyadic(const Rational& r) {
    Integer den = boost::multiprecision::denominator(r);
    // cpp_rational keeps the fraction reduced with positive denominator.
    while (den % 2 == 0) den /= 2;
    return den == 1;
}

std::optional<ExtRational> parse_ext_rational(const std::string& text) {
    if (text == "inf") return ExtRational::infinity();
    auto r = parse_rational(text);
    if (!r || *r < 0) return std::nullopt;
    return ExtRational(*r);
}

} // namespace malg

#include "kura/rational.hpp"

#include <cctype>

#include "kura/errors.hpp"

namespace kura {

std::string to_string(const Rational& q) {
    Integer num = numerator(q);
    Integer den = denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& text) {
    auto bad = [&] { throw SemanticError("malformed rational literal '" + text + "'"); };
    if (text.empty()) bad();
    auto slash = text.find('/');
    auto check_int = [&](const std::string& s) {
        if (s.empty()) bad();
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) bad();
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) bad();
    };
    if (slash == std::string::npos) {
        check_int(text);
        return Rational(Integer(text));
    }
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    check_int(num);
    check_int(den);
    Integer d(den);
    if (d == 0) throw SemanticError("zero denominator in '" + text + "'");
    return Rational(Integer(num)) / Rational(d);
}

}  // namespace kura

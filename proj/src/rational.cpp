#include "dessin/rational.hpp"

#include "dessin/error.hpp"

namespace dessin {

std::string to_fraction_string(const Rational& r) {
    std::string out = numerator(r).str();
    if (denominator(r) != 1) {
        out += '/';
        out += denominator(r).str();
    }
    return out;
}

Rational rational_from_string(const std::string& s) {
    const auto slash = s.find('/');
    auto parse_int = [](const std::string& t) {
        if (t.empty()) throw ValidationError("empty integer in fraction string");
        std::size_t i = (t[0] == '-') ? 1 : 0;
        if (i == t.size()) throw ValidationError("bad fraction string: " + t);
        for (; i < t.size(); ++i) {
            if (t[i] < '0' || t[i] > '9') {
                throw ValidationError("bad character in fraction string: " + t);
            }
        }
        return boost::multiprecision::cpp_int(t);
    };
    if (slash == std::string::npos) return Rational(parse_int(s));
    const auto num = parse_int(s.substr(0, slash));
    const auto den = parse_int(s.substr(slash + 1));
    if (den == 0) throw ValidationError("zero denominator: " + s);
    return Rational(num, den);
}

}  // namespace dessin

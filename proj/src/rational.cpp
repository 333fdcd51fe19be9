#include "drg/rational.hpp"

#include "drg/errors.hpp"

#include <cctype>

namespace drg {

bool is_integer(const Rat& x) { return denominator(x) == 1; }

Int floor_rat(const Rat& x) {
    Int q = numerator(x) / denominator(x);
    // Integer division truncates toward zero; fix up negative non-integers.
    if (x < 0 && q * denominator(x) != numerator(x)) --q;
    return q;
}

Int ceil_rat(const Rat& x) { return -floor_rat(-x); }

std::string to_string(const Int& x) { return x.str(); }

std::string to_string(const Rat& x) {
    if (is_integer(x)) return numerator(x).str();
    return numerator(x).str() + "/" + denominator(x).str();
}

Rat rat_from_string(std::string_view s) {
    auto parse_int = [](std::string_view t) -> Int {
        if (t.empty()) throw ParseError("empty integer literal");
        std::size_t start = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (start == t.size()) throw ParseError("sign without digits");
        for (std::size_t i = start; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i])))
                throw ParseError("bad integer literal: '" + std::string(t) + "'");
        return Int(std::string(t));
    };
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rat(parse_int(s));
    Int num = parse_int(s.substr(0, slash));
    Int den = parse_int(s.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
    return Rat(num, den);
}

std::string fixed_decimal(const Rat& x, int digits) {
    Int scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    bool neg = x < 0;
    Rat ax = neg ? Rat(-x) : x;
    // round(ax * scale) with ties away from zero
    Int scaled = floor_rat(ax * scale * 2 + 1) / 2;
    Int whole = scaled / scale;
    Int frac = scaled % scale;
    std::string f = frac.str();
    f.insert(f.begin(), static_cast<std::size_t>(digits) - f.size(), '0');
    std::string out = whole.str();
    if (digits > 0) out += "." + f;
    if (neg && scaled != 0) out.insert(out.begin(), '-');
    return out;
}

}  // namespace drg

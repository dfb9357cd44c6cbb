#include "treeaug/types.hpp"

#include <cctype>
#include <cstdlib>

namespace treeaug {

std::string format_weight(const Weight& w) {
    if (w.denominator() == 1) return std::to_string(w.numerator());
    return std::to_string(w.numerator()) + "/" + std::to_string(w.denominator());
}

namespace {

long long parse_ll(const std::string& s, const std::string& full) {
    if (s.empty()) throw Error(ErrorKind::invalid_input, "bad rational: '" + full + "'");
    std::size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &pos);
    } catch (const std::exception&) {
        throw Error(ErrorKind::invalid_input, "bad rational: '" + full + "'");
    }
    if (pos != s.size()) throw Error(ErrorKind::invalid_input, "bad rational: '" + full + "'");
    return v;
}

}  // namespace

Weight parse_weight(const std::string& text) {
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        long long num = parse_ll(text.substr(0, slash), text);
        long long den = parse_ll(text.substr(slash + 1), text);
        if (den == 0) throw Error(ErrorKind::invalid_input, "zero denominator: '" + text + "'");
        return Weight(num, den);
    }
    auto dot = text.find('.');
    if (dot != std::string::npos) {
        std::string frac = text.substr(dot + 1);
        long long whole = parse_ll(text.substr(0, dot).empty() ? "0" : text.substr(0, dot), text);
        if (frac.empty()) return Weight(whole);
        if (frac.size() > 12) throw Error(ErrorKind::invalid_input, "too many decimals: '" + text + "'");
        long long den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
        long long num = parse_ll(frac, text);
        bool neg = !text.empty() && text[0] == '-';
        Weight mag = Weight(std::llabs(whole)) + Weight(num, den);
        return neg ? -mag : mag;
    }
    return Weight(parse_ll(text, text));
}

}  // namespace treeaug

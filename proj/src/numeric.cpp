#include "bdg/numeric.hpp"

#include "bdg/errors.hpp"

#include <cctype>

namespace bdg {

std::string rat_to_string(const Rat& r) {
    const Int num = boost::multiprecision::numerator(r);
    const Int den = boost::multiprecision::denominator(r);
    if (den == 1) {
        return num.str();
    }
    return num.str() + "/" + den.str();
}

namespace {

bool valid_integer_token(const std::string& s) {
    if (s.empty()) {
        return false;
    }
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) {
        return false;
    }
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
            return false;
        }
    }
    return true;
}

} // namespace

Rat rat_from_string(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!valid_integer_token(text)) {
            throw InputError("not a rational number: '" + text + "'");
        }
        return Rat(Int(text));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!valid_integer_token(num) || !valid_integer_token(den)) {
        throw InputError("not a rational number: '" + text + "'");
    }
    const Int d(den);
    if (d == 0) {
        throw InputError("zero denominator: '" + text + "'");
    }
    return Rat(Int(num), d);
}

bool is_integer(const Rat& r) {
    return boost::multiprecision::denominator(r) == 1;
}

Int to_integer(const Rat& r) {
    if (!is_integer(r)) {
        throw InputError("not an integer: " + rat_to_string(r));
    }
    return boost::multiprecision::numerator(r);
}

} // namespace bdg

#include "normtop/rational.hpp"

#include "normtop/errors.hpp"

#include <cstddef>

namespace normtop {

Rat make_rat(long long num, long long den) {
    if (den == 0)
        throw InvalidArgument("rational with zero denominator");
    return Rat(Nat(num), Nat(den));
}

Nat rat_ceil(const Rat& x) {
    const Nat num = numerator(x);
    const Nat den = denominator(x); // always > 0
    Nat q = num / den;              // truncates toward zero
    if (num > 0 && num % den != 0)
        ++q;
    return q;
}

std::string rat_string(const Rat& x) {
    return numerator(x).str() + "/" + denominator(x).str();
}

Rat parse_rat(std::string_view text) {
    const auto bad = [&] {
        return InvalidArgument("not a rational: '" + std::string(text) + "'");
    };
    if (text.empty())
        throw bad();
    const std::size_t slash = text.find('/');
    const auto parse_int = [&](std::string_view part) {
        if (part.empty())
            throw bad();
        std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (i == part.size())
            throw bad();
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9')
                throw bad();
        return Nat(std::string(part));
    };
    if (slash == std::string_view::npos)
        return Rat(parse_int(text));
    const Nat num = parse_int(text.substr(0, slash));
    const Nat den = parse_int(text.substr(slash + 1));
    if (den == 0)
        throw InvalidArgument("rational with zero denominator: '" + std::string(text) + "'");
    return Rat(num, den);
}

} // namespace normtop

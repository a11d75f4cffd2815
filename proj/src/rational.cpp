#include "degseq/rational.hpp"

#include <algorithm>
#include <cctype>

#include "degseq/errors.hpp"

namespace degseq {

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() &&
           std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

} // namespace

Rational parse_rational(std::string_view text) {
    auto fail = [&]() -> Rational {
        throw DomainError("invalid rational literal: '" + std::string(text) + "'");
    };

    std::string_view num = text;
    std::string_view den;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
        if (!all_digits(den))
            return fail();
    }

    std::string_view digits = num;
    if (!digits.empty() && (digits.front() == '+' || digits.front() == '-'))
        digits.remove_prefix(1);
    if (!all_digits(digits))
        return fail();

    BigInt n{std::string(digits)};
    if (!num.empty() && num.front() == '-')
        n = -n;
    BigInt d = den.empty() ? BigInt(1) : BigInt(std::string(den));
    if (d == 0)
        return fail();
    return Rational(n, d); // constructor reduces to lowest terms
}

std::string format_rational(const Rational& q) {
    return q.str();
}

} // namespace degseq

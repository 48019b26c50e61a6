#include "monotile/rational.hpp"

#include <cctype>

#include "monotile/error.hpp"

namespace monotile {

Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
        text.remove_prefix(1);
    }
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
        text.remove_suffix(1);
    }
    if (text.empty()) {
        throw InvalidInput("empty number");
    }
    bool negative = false;
    if (text.front() == '-' || text.front() == '+') {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    auto digits = [&](std::string_view s) {
        if (s.empty()) {
            throw InvalidInput("malformed number");
        }
        BigInt v = 0;
        for (char ch : s) {
            if (!std::isdigit(static_cast<unsigned char>(ch))) {
                throw InvalidInput("malformed number: " + std::string(s));
            }
            v = v * 10 + (ch - '0');
        }
        return v;
    };
    Rational value;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        BigInt den = digits(text.substr(slash + 1));
        if (den == 0) {
            throw InvalidInput("zero denominator");
        }
        value = Rational(digits(text.substr(0, slash)), den);
    } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
        auto whole = text.substr(0, dot);
        auto frac = text.substr(dot + 1);
        BigInt scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) {
            scale *= 10;
        }
        BigInt num = (whole.empty() ? BigInt(0) : digits(whole)) * scale +
                     (frac.empty() ? BigInt(0) : digits(frac));
        value = Rational(num, scale);
    } else {
        value = Rational(digits(text));
    }
    return negative ? Rational(-value) : value;
}

Rational ratio(std::int64_t num, std::int64_t den) {
    if (den == 0) {
        throw DivisionUndefined("ratio with zero denominator");
    }
    return Rational(BigInt(num), BigInt(den));
}

std::string to_string(const Rational& q) {
    return q.str();
}

double to_double(const Rational& q) {
    return q.convert_to<double>();
}

Rational pow(const Rational& base, unsigned exponent) {
    Rational result = 1;
    for (unsigned i = 0; i < exponent; ++i) {
        result *= base;
    }
    return result;
}

BigInt floor(const Rational& q) {
    BigInt num = boost::multiprecision::numerator(q);
    BigInt den = boost::multiprecision::denominator(q);
    BigInt quot = num / den;
    if (num % den != 0 && num < 0) {
        quot -= 1;
    }
    return quot;
}

BigInt ceil(const Rational& q) {
    return -floor(Rational(-q));
}

std::size_t min_qualifying_size(const Rational& q, std::size_t size) {
    BigInt s = ceil(q * Rational(BigInt(size)));
    if (s < 0) {
        return 0;
    }
    return s.convert_to<std::size_t>();
}

} // namespace monotile

#include "ribbon/rational.hpp"

#include "ribbon/errors.hpp"

#include <cctype>

namespace ribbon {

Integer factorial(unsigned n) {
    Integer r = 1;
    for (unsigned k = 2; k <= n; ++k) r *= k;
    return r;
}

Integer binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Integer r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

std::string to_string(const Rational& r) {
    Integer p = numerator(r), q = denominator(r);
    if (q == 1) return p.str();
    return p.str() + "/" + q.str();
}

Rational rational_from_string(const std::string& s) {
    auto bad = [&] { throw InvalidGraphJson("not a rational: '" + s + "'"); };
    std::size_t slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    auto check = [&](const std::string& part, bool sign_ok) {
        if (part.empty()) bad();
        std::size_t i = 0;
        if (sign_ok && (part[0] == '-' || part[0] == '+')) i = 1;
        if (i == part.size()) bad();
        for (; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i]))) bad();
    };
    check(num, true);
    check(den, false);
    if (num[0] == '+') num.erase(0, 1);
    Integer q(den);
    if (q == 0) bad();
    return Rational(Integer(num), q);
}

bool is_integer(const Rational& r) { return denominator(r) == 1; }

double to_double(const Rational& r) { return r.convert_to<double>(); }

long long to_long_long(const Integer& n) { return n.convert_to<long long>(); }

} // namespace ribbon

#include "monadforge/integer.hpp"

#include "monadforge/errors.hpp"

namespace monadforge {

Integer binomial(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Integer r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

Integer ceil(const Rational& r) {
    const Integer num = numerator(r);
    const Integer den = denominator(r);  // always positive
    Integer q = num / den;               // truncates toward zero
    if (num % den != 0 && num > 0) q += 1;
    return q;
}

std::string to_string(const Integer& v) { return v.str(); }

std::string to_string(const Rational& v) {
    if (denominator(v) == 1) return numerator(v).str();
    return numerator(v).str() + "/" + denominator(v).str();
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) throw DomainError("64-bit overflow in parameter arithmetic");
    return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) throw DomainError("64-bit overflow in parameter arithmetic");
    return out;
}

} // namespace monadforge

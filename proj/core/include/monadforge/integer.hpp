#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace monadforge {

// Expression templates off: `auto x = a * b` must hold a value, not a proxy.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

/// Binomial coefficient C(n, k); zero when k < 0, k > n or n < 0.
Integer binomial(std::int64_t n, std::int64_t k);

/// Smallest integer >= r.
Integer ceil(const Rational& r);

/// Decimal rendering; rationals print as "p/q" (or "p" when integral).
std::string to_string(const Integer& v);
std::string to_string(const Rational& v);

/// Overflow-checked int64 helpers; throw DomainError on overflow.
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_add(std::int64_t a, std::int64_t b);

} // namespace monadforge

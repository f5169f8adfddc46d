#ifndef TRH_INTEGER_HPP
#define TRH_INTEGER_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <string>
#include <utility>

#include "trh/errors.hpp"

namespace trh {

/// Arbitrary-precision signed integer.
///
/// Thin value wrapper around boost::multiprecision::cpp_int. The wrapper
/// exists so the type can be used as an Eigen matrix scalar: the raw
/// cpp_int has implicit converting constructors that break Eigen's
/// overload resolution, while this type converts only from built-in
/// integers.
class Integer {
public:
    using rep = boost::multiprecision::cpp_int;

    Integer() = default;
    Integer(int v) : v_(v) {}
    Integer(long v) : v_(v) {}
    Integer(long long v) : v_(v) {}
    Integer(unsigned v) : v_(v) {}
    Integer(unsigned long v) : v_(v) {}
    Integer(unsigned long long v) : v_(v) {}
    explicit Integer(const std::string& decimal) : v_(decimal) {}
    explicit Integer(rep v) : v_(std::move(v)) {}

    const rep& raw() const { return v_; }
    rep& raw() { return v_; }

    Integer& operator+=(const Integer& o) { v_ += o.v_; return *this; }
    Integer& operator-=(const Integer& o) { v_ -= o.v_; return *this; }
    Integer& operator*=(const Integer& o) { v_ *= o.v_; return *this; }
    /// Truncated quotient (C++ semantics). Exactness-checked division is
    /// exact_div below.
    Integer& operator/=(const Integer& o) { v_ /= o.v_; return *this; }
    Integer& operator%=(const Integer& o) { v_ %= o.v_; return *this; }

    Integer operator-() const { return Integer(rep(-v_)); }
    Integer operator+() const { return *this; }

    friend Integer operator+(Integer a, const Integer& b) { a += b; return a; }
    friend Integer operator-(Integer a, const Integer& b) { a -= b; return a; }
    friend Integer operator*(Integer a, const Integer& b) { a *= b; return a; }
    friend Integer operator/(Integer a, const Integer& b) { a /= b; return a; }
    friend Integer operator%(Integer a, const Integer& b) { a %= b; return a; }

    friend bool operator==(const Integer& a, const Integer& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
        int c = a.v_.compare(b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    bool is_zero() const { return v_.is_zero(); }
    int sign() const { return v_.sign(); }

    std::string str() const { return v_.str(); }
    double to_double() const { return v_.convert_to<double>(); }

    bool fits_int64() const {
        return v_ >= std::numeric_limits<std::int64_t>::min() &&
               v_ <= std::numeric_limits<std::int64_t>::max();
    }
    std::int64_t to_int64() const {
        if (!fits_int64()) throw domain_error("Integer does not fit in 64 bits: " + str());
        return v_.convert_to<std::int64_t>();
    }

    friend std::ostream& operator<<(std::ostream& os, const Integer& x) {
        return os << x.v_;
    }

private:
    rep v_;
};

inline Integer abs(const Integer& x) { return x.sign() < 0 ? -x : x; }

inline Integer gcd(const Integer& a, const Integer& b) {
    return Integer(boost::multiprecision::gcd(a.raw(), b.raw()));
}

inline Integer lcm(const Integer& a, const Integer& b) {
    return Integer(boost::multiprecision::lcm(a.raw(), b.raw()));
}

inline Integer pow(const Integer& base, unsigned exp) {
    return Integer(boost::multiprecision::pow(base.raw(), exp));
}

inline Integer factorial(unsigned n) {
    Integer r = 1;
    for (unsigned k = 2; k <= n; ++k) r *= Integer(k);
    return r;
}

/// Quotient a/b that is required to be exact; throws otherwise.
inline Integer exact_div(const Integer& a, const Integer& b) {
    if (b.is_zero()) throw domain_error("exact_div: division by zero");
    Integer q = a / b;
    if (!(q * b == a))
        throw numerical_failure("exact_div: " + a.str() + " not divisible by " + b.str());
    return q;
}

/// Arbitrary-precision rational, used on exact non-integer paths
/// (Newton-Girard over rationals, exact Fejer evaluation).
using Rational = boost::multiprecision::cpp_rational;

inline Rational to_rational(const Integer& x) { return Rational(x.raw()); }

} // namespace trh

#endif

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <limits>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "linkvol/error.hpp"

namespace linkvol {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt gcd(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::gcd(a, b);
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
    if (a == 0 || b == 0)
        return 0;
    return boost::multiprecision::abs(a / gcd(a, b) * b);
}

/// Floor division for signed big integers (C++ `/` truncates toward zero).
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    if (b == 0)
        throw DivisionByZero();
    BigInt q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

/// Exact rational number, always stored reduced with a positive denominator.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {} // NOLINT: implicit from integers
    Rational(BigInt n) : num_(std::move(n)), den_(1) {} // NOLINT
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
        if (den_ == 0)
            throw DivisionByZero();
        reduce();
    }

    const BigInt& num() const noexcept { return num_; }
    const BigInt& den() const noexcept { return den_; }

    bool is_integer() const noexcept { return den_ == 1; }
    bool is_zero() const noexcept { return num_ == 0; }
    int sign() const noexcept { return num_ < 0 ? -1 : (num_ > 0 ? 1 : 0); }

    Rational abs() const { return Rational(boost::multiprecision::abs(num_), den_, Reduced{}); }
    Rational operator-() const { return Rational(-num_, den_, Reduced{}); }

    Rational reciprocal() const {
        if (num_ == 0)
            throw DivisionByZero();
        return num_ < 0 ? Rational(-den_, -num_, Reduced{}) : Rational(den_, num_, Reduced{});
    }

    Rational& operator+=(const Rational& o) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
        reduce();
        return *this;
    }
    Rational& operator-=(const Rational& o) { return *this += -o; }
    Rational& operator*=(const Rational& o) {
        num_ *= o.num_;
        den_ *= o.den_;
        reduce();
        return *this;
    }
    Rational& operator/=(const Rational& o) { return *this *= o.reciprocal(); }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const BigInt lhs = a.num_ * b.den_;
        const BigInt rhs = b.num_ * a.den_;
        if (lhs < rhs)
            return std::strong_ordering::less;
        if (lhs > rhs)
            return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    BigInt floor() const { return floor_div(num_, den_); }

    /// "p/q"; integers keep the "/1" so the form is uniform.
    std::string str() const { return num_.str() + "/" + den_.str(); }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    /// Parses "p/q" or "p".
    static Rational parse(std::string_view text) {
        const auto slash = text.find('/');
        try {
            if (slash == std::string_view::npos)
                return Rational(BigInt(std::string(text)));
            return Rational(BigInt(std::string(text.substr(0, slash))),
                            BigInt(std::string(text.substr(slash + 1))));
        } catch (const std::runtime_error&) {
            throw InvalidArgument("malformed rational '" + std::string(text) + "'");
        }
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    struct Reduced {};
    Rational(BigInt n, BigInt d, Reduced) : num_(std::move(n)), den_(std::move(d)) {}

    void reduce() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        const BigInt g = gcd(boost::multiprecision::abs(num_), den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    BigInt num_;
    BigInt den_;
};

enum class ArithOp { add, sub, mul, div };

/// Dispatching form of the four operations; `div` by zero throws DivisionByZero.
inline Rational rational_arith(const Rational& a, const Rational& b, ArithOp op) {
    switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
    }
    throw InvalidArgument("unknown arithmetic operation");
}

/// Narrow a big integer to int64, throwing if it does not fit.
inline std::int64_t to_int64(const BigInt& v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw InvalidArgument("integer " + v.str() + " does not fit in 64 bits");
    return static_cast<std::int64_t>(v);
}

} // namespace linkvol

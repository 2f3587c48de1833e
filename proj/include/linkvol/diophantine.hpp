#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "linkvol/rational.hpp"

namespace linkvol {

/// f(x) = (a*x + b) / (c*x + e) with rational coefficients. With c = 0 this is affine.
struct LinearFractional {
    Rational a, b, c, e;

    static LinearFractional affine(Rational slope, Rational intercept) {
        return {std::move(slope), std::move(intercept), Rational(0), Rational(1)};
    }

    /// nullopt at a pole.
    std::optional<Rational> operator()(std::int64_t x) const {
        const Rational X(x);
        const Rational den = c * X + e;
        if (den.is_zero())
            return std::nullopt;
        return (a * X + b) / den;
    }
};

/// Closed integer interval [lo, hi]; empty when lo > hi.
struct IntInterval {
    std::int64_t lo = 0;
    std::int64_t hi = -1;

    bool empty() const noexcept { return lo > hi; }
    std::uint64_t size() const noexcept {
        return empty() ? 0 : static_cast<std::uint64_t>(hi - lo) + 1;
    }
};

struct IntegerPoint {
    std::int64_t x;
    BigInt value;
    friend bool operator==(const IntegerPoint&, const IntegerPoint&) = default;
};

/// Every x in the domain where f(x) is defined and integral, in ascending x.
inline std::vector<IntegerPoint> bounded_diophantine(const LinearFractional& f, IntInterval domain) {
    std::vector<IntegerPoint> out;
    if (domain.empty())
        return out;
    for (std::int64_t x = domain.lo;; ++x) {
        if (const auto v = f(x); v && v->is_integer())
            out.push_back({x, v->num()});
        if (x == domain.hi)
            break;
    }
    return out;
}

} // namespace linkvol

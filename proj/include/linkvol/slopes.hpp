#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <utility>
#include <string>
#include <vector>

#include "linkvol/error.hpp"

namespace linkvol {

/// Isotopy class of an essential simple closed curve on a torus: a primitive pair (p, q) up to
/// sign, stored with q > 0, or (1, 0).
class Slope {
public:
    Slope(std::int64_t p, std::int64_t q) : p_(p), q_(q) {
        if (p == 0 && q == 0)
            throw InvalidArgument("slope (0,0) is not a curve");
        if (std::gcd(p, q) != 1)
            throw InvalidArgument("slope (" + std::to_string(p) + "," + std::to_string(q) +
                                  ") is not primitive");
        if (q_ < 0 || (q_ == 0 && p_ < 0)) {
            p_ = -p_;
            q_ = -q_;
        }
    }

    std::int64_t p() const noexcept { return p_; }
    std::int64_t q() const noexcept { return q_; }

    friend bool operator==(const Slope&, const Slope&) = default;
    friend auto operator<=>(const Slope&, const Slope&) = default;

    friend std::ostream& operator<<(std::ostream& os, const Slope& s) {
        return os << '(' << s.p_ << ',' << s.q_ << ')';
    }

private:
    std::int64_t p_;
    std::int64_t q_;
};

namespace detail {

inline std::int64_t checked_cross(std::int64_t ap, std::int64_t aq, std::int64_t bp, std::int64_t bq) {
    const __int128 v = static_cast<__int128>(ap) * bq - static_cast<__int128>(aq) * bp;
    if (v > INT64_MAX || v < INT64_MIN)
        throw InvalidArgument("slope intersection number overflows 64 bits");
    return static_cast<std::int64_t>(v);
}

/// x, y with a*x + b*y = gcd(a, b).
inline std::array<std::int64_t, 3> extended_gcd(std::int64_t a, std::int64_t b) {
    std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        const std::int64_t q = old_r / r;
        old_r = std::exchange(r, old_r - q * r);
        old_s = std::exchange(s, old_s - q * s);
        old_t = std::exchange(t, old_t - q * t);
    }
    if (old_r < 0)
        return {-old_r, -old_s, -old_t};
    return {old_r, old_s, old_t};
}

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

} // namespace detail

/// Absolute algebraic intersection number |a.p*b.q - a.q*b.p|.
inline std::int64_t delta(const Slope& a, const Slope& b) {
    const std::int64_t v = detail::checked_cross(a.p(), a.q(), b.p(), b.q());
    return v < 0 ? -v : v;
}

/// 2x2 integer matrix with determinant 1 acting on column vectors (p, q).
struct SL2Z {
    std::int64_t a, b, c, d;

    Slope apply(const Slope& s) const {
        return Slope(a * s.p() + b * s.q(), c * s.p() + d * s.q());
    }
    SL2Z inverse() const { return {d, -b, -c, a}; }

    /// A change of basis sending `s` to (1, 0).
    static SL2Z sending_to_meridian(const Slope& s) {
        const auto [g, x, y] = detail::extended_gcd(s.p(), s.q());
        (void)g;
        // [[x, y], [-q, p]] * (p, q) = (x p + y q, 0) = (1, 0); det = x p + y q = 1.
        return {x, y, -s.q(), s.p()};
    }
};

/// Every slope alpha with delta(f, alpha) = k1 and delta(c, alpha) <= k2, sorted by (p, q).
///
/// Works in a basis where f = (1, 0): then alpha = (a, k1) up to sign and the second condition
/// reads |c'.p * k1 - c'.q * a| <= k2, an interval of length 2*k2/|c'.q| in a. The list is
/// complete, and has at most 2*k2 + 1 entries.
inline std::vector<Slope> enumerate_constrained_slopes(const Slope& f, const Slope& c, std::int64_t k1,
                                                       std::int64_t k2) {
    if (k1 < 1)
        throw InvalidArgument("k1 must be positive");
    if (k2 < 0)
        throw InvalidArgument("k2 must be non-negative");
    if (f == c)
        throw InvalidArgument("constraint slopes coincide; the solution set is infinite or empty");

    const SL2Z to_std = SL2Z::sending_to_meridian(f);
    const SL2Z from_std = to_std.inverse();
    const Slope c_std = to_std.apply(c);
    const std::int64_t cp = c_std.p();
    const std::int64_t cq = c_std.q(); // > 0, since c != f

    // |cp*k1 - cq*a| <= k2  <=>  (cp*k1 - k2)/cq <= a <= (cp*k1 + k2)/cq
    const std::int64_t lo = detail::ceil_div(cp * k1 - k2, cq);
    const std::int64_t hi = detail::floor_div(cp * k1 + k2, cq);

    std::vector<Slope> out;
    for (std::int64_t a = lo; a <= hi; ++a) {
        if (std::gcd(a, k1) != 1)
            continue;
        out.push_back(from_std.apply(Slope(a, k1)));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());

    if (out.size() > static_cast<std::size_t>(2 * (2 * k2 + 1)))
        throw Error("slope enumeration exceeded its a priori size bound");
    return out;
}

} // namespace linkvol

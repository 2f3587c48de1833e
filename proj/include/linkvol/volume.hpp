#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>

#include "linkvol/error.hpp"

namespace linkvol {

/// Named positive hyperbolic volume with a note on where its digits come from.
struct VolumeConstant {
    std::string name;
    double value;
    std::string provenance;
};

/// Catalan's constant from the alternating series sum (-1)^k / (2k+1)^2. The mean of two
/// consecutive partial sums cancels the leading error term, leaving O(terms^-3).
inline double catalan_series(std::int64_t terms) {
    long double sum = 0.0L;
    long double last = 0.0L;
    for (std::int64_t k = 0; k <= terms; ++k) {
        const long double d = 2.0L * static_cast<long double>(k) + 1.0L;
        last = ((k % 2 == 0) ? 1.0L : -1.0L) / (d * d);
        sum += last;
    }
    return static_cast<double>(sum - last / 2.0L);
}

/// Lobachevsky function L(theta) = -int_0^theta log|2 sin t| dt, for 0 < theta <= pi/2.
/// The log singularity at 0 is integrated in closed form; the smooth remainder
/// log(sin t / t) by composite Simpson.
inline double lobachevsky(double theta, int panels = 2000) {
    if (!(theta > 0.0) || theta > std::numbers::pi / 2 + 1e-15)
        throw InvalidArgument("lobachevsky is evaluated on (0, pi/2]");
    // int_0^theta log(2t) dt = theta log(2 theta) - theta
    const double singular = theta * std::log(2.0 * theta) - theta;
    auto smooth = [](double t) { return t == 0.0 ? 0.0 : std::log(std::sin(t) / t); };
    const int n = panels % 2 == 0 ? panels : panels + 1;
    const double h = theta / n;
    double s = smooth(0.0) + smooth(theta);
    for (int i = 1; i < n; ++i)
        s += (i % 2 == 1 ? 4.0 : 2.0) * smooth(i * h);
    return -(singular + s * h / 3.0);
}

/// V0, the volume of the Whitehead link exterior, equal to 4 times Catalan's constant.
inline const VolumeConstant& whitehead_volume() {
    static const VolumeConstant v{
        "V0", 3.663862376708876,
        "volume of the Whitehead link exterior; stated as 3.66...; digits are 4 x Catalan's constant, "
        "checked against 4 * sum (-1)^k/(2k+1)^2 to 12 digits"};
    return v;
}

/// Safe floor for the volume of a one-cusped hyperbolic knot exterior in S^3.
inline const VolumeConstant& one_cusp_floor() {
    static const VolumeConstant v{"one-cusp floor", 2.0, "lower bound vol >= 2 for hyperbolic knot exteriors"};
    return v;
}

/// Figure-eight knot exterior, the sharp one-cusp minimum: two regular ideal tetrahedra, 6 L(pi/3).
inline const VolumeConstant& figure_eight_volume() {
    static const VolumeConstant v{"figure-eight", 2.029883212819307,
                                  "two regular ideal tetrahedra, 6 * L(pi/3), checked by quadrature"};
    return v;
}

/// A degree-p branched cover of S^3 over a hyperbolic link whose complement has the given volume.
class CoverCertificate {
public:
    CoverCertificate(std::int64_t degree, double branch_volume, std::string label)
        : degree_(degree), branch_volume_(branch_volume), label_(std::move(label)) {
        if (degree_ < 2)
            throw InvalidArgument("a cover certificate needs degree >= 2");
        if (!(branch_volume_ > 0.0))
            throw InvalidArgument("branch volume must be positive");
    }

    std::int64_t degree() const noexcept { return degree_; }
    double branch_volume() const noexcept { return branch_volume_; }
    const std::string& label() const noexcept { return label_; }

private:
    std::int64_t degree_;
    double branch_volume_;
    std::string label_;
};

/// degree * volume. Accepts degree 1 (the unbranched identity) unlike a certificate.
inline double complexity(std::int64_t degree, double branch_volume) {
    if (degree < 1)
        throw InvalidArgument("degree must be positive");
    if (!(branch_volume > 0.0))
        throw InvalidArgument("branch volume must be positive");
    return static_cast<double>(degree) * branch_volume;
}

inline double complexity(const CoverCertificate& c) { return complexity(c.degree(), c.branch_volume()); }

/// Largest integer p with p * volume_floor < budget (0 when even p = 1 exceeds the budget).
inline std::int64_t degree_bound_for_budget(double budget, double volume_floor) {
    if (!(volume_floor > 0.0))
        throw InvalidArgument("volume floor must be positive");
    if (budget <= 0.0)
        return 0;
    auto p = static_cast<std::int64_t>(std::floor(budget / volume_floor));
    while (p > 0 && static_cast<double>(p) * volume_floor >= budget)
        --p;
    while (static_cast<double>(p + 1) * volume_floor < budget)
        ++p;
    return p;
}

} // namespace linkvol

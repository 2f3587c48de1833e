#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "linkvol/error.hpp"
#include "linkvol/rational.hpp"

namespace linkvol {

/// Compact surface: orientable genus, or cross-cap count when non-orientable.
struct SurfaceData {
    std::int64_t genus = 0;
    std::int64_t boundary = 0;
    bool orientable = true;

    SurfaceData() = default;
    SurfaceData(std::int64_t genus_, std::int64_t boundary_, bool orientable_)
        : genus(genus_), boundary(boundary_), orientable(orientable_) {
        if (genus < 0 || boundary < 0)
            throw InvalidArgument("surface genus and boundary count must be non-negative");
        if (!orientable && genus < 1)
            throw InvalidArgument("a non-orientable surface needs at least one cross-cap");
    }

    std::int64_t euler_characteristic() const {
        return orientable ? 2 - 2 * genus - boundary : 2 - genus - boundary;
    }

    friend bool operator==(const SurfaceData&, const SurfaceData&) = default;

    friend std::ostream& operator<<(std::ostream& os, const SurfaceData& s) {
        return os << (s.orientable ? "orientable" : "non-orientable") << " genus " << s.genus
                  << ", " << s.boundary << " boundary";
    }
};

/// The fiber surface F_{2,1}: genus 2, one boundary component, chi = -3.
inline SurfaceData genus_two_one_puncture() { return SurfaceData(2, 1, true); }

/// Compact 2-orbifold: an underlying surface with cone points. Cones are kept sorted.
class Orbifold2D {
public:
    Orbifold2D() = default;
    Orbifold2D(bool orientable, std::int64_t genus, std::int64_t boundary, std::vector<std::int64_t> cones)
        : surface_(genus, boundary, orientable), cones_(std::move(cones)) {
        for (auto c : cones_)
            if (c < 2)
                throw InvalidArgument("cone point index " + std::to_string(c) + " is below 2");
        std::sort(cones_.begin(), cones_.end());
    }
    Orbifold2D(SurfaceData surface, std::vector<std::int64_t> cones)
        : Orbifold2D(surface.orientable, surface.genus, surface.boundary, std::move(cones)) {}

    static Orbifold2D disk(std::vector<std::int64_t> cones = {}) { return {true, 0, 1, std::move(cones)}; }
    static Orbifold2D annulus(std::vector<std::int64_t> cones = {}) { return {true, 0, 2, std::move(cones)}; }
    static Orbifold2D mobius_band(std::vector<std::int64_t> cones = {}) {
        return {false, 1, 1, std::move(cones)};
    }
    static Orbifold2D sphere(std::vector<std::int64_t> cones = {}) { return {true, 0, 0, std::move(cones)}; }
    static Orbifold2D projective_plane(std::vector<std::int64_t> cones = {}) {
        return {false, 1, 0, std::move(cones)};
    }

    const SurfaceData& surface() const noexcept { return surface_; }
    bool orientable() const noexcept { return surface_.orientable; }
    std::int64_t genus() const noexcept { return surface_.genus; }
    std::int64_t boundary() const noexcept { return surface_.boundary; }
    const std::vector<std::int64_t>& cones() const noexcept { return cones_; }

    friend bool operator==(const Orbifold2D&, const Orbifold2D&) = default;

    /// Short human-readable name, e.g. "disk(2,2,3)" or "Mobius band".
    std::string describe() const {
        std::string name;
        const auto& s = surface_;
        if (s.orientable && s.genus == 0 && s.boundary == 0)
            name = "sphere";
        else if (s.orientable && s.genus == 0 && s.boundary == 1)
            name = "disk";
        else if (s.orientable && s.genus == 0 && s.boundary == 2)
            name = "annulus";
        else if (!s.orientable && s.genus == 1 && s.boundary == 0)
            name = "projective plane";
        else if (!s.orientable && s.genus == 1 && s.boundary == 1)
            name = "Mobius band";
        else
            name = std::string(s.orientable ? "orientable" : "non-orientable") + " surface (genus " +
                   std::to_string(s.genus) + ", boundary " + std::to_string(s.boundary) + ")";
        if (!cones_.empty()) {
            name += " (";
            for (std::size_t i = 0; i < cones_.size(); ++i)
                name += (i ? "," : "") + std::to_string(cones_[i]);
            name += ")";
        }
        return name;
    }

    friend std::ostream& operator<<(std::ostream& os, const Orbifold2D& b) { return os << b.describe(); }

private:
    SurfaceData surface_;
    std::vector<std::int64_t> cones_;
};

/// chi(underlying surface) - sum over cones of (1 - 1/index).
inline Rational chi_orb(const Orbifold2D& b) {
    Rational chi(b.surface().euler_characteristic());
    for (auto c : b.cones())
        chi -= Rational(1) - Rational(BigInt(1), BigInt(c));
    return chi;
}

/// Hints for covers whose boundary count or orientability the Euler characteristic alone does not fix.
struct CoverHints {
    std::optional<std::int64_t> boundary;
    std::optional<bool> orientable;
};

/// Branched cover of `base` of the given degree; `branch_local_degrees[k]` lists the local degrees
/// of the preimages of the k-th branch point and must sum to `degree`.
///
/// chi(cover) = degree * chi(base) - sum (local - 1). The boundary count is derived when it is
/// forced: no boundary, degree 1, or a double cover of a base with one boundary circle and an
/// orientable underlying surface, where the boundary lifts to one circle iff the number of
/// branch points is odd. Otherwise it must be supplied in `hints`.
inline SurfaceData riemann_hurwitz_cover(const SurfaceData& base, std::int64_t degree,
                                         const std::vector<std::vector<std::int64_t>>& branch_local_degrees,
                                         CoverHints hints = {}) {
    if (degree < 1)
        throw InvalidArgument("cover degree must be positive");
    std::int64_t ramification = 0;
    std::int64_t branch_points = 0;
    for (const auto& locals : branch_local_degrees) {
        std::int64_t total = 0;
        bool ramified = false;
        for (auto l : locals) {
            if (l < 1)
                throw InvalidArgument("local degree must be positive");
            total += l;
            ramification += l - 1;
            ramified = ramified || l > 1;
        }
        if (total != degree)
            throw InvalidArgument("local degrees over a branch point sum to " + std::to_string(total) +
                                  ", expected " + std::to_string(degree));
        branch_points += ramified;
    }

    const std::int64_t chi = degree * base.euler_characteristic() - ramification;

    bool orientable = base.orientable;
    if (!base.orientable && degree > 1) {
        if (!hints.orientable)
            throw InvalidArgument("orientability of a cover of a non-orientable surface must be supplied");
        orientable = *hints.orientable;
    } else if (hints.orientable && *hints.orientable != orientable) {
        throw InvalidArgument("a cover of an orientable surface is orientable");
    }

    std::int64_t boundary = 0;
    if (hints.boundary) {
        boundary = *hints.boundary;
    } else if (base.boundary == 0) {
        boundary = 0;
    } else if (degree == 1) {
        boundary = base.boundary;
    } else if (degree == 2 && base.boundary == 1 && base.orientable) {
        boundary = (branch_points % 2 == 1) ? 1 : 2;
    } else {
        throw InvalidArgument("boundary count of this cover is not determined; supply it");
    }
    if (boundary < (base.boundary > 0 ? 1 : 0) || boundary > degree * base.boundary)
        throw InvalidArgument("boundary count inconsistent with the base");

    const std::int64_t twice_or_once = orientable ? 2 : 1;
    const std::int64_t numerator = 2 - boundary - chi;
    if (numerator < 0 || numerator % twice_or_once != 0)
        throw InvalidArgument("no surface has chi = " + std::to_string(chi) + " with " +
                              std::to_string(boundary) + " boundary components");
    return SurfaceData(numerator / twice_or_once, boundary, orientable);
}

/// Orientable double cover of a non-orientable orbifold: every cone point lifts twice.
inline Orbifold2D orientation_double_cover(const Orbifold2D& b) {
    if (b.orientable())
        throw InvalidArgument("orientation double cover requested for an orientable orbifold");
    // k cross-caps, m boundary circles -> orientable genus k - 1 with 2m boundary circles
    std::vector<std::int64_t> cones;
    for (auto c : b.cones()) {
        cones.push_back(c);
        cones.push_back(c);
    }
    return Orbifold2D(true, b.genus() - 1, 2 * b.boundary(), std::move(cones));
}

enum class DegreeFilter {
    chi_only,      ///< chi(F) = d * chi_orb(B)
    cone_divisible ///< additionally every cone index divides d
};

/// Positive d with chi(f) = d * chi_orb(b), optionally requiring every cone index to divide d.
/// When chi_orb(b) != 0 there is at most one candidate, found by exact division.
inline std::vector<std::int64_t> horizontal_degree_solutions(const SurfaceData& f, const Orbifold2D& b,
                                                             DegreeFilter filter = DegreeFilter::cone_divisible) {
    if (!b.orientable())
        throw InvalidArgument("horizontal_degree_solutions needs an orientable base; "
                              "use nonorientable_base_solutions");
    const Rational chi_base = chi_orb(b);
    const Rational chi_f(f.euler_characteristic());
    if (chi_base.is_zero()) {
        if (chi_f.is_zero())
            throw InfiniteSolutions("chi(F) = 0 = chi_orb(B): every degree solves the equation");
        return {};
    }
    const Rational d = chi_f / chi_base;
    if (!d.is_integer() || d.sign() <= 0)
        return {};
    const std::int64_t degree = to_int64(d.num());
    if (filter == DegreeFilter::cone_divisible)
        for (auto c : b.cones())
            if (degree % c != 0)
                return {};
    return {degree};
}

/// Degrees d over a non-orientable base for an orientable horizontal surface. Such a cover
/// factors through the orientation double cover, so d = 2 d' where d' solves the equation over
/// the double cover; with `cone_divisible` each lifted cone index must divide d'.
inline std::vector<std::int64_t> nonorientable_base_solutions(const SurfaceData& f, const Orbifold2D& b,
                                                              DegreeFilter filter = DegreeFilter::cone_divisible) {
    if (b.orientable())
        throw InvalidArgument("nonorientable_base_solutions needs a non-orientable base");
    if (!f.orientable)
        throw InvalidArgument("the covering surface must be orientable");
    std::vector<std::int64_t> out;
    for (auto d : horizontal_degree_solutions(f, orientation_double_cover(b), filter))
        out.push_back(2 * d);
    return out;
}

/// Dispatches on the orientability of the base.
inline std::vector<std::int64_t> degree_solutions(const SurfaceData& f, const Orbifold2D& b,
                                                  DegreeFilter filter = DegreeFilter::cone_divisible) {
    return b.orientable() ? horizontal_degree_solutions(f, b, filter) : nonorientable_base_solutions(f, b, filter);
}

} // namespace linkvol

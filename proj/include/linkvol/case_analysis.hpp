#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "linkvol/diophantine.hpp"
#include "linkvol/orbifold.hpp"
#include "linkvol/parallel.hpp"
#include "linkvol/seifert.hpp"

namespace linkvol {

/// One base orbifold obtained by drilling a fiber out of M_n, and the degrees of horizontal
/// covers of it by the fiber surface.
struct CaseResult {
    int number = 0; // 1..5
    std::string description;
    Orbifold2D orbifold;
    Rational chi_orb;
    std::vector<std::int64_t> degrees;          // chi equation and cone divisibility
    std::vector<std::int64_t> chi_only_degrees; // chi equation alone

    bool admits_horizontal() const { return !degrees.empty(); }
};

struct CaseAnalysis {
    std::int64_t n = 0;
    SurfaceData fiber_surface;
    std::array<CaseResult, 5> cases;

    bool admits_horizontal() const {
        return std::any_of(cases.begin(), cases.end(), [](const CaseResult& c) { return c.admits_horizontal(); });
    }
    /// (case number, degree) for every nonempty case.
    std::vector<std::pair<int, std::int64_t>> solutions() const {
        std::vector<std::pair<int, std::int64_t>> out;
        for (const auto& c : cases)
            for (auto d : c.degrees)
                out.emplace_back(c.number, d);
        return out;
    }
};

namespace detail {

inline std::size_t first_fiber_with_alpha(const SeifertSymbol& s, std::int64_t alpha) {
    for (std::size_t i = 0; i < s.fibers().size(); ++i)
        if (s.fibers()[i].alpha == alpha)
            return i;
    throw Error("no fiber of index " + std::to_string(alpha) + " in " + [&] {
        std::ostringstream os;
        os << s;
        return os.str();
    }());
}

inline CaseResult solve_case(int number, std::string description, Orbifold2D orbifold,
                             const SurfaceData& fiber_surface) {
    CaseResult r;
    r.number = number;
    r.description = std::move(description);
    r.chi_orb = chi_orb(orbifold);
    r.degrees = degree_solutions(fiber_surface, orbifold, DegreeFilter::cone_divisible);
    r.chi_only_degrees = degree_solutions(fiber_surface, orbifold, DegreeFilter::chi_only);
    r.orbifold = std::move(orbifold);
    return r;
}

} // namespace detail

/// The five bases left after removing a regular or exceptional fiber from either fibration of
/// M_n, each with its chi_orb and horizontal-cover degrees for `fiber_surface`:
///   1. On fibration, exceptional fiber removed: Mobius band
///   2. On fibration, regular fiber removed: Mobius band (2)
///   3. Oo fibration, regular fiber removed: disk (2, 2, |4n-1|)
///   4. Oo fibration, index |4n-1| fiber removed: disk (2, 2)
///   5. Oo fibration, an index-2 fiber removed: disk (2, |4n-1|)
inline CaseAnalysis prism_case_analysis(std::int64_t n, const SurfaceData& fiber_surface = genus_two_one_puncture()) {
    const auto [oo, on] = prism_fibrations(n);
    const std::int64_t m = prism_index(n);

    CaseAnalysis out;
    out.n = n;
    out.fiber_surface = fiber_surface;
    out.cases[0] = detail::solve_case(1, "non-orientable fibration, exceptional fiber removed",
                                      remove_fiber(on, ExceptionalFiber{detail::first_fiber_with_alpha(on, 2)}),
                                      fiber_surface);
    out.cases[1] = detail::solve_case(2, "non-orientable fibration, regular fiber removed",
                                      remove_fiber(on, RegularFiber{}), fiber_surface);
    out.cases[2] = detail::solve_case(3, "orientable fibration, regular fiber removed",
                                      remove_fiber(oo, RegularFiber{}), fiber_surface);
    out.cases[3] = detail::solve_case(4, "orientable fibration, index-|4n-1| fiber removed",
                                      remove_fiber(oo, ExceptionalFiber{detail::first_fiber_with_alpha(oo, m)}),
                                      fiber_surface);
    out.cases[4] = detail::solve_case(5, "orientable fibration, index-2 fiber removed",
                                      remove_fiber(oo, ExceptionalFiber{detail::first_fiber_with_alpha(oo, 2)}),
                                      fiber_surface);
    return out;
}

/// Case analysis for every non-degenerate n in the interval, ascending in n.
inline std::vector<CaseAnalysis> prism_case_analysis_range(IntInterval range,
                                                           const SurfaceData& fiber_surface = genus_two_one_puncture(),
                                                           unsigned workers = default_workers()) {
    std::vector<std::int64_t> ns;
    if (!range.empty())
        for (std::int64_t n = range.lo;; ++n) {
            if (prism_index(n) >= 3)
                ns.push_back(n);
            if (n == range.hi)
                break;
        }
    return parallel_map(
        ns.size(), [&](std::size_t i) { return prism_case_analysis(ns[i], fiber_surface); }, workers);
}

} // namespace linkvol

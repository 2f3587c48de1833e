#include <gtest/gtest.h>

#include <numeric>

#include "linkvol/case_analysis.hpp"
#include "linkvol/orbifold.hpp"

using namespace linkvol;

namespace {

Rational q(long long n, long long d = 1) { return Rational(BigInt(n), BigInt(d)); }

const SurfaceData kF = genus_two_one_puncture();

/// Degrees found by scanning d = 1..limit with integer-only arithmetic: chi(F) = d * chi_orb(B),
/// chi_orb written over the common denominator L = lcm of the cones. Non-orientable bases go
/// through the doubled cone list on the orientable double cover.
std::vector<std::int64_t> scan_degrees(long long chi_f, const Orbifold2D& b, bool cone_divisible, long long limit) {
    long long chi_surface = b.surface().euler_characteristic();
    std::vector<long long> cones(b.cones().begin(), b.cones().end());
    long long factor = 1;
    if (!b.orientable()) {
        chi_surface *= 2;
        auto copy = cones;
        cones.insert(cones.end(), copy.begin(), copy.end());
        factor = 2;
    }
    long long lcm = 1;
    for (auto c : cones)
        lcm = std::lcm(lcm, c);
    long long scaled = chi_surface * lcm; // L * chi_orb
    for (auto c : cones)
        scaled -= lcm - lcm / c;
    std::vector<std::int64_t> out;
    for (long long d = 1; d <= limit; ++d) {
        if (chi_f * lcm != d * scaled)
            continue;
        bool ok = true;
        if (cone_divisible)
            for (auto c : cones)
                ok = ok && d % c == 0;
        if (ok)
            out.push_back(factor * d);
    }
    return out;
}

} // namespace

TEST(Orbifold, ChiOrbExamples) {
    EXPECT_EQ(chi_orb(Orbifold2D::mobius_band()), q(0));
    EXPECT_EQ(chi_orb(Orbifold2D::disk({2, 2, 3})), q(-2, 3));
    EXPECT_EQ(chi_orb(Orbifold2D::disk({2, 5})), q(-3, 10));
    EXPECT_EQ(chi_orb(Orbifold2D::sphere({2, 3, 5})), q(1, 30));
    EXPECT_EQ(chi_orb(Orbifold2D::mobius_band({2})), q(-1, 2));
}

TEST(Orbifold, InvalidInputs) {
    EXPECT_THROW(Orbifold2D::disk({1}), InvalidArgument);
    EXPECT_THROW(SurfaceData(0, 1, false), InvalidArgument);
    EXPECT_THROW(SurfaceData(-1, 0, true), InvalidArgument);
}

TEST(Orbifold, ConesAreSorted) {
    EXPECT_EQ(Orbifold2D::disk({5, 2, 3}).cones(), (std::vector<std::int64_t>{2, 3, 5}));
    EXPECT_EQ(Orbifold2D::disk({3, 2}), Orbifold2D::disk({2, 3}));
    EXPECT_EQ(Orbifold2D::mobius_band({2}).describe(), "Mobius band (2)");
}

TEST(RiemannHurwitz, DoubleCoversOfTheDisk) {
    const SurfaceData disk(0, 1, true);
    // five branch points: chi = 2 - 5 = -3, odd count so one boundary circle: genus 2
    EXPECT_EQ(riemann_hurwitz_cover(disk, 2, std::vector<std::vector<std::int64_t>>(5, {2})), kF);
    // two branch points: an annulus
    EXPECT_EQ(riemann_hurwitz_cover(disk, 2, {{2}, {2}}), SurfaceData(0, 2, true));
    // no branching: two disks is not connected, the formula gives chi 2 with boundary 2 -> rejected
    EXPECT_THROW(riemann_hurwitz_cover(disk, 2, {}), InvalidArgument);
}

TEST(RiemannHurwitz, DegreeOneIsIdentity) {
    for (const SurfaceData& s : {SurfaceData(0, 1, true), SurfaceData(2, 1, true), SurfaceData(1, 1, false),
                                 SurfaceData(3, 0, true)})
        EXPECT_EQ(riemann_hurwitz_cover(s, 1, {}), s);
}

TEST(RiemannHurwitz, LocalDegreesMustSumToDegree) {
    EXPECT_THROW(riemann_hurwitz_cover(SurfaceData(0, 1, true), 3, {{2}}), InvalidArgument);
    EXPECT_THROW(riemann_hurwitz_cover(SurfaceData(0, 1, true), 0, {}), InvalidArgument);
}

TEST(RiemannHurwitz, NonOrientableBaseNeedsHints) {
    const SurfaceData mobius(1, 1, false);
    EXPECT_THROW(riemann_hurwitz_cover(mobius, 2, {}), InvalidArgument);
    EXPECT_EQ(riemann_hurwitz_cover(mobius, 2, {}, {.boundary = 2, .orientable = true}), SurfaceData(0, 2, true));
}

TEST(RiemannHurwitz, ChiMatchesFormulaOnRandomBranchData) {
    // closed orientable bases, so the boundary is forced to zero
    for (std::int64_t g = 0; g <= 2; ++g)
        for (std::int64_t d = 2; d <= 4; ++d)
            for (std::int64_t branch = 0; branch <= 6; ++branch) {
                std::vector<std::vector<std::int64_t>> locals(static_cast<std::size_t>(branch), {d});
                const std::int64_t chi = d * (2 - 2 * g) - branch * (d - 1);
                if (chi > 2 || chi % 2 != 0) {
                    EXPECT_THROW(riemann_hurwitz_cover(SurfaceData(g, 0, true), d, locals), InvalidArgument);
                    continue;
                }
                EXPECT_EQ(riemann_hurwitz_cover(SurfaceData(g, 0, true), d, locals).euler_characteristic(), chi);
            }
}

TEST(OrientationDoubleCover, Examples) {
    EXPECT_EQ(orientation_double_cover(Orbifold2D::projective_plane({3})), Orbifold2D::sphere({3, 3}));
    EXPECT_EQ(orientation_double_cover(Orbifold2D::mobius_band({2})), Orbifold2D::annulus({2, 2}));
    EXPECT_EQ(orientation_double_cover(Orbifold2D(false, 2, 0, {})), Orbifold2D(true, 1, 0, {}));
    EXPECT_THROW(orientation_double_cover(Orbifold2D::disk()), InvalidArgument);
}

TEST(OrientationDoubleCover, DoublesChiOrb) {
    for (std::int64_t k = 1; k <= 4; ++k)
        for (std::int64_t b = 0; b <= 2; ++b)
            for (const auto& cones : std::vector<std::vector<std::int64_t>>{{}, {2}, {3, 7}, {2, 2, 5}}) {
                const Orbifold2D o(false, k, b, cones);
                EXPECT_EQ(chi_orb(orientation_double_cover(o)), q(2) * chi_orb(o)) << o;
            }
}

TEST(HorizontalDegrees, Examples) {
    EXPECT_TRUE(horizontal_degree_solutions(kF, Orbifold2D::disk({2, 2})).empty());
    EXPECT_EQ(horizontal_degree_solutions(kF, Orbifold2D::disk({2, 3})), (std::vector<std::int64_t>{18}));
    EXPECT_TRUE(horizontal_degree_solutions(kF, Orbifold2D::disk({2, 2, 3})).empty());
    EXPECT_EQ(horizontal_degree_solutions(kF, Orbifold2D::disk({2, 5})), (std::vector<std::int64_t>{10}));
    EXPECT_THROW(horizontal_degree_solutions(kF, Orbifold2D::mobius_band()), InvalidArgument);
}

TEST(HorizontalDegrees, NonOrientableBases) {
    EXPECT_TRUE(nonorientable_base_solutions(kF, Orbifold2D::mobius_band({2})).empty());
    EXPECT_EQ(nonorientable_base_solutions(kF, Orbifold2D::mobius_band({2}), DegreeFilter::chi_only),
              (std::vector<std::int64_t>{6}));
    EXPECT_TRUE(nonorientable_base_solutions(kF, Orbifold2D::mobius_band()).empty());
    EXPECT_THROW(nonorientable_base_solutions(SurfaceData(1, 1, false), Orbifold2D::mobius_band()),
                 InvalidArgument);
}

TEST(HorizontalDegrees, ZeroEqualsZeroIsInfinite) {
    EXPECT_THROW(horizontal_degree_solutions(SurfaceData(0, 2, true), Orbifold2D::annulus()), InfiniteSolutions);
    EXPECT_THROW(degree_solutions(SurfaceData(1, 0, true), Orbifold2D::mobius_band()), InfiniteSolutions);
}

TEST(HorizontalDegrees, MatchesIntegerScan) {
    const std::vector<SurfaceData> surfaces{kF, SurfaceData(1, 1, true), SurfaceData(3, 2, true),
                                            SurfaceData(0, 3, true)};
    const std::vector<Orbifold2D> bases{
        Orbifold2D::disk({2, 3}),     Orbifold2D::disk({2, 2, 3}),    Orbifold2D::disk({3, 3}),
        Orbifold2D::disk({2, 7}),     Orbifold2D::annulus({2}),       Orbifold2D::disk({4, 4}),
        Orbifold2D::mobius_band({2}), Orbifold2D::mobius_band({3}),   Orbifold2D(false, 2, 1, {}),
        Orbifold2D::mobius_band({2, 3}), Orbifold2D(true, 1, 1, {2}), Orbifold2D::disk({2, 2, 2, 2, 2})};
    for (const auto& f : surfaces)
        for (const auto& b : bases)
            for (auto filter : {DegreeFilter::chi_only, DegreeFilter::cone_divisible})
                EXPECT_EQ(degree_solutions(f, b, filter),
                          scan_degrees(f.euler_characteristic(), b, filter == DegreeFilter::cone_divisible, 5000))
                    << f << " over " << b;
}

TEST(PrismCases, NoSolutionsForNEqualsTwo) {
    const auto a = prism_case_analysis(2);
    EXPECT_FALSE(a.admits_horizontal());
    EXPECT_EQ(a.cases[0].orbifold, Orbifold2D::mobius_band());
    EXPECT_EQ(a.cases[1].orbifold, Orbifold2D::mobius_band({2}));
    EXPECT_EQ(a.cases[2].orbifold, Orbifold2D::disk({2, 2, 7}));
    EXPECT_EQ(a.cases[3].orbifold, Orbifold2D::disk({2, 2}));
    EXPECT_EQ(a.cases[4].orbifold, Orbifold2D::disk({2, 7}));
    EXPECT_EQ(a.cases[4].chi_orb, q(-5, 14));
}

TEST(PrismCases, SmallIndexSolutions) {
    EXPECT_EQ(prism_case_analysis(1).solutions(), (std::vector<std::pair<int, std::int64_t>>{{5, 18}}));
    EXPECT_EQ(prism_case_analysis(-1).solutions(), (std::vector<std::pair<int, std::int64_t>>{{5, 10}}));
    EXPECT_THROW(prism_case_analysis(0), DegenerateParameter);
}

TEST(PrismCases, CaseTwoChiOnlyButNotConeDivisible) {
    const auto a = prism_case_analysis(3);
    EXPECT_EQ(a.cases[1].chi_only_degrees, (std::vector<std::int64_t>{6}));
    EXPECT_TRUE(a.cases[1].degrees.empty());
}

TEST(PrismCases, RangeOnlyFlagsPlusMinusOne) {
    std::vector<std::int64_t> flagged;
    for (const auto& a : prism_case_analysis_range({-50, 50}))
        if (a.admits_horizontal())
            flagged.push_back(a.n);
    EXPECT_EQ(flagged, (std::vector<std::int64_t>{-1, 1}));
}

TEST(PrismCases, RangeAgreesWithIntegerScan) {
    for (const auto& a : prism_case_analysis_range({-30, 30}, kF, 2))
        for (const auto& c : a.cases)
            EXPECT_EQ(c.degrees, scan_degrees(-3, c.orbifold, true, 5000)) << "n=" << a.n << " case " << c.number;
}

TEST(PrismCases, RangeSkipsDegenerateAndIsOrdered) {
    const auto r = prism_case_analysis_range({-2, 2});
    std::vector<std::int64_t> ns;
    for (const auto& a : r)
        ns.push_back(a.n);
    EXPECT_EQ(ns, (std::vector<std::int64_t>{-2, -1, 1, 2}));
    EXPECT_TRUE(prism_case_analysis_range({3, 2}).empty());
}

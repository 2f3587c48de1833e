#include <gtest/gtest.h>

#include <random>
#include <set>
#include <sstream>

#include "linkvol/seifert.hpp"

using namespace linkvol;

namespace {

Rational q(long long n, long long d = 1) { return Rational(BigInt(n), BigInt(d)); }

SeifertSymbol oo(std::vector<Fiber> f, std::int64_t genus = 0) { return SeifertSymbol(BaseClass::Oo, genus, std::move(f)); }

SeifertSymbol random_symbol(std::mt19937& rng, bool orientable_only = false) {
    std::uniform_int_distribution<int> count(0, 5), alpha(1, 9), beta(-20, 20), genus(0, 2), cls(0, 1);
    const bool on = !orientable_only && cls(rng);
    std::vector<Fiber> fibers;
    const int k = count(rng);
    for (int i = 0; i < k; ++i) {
        const int a = alpha(rng);
        int b = beta(rng);
        while (a >= 2 && std::gcd(b, a) != 1)
            ++b;
        fibers.push_back({b, a});
    }
    return SeifertSymbol(on ? BaseClass::On : BaseClass::Oo, on ? genus(rng) + 1 : genus(rng), std::move(fibers));
}

std::vector<long long> divisors(const AbelianGroup& g) {
    std::vector<long long> out;
    for (const auto& d : g.divisors())
        out.push_back(static_cast<long long>(d));
    return out;
}

} // namespace

TEST(Seifert, InvalidSymbols) {
    EXPECT_THROW(SeifertSymbol(BaseClass::On, 0, {}), InvalidArgument);
    EXPECT_THROW(oo({{1, 0}}), InvalidArgument);
    EXPECT_THROW(oo({{2, 4}}), InvalidArgument);
    EXPECT_THROW(oo({}, -1), InvalidArgument);
}

TEST(Seifert, NormalizeExamples) {
    EXPECT_EQ(normalize(oo({{1, 2}, {-1, 2}, {-2, 3}})), oo({{1, 2}, {1, 2}, {1, 3}, {-2, 1}}));
    EXPECT_EQ(normalize(oo({{0, 1}})), oo({{0, 1}}));
    EXPECT_EQ(normalize(oo({{5, 3}}, 1)), oo({{2, 3}, {1, 1}}, 1));
}

TEST(Seifert, NormalizeSortsByAlphaThenBeta) {
    const auto s = normalize(oo({{4, 5}, {1, 2}, {1, 5}, {7, 3}}));
    EXPECT_EQ(s, oo({{1, 2}, {1, 3}, {1, 5}, {4, 5}, {2, 1}}));
}

TEST(Seifert, EulerNumberExamples) {
    EXPECT_EQ(euler_number(oo({{1, 2}, {-1, 2}})), q(0));
    EXPECT_EQ(euler_number(oo({{1, 2}, {-1, 2}, {-2, 3}})), q(2, 3));
    EXPECT_EQ(euler_number(SeifertSymbol(BaseClass::On, 1, {{3, 2}})), q(-3, 2));
}

TEST(Seifert, NormalizeIdempotentAndPreservesInvariants) {
    std::mt19937 rng(41);
    for (int i = 0; i < 200; ++i) {
        const SeifertSymbol s = random_symbol(rng);
        const SeifertSymbol n = normalize(s);
        EXPECT_EQ(normalize(n), n);
        EXPECT_TRUE(is_normalized(n));
        EXPECT_EQ(euler_number(n), euler_number(s));
        EXPECT_EQ(base_orbifold(n), base_orbifold(s));
        for (const auto& f : n.fibers())
            if (f.exceptional()) {
                EXPECT_GE(f.beta, 0);
                EXPECT_LT(f.beta, f.alpha);
            }
        EXPECT_EQ(n.fibers().back().alpha, 1);
    }
}

TEST(Seifert, BaseOrbifoldExamples) {
    EXPECT_EQ(base_orbifold(oo({{1, 2}, {-1, 2}, {-2, 3}})), Orbifold2D::sphere({2, 2, 3}));
    EXPECT_EQ(base_orbifold(SeifertSymbol(BaseClass::On, 1, {{3, 2}})), Orbifold2D::projective_plane({2}));
    EXPECT_EQ(base_orbifold(oo({}, 2)), Orbifold2D(true, 2, 0, {}));
}

TEST(Seifert, RemoveFiberFromPrismFibrations) {
    for (std::int64_t n : {1, 2, -1, 5}) {
        const auto [o, u] = prism_fibrations(n);
        const std::int64_t m = prism_index(n);
        EXPECT_EQ(remove_fiber(u, ExceptionalFiber{0}), Orbifold2D::mobius_band());
        EXPECT_EQ(remove_fiber(u, RegularFiber{}), Orbifold2D::mobius_band({2}));
        EXPECT_EQ(remove_fiber(o, RegularFiber{}), Orbifold2D::disk({2, 2, m}));
    }
}

TEST(Seifert, RemoveFiberErrors) {
    const auto s = normalize(oo({{1, 2}, {1, 3}}));
    EXPECT_THROW(remove_fiber(s, ExceptionalFiber{7}), InvalidArgument);
    EXPECT_THROW(remove_fiber(s, ExceptionalFiber{2}), InvalidArgument); // the (b,1) term
    EXPECT_EQ(remove_fiber(s, ExceptionalFiber{1}), Orbifold2D::disk({2}));
}

TEST(Seifert, FirstHomologyExamples) {
    const auto m1 = first_homology(oo({{1, 2}, {1, 2}, {1, 3}, {-2, 1}}));
    EXPECT_EQ(divisors(m1), (std::vector<long long>{8}));
    EXPECT_EQ(*m1.order(), 8);

    const auto s2s1 = first_homology(oo({{0, 1}}));
    EXPECT_EQ(divisors(s2s1), (std::vector<long long>{0}));

    EXPECT_TRUE(first_homology(oo({{1, 2}, {1, 3}, {1, 5}, {-1, 1}})).trivial());
    EXPECT_THROW(first_homology(SeifertSymbol(BaseClass::On, 1, {{3, 2}})), Unsupported);
}

TEST(Seifert, FirstHomologyOrderMatchesClosedForm) {
    // |H1| = |alpha_1 ... alpha_r * e| whenever e != 0 and the base is a sphere
    std::mt19937 rng(43);
    int checked = 0;
    while (checked < 100) {
        SeifertSymbol s = random_symbol(rng, true);
        s = SeifertSymbol(BaseClass::Oo, 0, s.fibers());
        const Rational e = euler_number(s);
        if (e.is_zero())
            continue;
        Rational closed = e;
        for (const auto& f : s.fibers())
            closed *= Rational(f.alpha);
        const auto h = first_homology(s);
        ASSERT_TRUE(h.order().has_value()) << s;
        EXPECT_EQ(Rational(*h.order()), closed.abs()) << s;
        ++checked;
    }
}

TEST(Seifert, FirstHomologyWithGenusAddsFreeRank) {
    const auto h = first_homology(oo({{1, 2}, {-1, 2}}, 1));
    EXPECT_EQ(h.free_rank, 3u); // 2 from the torus, 1 since e = 0
}

TEST(Seifert, PrismFibrations) {
    const auto [o1, u1] = prism_fibrations(1);
    EXPECT_EQ(o1, normalize(oo({{1, 2}, {-1, 2}, {-2, 3}})));
    EXPECT_EQ(u1, normalize(SeifertSymbol(BaseClass::On, 1, {{3, 2}})));

    const auto [om, um] = prism_fibrations(-1);
    EXPECT_EQ(base_orbifold(om), Orbifold2D::sphere({2, 2, 5}));
    EXPECT_EQ(om, normalize(oo({{1, 2}, {-1, 2}, {2, 5}})));
    EXPECT_EQ(euler_number(um), q(5, 2));

    EXPECT_THROW(prism_fibrations(0), DegenerateParameter);
}

TEST(Seifert, PrismFamilyEulerNumbersAndDistinctness) {
    std::set<std::string> seen;
    for (std::int64_t n = -20; n <= 20; ++n) {
        if (n == 0)
            continue;
        const auto [o, u] = prism_fibrations(n);
        EXPECT_EQ(euler_number(o), Rational(BigInt(2), BigInt(4 * n - 1)));
        std::ostringstream os;
        os << o;
        EXPECT_TRUE(seen.insert(os.str()).second) << "duplicate normal form at n=" << n;
    }
}

#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "linkvol/braid.hpp"
#include "oracles.hpp"

using namespace linkvol;

TEST(Braid, InvalidWords) {
    EXPECT_THROW(BraidWord(1), InvalidArgument);
    EXPECT_THROW(BraidWord(3, {3}), InvalidArgument);
    EXPECT_THROW(BraidWord(3, {0}), InvalidArgument);
    EXPECT_THROW(twisted_torus_braid(5, 1, 6, 1), InvalidArgument);
    EXPECT_THROW(twisted_torus_braid(1, 1, 1, 1), InvalidArgument);
    EXPECT_THROW(BraidWord(3, {1}) * BraidWord(4, {1}), InvalidArgument);
}

TEST(Braid, TwistedTorusExamples) {
    const BraidWord t = twisted_torus_braid(5, 1, 2, 1);
    EXPECT_EQ(t.strands(), 5);
    EXPECT_EQ(t.letters(), (std::vector<int>{1, 2, 3, 4, 1, 1}));
    EXPECT_EQ(t.artin(), "s1 s2 s3 s4 s1 s1");
    EXPECT_EQ(twisted_torus_braid(5, 6, 2, 1).length(), 26u);
    EXPECT_EQ(twisted_torus_braid(4, 3, 3, 0), torus_braid(4, 3));
    EXPECT_EQ(twisted_torus_braid(3, -1, 2, 0).letters(), (std::vector<int>{-2, -1}));
    EXPECT_EQ(BraidWord(3).artin(), "e");
    EXPECT_EQ(BraidWord(3, {1, 2, -1}).artin(), "s1 s2 s1^-1");
}

TEST(Braid, ClosureComponentExamples) {
    EXPECT_EQ(closure_components(twisted_torus_braid(5, 1, 2, 1)), 1);
    EXPECT_EQ(closure_components(torus_braid(4, 2)), 2);
    for (int n = 2; n <= 6; ++n)
        EXPECT_EQ(closure_components(BraidWord(n)), n);
}

TEST(Braid, PFamilyAreKnots) {
    for (std::int64_t n = 0; n <= 100; ++n) {
        const BraidWord w = twisted_torus_braid(5, 5 * n + 1, 2, 1);
        EXPECT_EQ(closure_components(w), 1) << "n=" << n;
        EXPECT_EQ(oracle::closure_components(w.strands(), w.letters()), 1);
    }
}

TEST(Braid, TorusComponentsAreGcd) {
    for (int p = 2; p <= 8; ++p)
        for (int q = -8; q <= 8; ++q) {
            if (q == 0)
                continue;
            const BraidWord w = torus_braid(p, q);
            EXPECT_EQ(closure_components(w), std::gcd(p, std::abs(q))) << p << "," << q;
            EXPECT_EQ(closure_components(w), oracle::closure_components(p, w.letters()));
        }
}

TEST(Braid, ComponentsMatchStrandFollowingOracle) {
    std::mt19937 rng(67);
    std::uniform_int_distribution<int> strands(2, 7), len(0, 30);
    for (int i = 0; i < 300; ++i) {
        const int n = strands(rng);
        std::uniform_int_distribution<int> gen(1, n - 1), sign(0, 1);
        std::vector<int> letters;
        const int l = len(rng);
        for (int j = 0; j < l; ++j)
            letters.push_back(sign(rng) ? gen(rng) : -gen(rng));
        const BraidWord w(n, letters);
        EXPECT_EQ(closure_components(w), oracle::closure_components(n, letters));
    }
}

TEST(Braid, BennequinExamples) {
    EXPECT_EQ(bennequin_chi(twisted_torus_braid(5, 1, 2, 1)), -1);
    EXPECT_EQ(bennequin_genus(twisted_torus_braid(5, 1, 2, 1)), 1);
    EXPECT_EQ(bennequin_chi(twisted_torus_braid(5, 6, 2, 1)), -21);
    EXPECT_EQ(bennequin_genus(twisted_torus_braid(5, 6, 2, 1)), 11);
    EXPECT_EQ(bennequin_chi(torus_braid(2, 1)), 1);
    EXPECT_EQ(bennequin_genus(torus_braid(2, 1)), 0);
}

TEST(Braid, BennequinRefusals) {
    EXPECT_THROW(bennequin_chi(BraidWord(3, {1, -2})), InvalidArgument);
    EXPECT_THROW(bennequin_genus(torus_braid(4, 2)), InvalidArgument);
}

TEST(Braid, BennequinChiInvariantUnderRotation) {
    std::mt19937 rng(71);
    std::uniform_int_distribution<int> strands(2, 6), len(1, 25);
    for (int i = 0; i < 200; ++i) {
        const int n = strands(rng);
        std::uniform_int_distribution<int> gen(1, n - 1);
        std::vector<int> letters;
        const int l = len(rng);
        for (int j = 0; j < l; ++j)
            letters.push_back(gen(rng));
        auto rotated = letters;
        std::uniform_int_distribution<int> shift(0, l - 1);
        std::rotate(rotated.begin(), rotated.begin() + shift(rng), rotated.end());
        const BraidWord a(n, letters), b(n, rotated);
        EXPECT_EQ(bennequin_chi(a), bennequin_chi(b));
        EXPECT_EQ(closure_components(a), closure_components(b));
    }
}

TEST(Braid, ExponentSumClosedForm) {
    for (int p = 2; p <= 7; ++p)
        for (int r = 2; r <= p; ++r)
            for (std::int64_t q = -4; q <= 4; ++q)
                for (std::int64_t s = -3; s <= 3; ++s)
                    EXPECT_EQ(exponent_sum(twisted_torus_braid(p, q, r, s)), q * (p - 1) + s * r * (r - 1));
}

TEST(Braid, InverseAndPower) {
    const BraidWord w(4, {1, 3, -2});
    EXPECT_EQ(exponent_sum(w * w.inverse()), 0);
    EXPECT_EQ((w * w.inverse()).length(), 6u);
    EXPECT_EQ(w.power(3).length(), 9u);
    EXPECT_EQ(w.power(-2), w.inverse().power(2));
    EXPECT_EQ(w.power(0), BraidWord(4));
}

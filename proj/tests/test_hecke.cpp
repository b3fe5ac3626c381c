#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "affsat/hecke.hpp"

using namespace affsat;

namespace {

struct Ctx {
    CartanData cd;
    WeylGroup w;
    HeckeAlgebra h;
    explicit Ctx(const char* t) : cd(CartanData::fromType(t)), w(cd), h(w) {}
};

Coweight randomCw(int rank, std::mt19937_64& rng, long long lo = -2, long long hi = 2) {
    std::uniform_int_distribution<long long> d(lo, hi);
    Coweight c;
    c.c = d(rng);
    c.d = d(rng);
    c.finite.resize(static_cast<size_t>(rank));
    for (auto& x : c.finite) x = d(rng);
    return c;
}

HeckeElement randomElement(Ctx& c, std::mt19937_64& rng, int nTerms, int maxLen) {
    std::uniform_int_distribution<int> g(1, c.w.numGenerators());
    std::uniform_int_distribution<int> n(0, maxLen);
    std::uniform_int_distribution<int> vd(-2, 2);
    std::uniform_int_distribution<long long> cd(-3, 3);
    HeckeElement x;
    for (int t = 0; t < nTerms; ++t) {
        WeylElement w = c.w.identity();
        int steps = n(rng);
        for (int i = 0; i < steps; ++i) w = c.w.multiply(w, c.w.simpleReflection(g(rng)));
        x.addTerm(randomCw(c.cd.rank(), rng, -1, 1), w, VCoeff::vPower(vd(rng), BigInt(cd(rng))));
    }
    return x;
}

} // namespace

TEST_CASE("theta fusion") {
    Ctx c("A1");
    std::mt19937_64 rng(211);
    for (int t = 0; t < 20; ++t) {
        Coweight lam = randomCw(1, rng), mu = randomCw(1, rng);
        CHECK(c.h.multiply(c.h.theta(lam), c.h.theta(mu)) == c.h.theta(lam + mu));
    }
}

TEST_CASE("quadratic relation") {
    for (const char* t : {"A1", "A2"}) {
        Ctx c(t);
        for (int i = 1; i <= c.w.numGenerators(); ++i) {
            HeckeElement ta = c.h.tElement(c.w.simpleReflection(i));
            HeckeElement sq = c.h.multiply(ta, ta);
            // T_a T_a = (v^{-2} - 1) T_a + v^{-2}
            HeckeElement want = c.h.add(c.h.scale(ta, VCoeff::vPower(-2) - VCoeff::one()),
                                        c.h.scale(c.h.one(), VCoeff::vPower(-2)));
            CHECK(sq == want);
            // inverse round-trips
            CHECK(c.h.multiply(ta, c.h.tGenInverse(i)) == c.h.one());
            CHECK(c.h.multiply(c.h.tGenInverse(i), ta) == c.h.one());
        }
    }
}

TEST_CASE("bernstein three-case table") {
    Ctx c("A1");
    Coweight av = c.cd.simpleCoroot(1).asCoweight();
    // <a1, lam> = 0: commute
    Coweight lam0{3, IVec{0}, 2};
    REQUIRE(c.cd.simplePairing(1, lam0) == 0);
    CHECK(c.h.bernsteinCommute(1, lam0).isZero());
    HeckeElement t1 = c.h.tElement(c.w.simpleReflection(1));
    CHECK(c.h.multiply(t1, c.h.theta(lam0)) == c.h.multiply(c.h.theta(lam0), t1));
    // <a1, lam> = 1: single term
    Coweight lam1{0, IVec{0}, 1};
    lam1.finite[0] = 0;
    // build lam with pairing 1 is impossible in A1 (pairings are even); use A2
    Ctx c2("A2");
    Coweight mu{0, IVec{1, 0}, 1};
    REQUIRE(c2.cd.simplePairing(1, mu) == 2);
    HeckeElement b2 = c2.h.bernsteinCommute(1, mu);
    HeckeElement want2 = c2.h.scale(
        c2.h.add(c2.h.theta(mu), c2.h.theta(mu - c2.cd.simpleCoroot(1).asCoweight())),
        VCoeff::vPower(-2) - VCoeff::one());
    CHECK(b2 == want2);
    Coweight nu{0, IVec{1, 1}, 1};
    REQUIRE(c2.cd.simplePairing(1, nu) == 1);
    CHECK(c2.h.bernsteinCommute(1, nu) ==
          c2.h.scale(c2.h.theta(nu), VCoeff::vPower(-2) - VCoeff::one()));
    // the relation itself: T_a Theta_lam = Theta_{w_a lam} T_a + B(a, lam)
    std::mt19937_64 rng(223);
    for (int t = 0; t < 25; ++t) {
        Coweight x = randomCw(2, rng);
        for (int i = 1; i <= 3; ++i) {
            HeckeElement lhs = c2.h.multiply(c2.h.tElement(c2.w.simpleReflection(i)), c2.h.theta(x));
            HeckeElement rhs = c2.h.add(
                c2.h.multiply(c2.h.theta(c2.w.act(c2.w.simpleReflection(i), x)),
                              c2.h.tElement(c2.w.simpleReflection(i))),
                c2.h.bernsteinCommute(i, x));
            CHECK(lhs == rhs);
        }
    }
    // negative-pairing case mirrors with (1 - v^{-2})
    Coweight neg = c2.w.act(c2.w.simpleReflection(1), mu);
    REQUIRE(c2.cd.simplePairing(1, neg) == -2);
    HeckeElement bm = c2.h.bernsteinCommute(1, neg);
    HeckeElement wantm = c2.h.scale(
        c2.h.add(c2.h.theta(mu), c2.h.theta(mu - c2.cd.simpleCoroot(1).asCoweight())),
        VCoeff::one() - VCoeff::vPower(-2));
    CHECK(bm == wantm);
    (void)av;
    (void)lam1;
}

TEST_CASE("braid relations") {
    Ctx c("A2"); // affine A2: every pair of generators has order 3
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            if (i == j) continue;
            CHECK(c.h.tWord({i, j, i}) == c.h.tWord({j, i, j}));
        }
    // word products agree with canonical-word products of the same element
    std::mt19937_64 rng(227);
    std::uniform_int_distribution<int> g(1, 3);
    for (int t = 0; t < 30; ++t) {
        std::vector<int> word;
        for (int k = 0; k < 5; ++k) word.push_back(g(rng));
        WeylElement w = c.w.fromWord(word);
        if (c.w.length(w) != 5) continue; // only braid-equivalent words
        CHECK(c.h.tWord(word) == c.h.tElement(w));
    }
}

TEST_CASE("associativity on random triples") {
    for (const char* t : {"A1", "A2"}) {
        Ctx c(t);
        std::mt19937_64 rng(229);
        for (int k = 0; k < 60; ++k) {
            HeckeElement x = randomElement(c, rng, 2, 2);
            HeckeElement y = randomElement(c, rng, 2, 2);
            HeckeElement z = randomElement(c, rng, 2, 2);
            CHECK(c.h.multiply(c.h.multiply(x, y), z) == c.h.multiply(x, c.h.multiply(y, z)));
        }
    }
}

TEST_CASE("grading and H_plus membership") {
    Ctx c("A1");
    // T_w has degree 0 and lies in H_plus
    HeckeElement tw = c.h.tElement(c.w.simpleReflection(2));
    auto g = c.h.grade(tw);
    CHECK(g.size() == 1);
    CHECK(g.count(0) == 1);
    CHECK(c.h.isInHPlus(tw));
    // Theta_{nc} has degree 0 and lies in H_plus
    HeckeElement tc = c.h.theta(Coweight{-3, IVec{0}, 0});
    CHECK(c.h.grade(tc).count(0) == 1);
    CHECK(c.h.isInHPlus(tc));
    // level-0 non-central Theta is not in H_plus
    HeckeElement bad = c.h.theta(Coweight{0, IVec{1}, 0});
    CHECK(c.h.grade(bad).count(0) == 1);
    CHECK_FALSE(c.h.isInHPlus(bad));
    // mixed degrees split
    HeckeElement mix = c.h.add(c.h.theta(Coweight{0, IVec{1}, 2}), tw);
    auto gm = c.h.grade(mix);
    CHECK(gm.size() == 2);
    CHECK(gm.count(0) == 1);
    CHECK(gm.count(2) == 1);
}

TEST_CASE("H_plus closure under products") {
    for (const char* t : {"A1", "A2"}) {
        Ctx c(t);
        std::mt19937_64 rng(233);
        std::uniform_int_distribution<int> g(1, c.w.numGenerators());
        std::uniform_int_distribution<int> n(0, 2);
        std::uniform_int_distribution<long long> lvl(0, 2);
        auto randomHPlus = [&]() {
            HeckeElement x;
            for (int k = 0; k < 2; ++k) {
                Coweight cw = randomCw(c.cd.rank(), rng, -1, 1);
                cw.d = lvl(rng);
                if (cw.d == 0) cw.finite.assign(cw.finite.size(), 0); // central
                WeylElement w = c.w.identity();
                int steps = n(rng);
                for (int i = 0; i < steps; ++i) w = c.w.multiply(w, c.w.simpleReflection(g(rng)));
                x.addTerm(cw, w, VCoeff::vPower(0, BigInt(1 + (k == 0))));
            }
            return x;
        };
        for (int k = 0; k < 40; ++k) {
            HeckeElement x = randomHPlus(), y = randomHPlus();
            REQUIRE(c.h.isInHPlus(x));
            REQUIRE(c.h.isInHPlus(y));
            CHECK(c.h.isInHPlus(c.h.multiply(x, y)));
        }
    }
}

TEST_CASE("theta construction: base and length-1 chamber") {
    Ctx c("A1");
    // dominant: depth-0 trace
    Coweight lam{0, IVec{1}, 2};
    REQUIRE(c.cd.isDominant(lam));
    auto res = c.h.thetaConstruct(lam);
    CHECK(res.verified);
    CHECK(res.trace.size() == 1);
    CHECK(res.element == c.h.theta(lam));
    // <a, mu> = -1 case: mu = w_a lam' with the hand formula
    Ctx c2("A2");
    Coweight lp{0, IVec{1, 1}, 2};
    REQUIRE(c2.cd.isDominant(lp));
    Coweight mu = c2.w.act(c2.w.simpleReflection(1), lp);
    REQUIRE(c2.cd.simplePairing(1, mu) == -1);
    auto r2 = c2.h.thetaConstruct(mu);
    CHECK(r2.verified);
    CHECK(r2.element == c2.h.theta(mu));
    // hand-assembled: T_a Theta_{w_a mu} T_a^{-1} - (v^{-2}-1) Theta_{w_a mu} T_a^{-1}
    HeckeElement hand = c2.h.multiply(
        c2.h.sub(c2.h.multiply(c2.h.tElement(c2.w.simpleReflection(1)), c2.h.theta(lp)),
                 c2.h.scale(c2.h.theta(lp), VCoeff::vPower(-2) - VCoeff::one())),
        c2.h.tGenInverse(1));
    CHECK(hand == c2.h.theta(mu));
}

TEST_CASE("theta construction: independence of path") {
    Ctx c("A2");
    std::mt19937_64 rng(239);
    int tested = 0;
    while (tested < 12) {
        Coweight mu = randomCw(2, rng, -2, 2);
        mu.d = 1 + (mu.d & 1);
        if (!c.cd.inTitsCone(mu) || c.cd.isDominant(mu)) continue;
        int negCount = 0;
        for (int i = 1; i <= 3; ++i)
            if (c.cd.simplePairing(i, mu) < 0) ++negCount;
        auto r1 = c.h.thetaConstruct(mu, ThetaPolicy::SmallestIndex);
        auto r2 = c.h.thetaConstruct(mu, ThetaPolicy::LargestIndex);
        CHECK(r1.verified);
        CHECK(r2.verified);
        CHECK(r1.element == r2.element);
        if (negCount >= 2) CHECK(r1.trace != r2.trace); // genuinely different paths
        ++tested;
    }
    CHECK_THROWS(c.h.thetaConstruct(Coweight{0, IVec{1, 0}, 0}));
}

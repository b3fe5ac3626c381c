#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "affsat/affroots.hpp"

using namespace affsat;

namespace {

struct Ctx {
    CartanData cd;
    WeylGroup w;
    AffRoots ar;
    explicit Ctx(const char* t) : cd(CartanData::fromType(t)), w(cd), ar(w) {}
};

ExtendedElement randomExt(Ctx& c, std::mt19937_64& rng, int maxLen, long long hi = 2) {
    std::uniform_int_distribution<int> g(1, c.w.numGenerators());
    std::uniform_int_distribution<int> n(0, maxLen);
    std::uniform_int_distribution<long long> d(-hi, hi);
    WeylElement x = c.w.identity();
    int steps = n(rng);
    for (int i = 0; i < steps; ++i) x = c.w.multiply(x, c.w.simpleReflection(g(rng)));
    Coweight cw;
    cw.c = d(rng);
    cw.d = d(rng);
    cw.finite.resize(static_cast<size_t>(c.cd.rank()));
    for (auto& v : cw.finite) v = d(rng);
    return ExtendedElement{x, cw};
}

AffinizedRoot randomAffRoot(Ctx& c, std::mt19937_64& rng, long long mHi = 2, long long kHi = 3) {
    const auto& pos = c.cd.finitePositiveRoots();
    std::uniform_int_distribution<size_t> pick(0, pos.size() - 1);
    std::uniform_int_distribution<long long> md(0, mHi), kd(-kHi, kHi);
    std::uniform_int_distribution<int> sign(0, 1);
    RootAff r{pos[pick(rng)], md(rng)};
    if (sign(rng)) r = -r;
    return AffinizedRoot{r, kd(rng)};
}

} // namespace

TEST_CASE("quadrant classification") {
    Ctx c("A1");
    RootAff alpha{IVec{1}, 0};
    CHECK(c.ar.classify(AffinizedRoot{alpha, 0}) == Quadrant::UpPosLowPos);
    CHECK(c.ar.classify(AffinizedRoot{-alpha, 0}) == Quadrant::UpNegLowNeg);
    CHECK(c.ar.classify(AffinizedRoot{alpha, -1}) == Quadrant::UpPosLowNeg);
    CHECK(c.ar.classify(AffinizedRoot{-alpha, 1}) == Quadrant::UpNegLowPos);
    // totality on randoms
    std::mt19937_64 rng(401);
    for (int t = 0; t < 100; ++t) {
        AffinizedRoot a = randomAffRoot(c, rng);
        Quadrant q = c.ar.classify(a);
        bool km = c.ar.kmPositive(a), fp = c.ar.fieldPositive(a);
        CHECK(((q == Quadrant::UpPosLowPos) == (km && fp)));
        CHECK(((q == Quadrant::UpNegLowNeg) == (!km && !fp)));
    }
}

TEST_CASE("left action formula and axiom") {
    Ctx c("A1");
    // A1: w1 pi^{alpha^vee} . (alpha + 0 pi) = -alpha + 2 pi
    // in the pi^lam w presentation: w1 pi^{av} = pi^{-av} w1
    ExtendedElement x{c.w.simpleReflection(1), -c.cd.simpleCoroot(1).asCoweight()};
    AffinizedRoot a{RootAff{IVec{1}, 0}, 0};
    AffinizedRoot img = c.ar.actLeft(x, a);
    CHECK(img.root == RootAff{IVec{-1}, 0});
    CHECK(img.piLevel == 2);
    // identity fixes everything
    std::mt19937_64 rng(409);
    for (int t = 0; t < 50; ++t) {
        AffinizedRoot r = randomAffRoot(c, rng);
        CHECK(c.ar.actLeft(c.w.extIdentity(), r) == r);
    }
    // (xy) . a = x . (y . a)
    for (const char* ty : {"A1", "A2"}) {
        Ctx cc(ty);
        std::mt19937_64 rng2(419);
        for (int t = 0; t < 100; ++t) {
            ExtendedElement u = randomExt(cc, rng2, 3), v = randomExt(cc, rng2, 3);
            AffinizedRoot r = randomAffRoot(cc, rng2);
            CHECK(cc.ar.actLeft(cc.w.extMultiply(u, v), r) == cc.ar.actLeft(u, cc.ar.actLeft(v, r)));
        }
    }
}

TEST_CASE("right action formula and axiom") {
    Ctx c("A1");
    // (alpha + 0 pi) . pi^{alpha^vee} = alpha - 2 pi
    ExtendedElement x{c.w.identity(), c.cd.simpleCoroot(1).asCoweight()};
    AffinizedRoot a{RootAff{IVec{1}, 0}, 0};
    AffinizedRoot img = c.ar.actRight(a, x);
    CHECK(img.root == RootAff{IVec{1}, 0});
    CHECK(img.piLevel == -2);
    // (a . x) . y = a . (xy)
    for (const char* ty : {"A1", "A2"}) {
        Ctx cc(ty);
        std::mt19937_64 rng(421);
        for (int t = 0; t < 100; ++t) {
            ExtendedElement u = randomExt(cc, rng, 3), v = randomExt(cc, rng, 3);
            AffinizedRoot r = randomAffRoot(cc, rng);
            CHECK(cc.ar.actRight(cc.ar.actRight(r, u), v) == cc.ar.actRight(r, cc.w.extMultiply(u, v)));
        }
    }
}

TEST_CASE("reflection elements") {
    Ctx c("A2");
    std::mt19937_64 rng(431);
    for (int t = 0; t < 40; ++t) {
        AffinizedRoot alpha = randomAffRoot(c, rng);
        ExtendedElement wa = c.ar.reflectionElement(alpha);
        // involution in the extended group
        CHECK(c.w.extMultiply(wa, wa) == c.w.extIdentity());
        // n = 0 is the plain reflection
        if (alpha.piLevel == 0) {
            CHECK(wa.weyl == c.w.reflection(alpha.root));
            CHECK(wa.coweight.isZero());
        }
        // the multiplication rule w_a(n) pi^{lam} w = pi^{w_a lam - n a^vee} w_a w
        ExtendedElement x = randomExt(c, rng, 3);
        ExtendedElement lhs = c.w.extMultiply(wa, x);
        WeylElement wref = c.w.reflection(alpha.root);
        Coweight av = c.cd.corootOf(alpha.root).asCoweight();
        ExtendedElement rhs{c.w.multiply(wref, x.weyl),
                            c.w.act(wref, x.coweight) - av.scaled(alpha.piLevel)};
        CHECK(lhs == rhs);
        // the negative-level mirror determines the same reflection
        AffinizedRoot mirror{-alpha.root, -alpha.piLevel};
        CHECK(c.ar.reflectionElement(mirror) == wa);
        // left action of w_alpha on alpha per the displayed formulas
        AffinizedRoot img = c.ar.actLeft(wa, alpha);
        CHECK(img.root == -alpha.root);
        CHECK(img.piLevel == 3 * alpha.piLevel);
    }
}

TEST_CASE("inversion sets") {
    Ctx c("A1");
    // identity: both empty
    auto e = c.ar.inversionSets(c.w.extIdentity());
    CHECK(e.posToNeg.empty());
    CHECK(e.negToPos.empty());
    // pure finite reflection: one inversion at pi-level 0
    ExtendedElement w1{c.w.simpleReflection(1), c.cd.zeroCoweight()};
    auto s1 = c.ar.inversionSets(w1);
    REQUIRE(s1.posToNeg.size() == 1);
    CHECK(s1.posToNeg[0] == AffinizedRoot{RootAff{IVec{1}, 0}, 0});
    CHECK(s1.negToPos.size() == 1);
    // positive-level element: finite sets matching the brute-force scan
    std::mt19937_64 rng(433);
    for (const char* ty : {"A1", "A2"}) {
        Ctx cc(ty);
        std::mt19937_64 rng2(439);
        int done = 0;
        while (done < 6) {
            ExtendedElement x = randomExt(cc, rng2, 3, 1);
            x.coweight.d = 1 + (x.coweight.d & 1);
            if (!cc.w.extInTitsCone(x)) continue;
            auto sets = cc.ar.inversionSets(x);
            long long mB = 2 * sets.levelCutoff + 2;
            long long kB = 0;
            for (const auto& r : sets.posToNeg) kB = std::max(kB, std::abs(r.piLevel));
            for (const auto& r : sets.negToPos) kB = std::max(kB, std::abs(r.piLevel));
            auto scan = cc.ar.inversionSetsByScan(x, mB, 2 * kB + 4);
            CHECK(sets.posToNeg == scan.posToNeg);
            CHECK(sets.negToPos == scan.negToPos);
            // the two sets mirror each other under negation
            std::vector<AffinizedRoot> neg;
            for (const auto& r : sets.posToNeg) neg.push_back(AffinizedRoot{-r.root, -r.piLevel});
            std::sort(neg.begin(), neg.end());
            CHECK(neg == sets.negToPos);
            ++done;
        }
    }
    (void)rng;
    // non-Tits-cone input rejected
    CHECK_THROWS(c.ar.inversionSets(ExtendedElement{c.w.identity(), Coweight{0, IVec{1}, 0}}));
}

TEST_CASE("leb search") {
    Ctx c("A1");
    ExtendedElement x{c.w.simpleReflection(1), Coweight{0, IVec{1}, 1}};
    REQUIRE(c.w.extInTitsCone(x));
    // chain length 0: just x
    auto r0 = c.ar.lebSearch(x, 0, 1);
    REQUIRE(r0.size() == 1);
    CHECK(r0[0].element == x);
    // discovered elements validate by replay, and search is monotone
    auto r1 = c.ar.lebSearch(x, 1, 1);
    auto r2 = c.ar.lebSearch(x, 2, 1);
    CHECK(r1.size() >= r0.size());
    CHECK(r2.size() >= r1.size());
    std::set<ExtendedElement> found1;
    for (const auto& e : r1) found1.insert(e.element);
    for (const auto& e : r0) CHECK(found1.count(e.element));
    for (const auto& e : r2) CHECK(c.ar.validateChain(x, e));
}

TEST_CASE("leb search consistency probe against the dominance pre-order") {
    // Recorded as data, not asserted: how the chain-search down-set sits
    // against the dominance/Bruhat pre-order on sampled pairs.
    Ctx c("A1");
    std::mt19937_64 rng(443);
    int comparable = 0, incomparable = 0, total = 0;
    for (int t = 0; t < 4; ++t) {
        ExtendedElement x = randomExt(c, rng, 2, 1);
        x.coweight.d = 1;
        if (!c.w.extInTitsCone(x)) continue;
        for (const auto& entry : c.ar.lebSearch(x, 2, 1)) {
            REQUIRE(c.ar.validateChain(x, entry));
            ++total;
            if (c.w.preceq(entry.element, x) || c.w.preceq(x, entry.element))
                ++comparable;
            else
                ++incomparable;
        }
    }
    CHECK(total > 0);
    MESSAGE("leb-search pairs: ", total, ", preceq-comparable: ", comparable,
            ", incomparable: ", incomparable);
}

#include "affsat/affroots.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace affsat {

bool AffRoots::kmPositive(const AffinizedRoot& a) const {
    if (!cartan_.isRealRoot(a.root)) throw std::invalid_argument("affinized root part must be real");
    return cartan_.isPositiveRoot(a.root);
}

bool AffRoots::fieldPositive(const AffinizedRoot& a) const {
    return kmPositive(a) ? a.piLevel >= 0 : a.piLevel > 0;
}

Quadrant AffRoots::classify(const AffinizedRoot& a) const {
    if (kmPositive(a)) return a.piLevel >= 0 ? Quadrant::UpPosLowPos : Quadrant::UpPosLowNeg;
    return a.piLevel > 0 ? Quadrant::UpNegLowPos : Quadrant::UpNegLowNeg;
}

AffinizedRoot AffRoots::actLeft(const ExtendedElement& x, const AffinizedRoot& a) const {
    // x = pi^{lam} w = w pi^{w^{-1} lam};  w pi^{nu} . (a + k pi) = w a + (<nu, a> + k) pi
    RootAff img = weyl_.actOnRoot(x.weyl, a.root);
    long long k = a.piLevel + cartan_.pairing(img, x.coweight);
    return AffinizedRoot{img, k};
}

AffinizedRoot AffRoots::actRight(const AffinizedRoot& a, const ExtendedElement& x) const {
    // (a + n pi) . pi^{lam} w = w^{-1}(a) + (n - <lam, a>) pi
    RootAff img = weyl_.actOnRoot(weyl_.inverse(x.weyl), a.root);
    long long k = a.piLevel - cartan_.pairing(a.root, x.coweight);
    return AffinizedRoot{img, k};
}

ExtendedElement AffRoots::reflectionElement(const AffinizedRoot& a) const {
    // w_alpha = w_a pi^{n a^vee} = pi^{-n a^vee} w_a
    WeylElement wa = weyl_.reflection(a.root);
    Coweight av = cartan_.corootOf(a.root).asCoweight();
    return ExtendedElement{wa, av.scaled(-a.piLevel)};
}

AffRoots::InversionSets AffRoots::inversionSets(const ExtendedElement& x, long long extraScan) const {
    if (!weyl_.extInTitsCone(x)) throw std::invalid_argument("inversionSets: x outside the Tits-cone part");
    InversionSets out;
    long long r = cartan_.level(x.coweight);
    // the image field level of a + k pi under x is k + <w a, lam>; the sign
    // conditions force <w a, lam> <= 0 (first set) or >= 0 (mirror), which
    // bounds the delta-level of a once the level r is positive
    long long cutoff = 0;
    if (r > 0) {
        Coweight nu = weyl_.act(weyl_.inverse(x.weyl), x.coweight);
        for (const auto& beta : cartan_.finitePositiveRoots()) {
            long long p = cartan_.finitePairing(beta, nu.finite);
            long long bound = (p < 0 ? -p : p) / r + 1;
            cutoff = std::max(cutoff, bound);
        }
    }
    // at level zero the translation part is central and only the Weyl part
    // inverts anything; its inversion levels bound the enumeration
    for (const auto& inv : weyl_.inversionSet(x.weyl)) cutoff = std::max(cutoff, inv.delta);
    out.levelCutoff = cutoff;
    auto collect = [&](long long mMax) {
        InversionSets sets;
        sets.levelCutoff = cutoff;
        for (const auto& a : cartan_.enumeratePositiveReal(mMax)) {
            RootAff img = weyl_.actOnRoot(x.weyl, a);
            long long p = cartan_.pairing(img, x.coweight);
            bool imgPos = cartan_.isPositiveRoot(img);
            // first set: a + k pi with k >= 0 mapping field-negative
            {
                long long kMax = imgPos ? -p - 1 : -p;
                for (long long k = 0; k <= kMax; ++k) sets.posToNeg.push_back(AffinizedRoot{a, k});
            }
            // mirror: -a + k pi with k <= 0 mapping field-positive
            {
                RootAff na = -a;
                RootAff nimg = weyl_.actOnRoot(x.weyl, na);
                long long np = cartan_.pairing(nimg, x.coweight);
                bool nimgPos = cartan_.isPositiveRoot(nimg);
                long long kMin = nimgPos ? -np : -np + 1;
                for (long long k = kMin; k <= 0; ++k) sets.negToPos.push_back(AffinizedRoot{na, k});
            }
        }
        std::sort(sets.posToNeg.begin(), sets.posToNeg.end());
        std::sort(sets.negToPos.begin(), sets.negToPos.end());
        return sets;
    };
    out = collect(cutoff);
    out.levelCutoff = cutoff;
    // completeness: scanning past the cutoff finds nothing new
    if (extraScan > 0) {
        InversionSets wider = collect(cutoff + extraScan);
        if (wider.posToNeg != out.posToNeg || wider.negToPos != out.negToPos)
            throw std::logic_error("inversionSets: cutoff saturation failed");
    }
    return out;
}

AffRoots::InversionSets AffRoots::inversionSetsByScan(const ExtendedElement& x, long long mBound,
                                                      long long kBound) const {
    InversionSets out;
    for (const auto& a : candidateRoots(mBound, kBound)) {
        AffinizedRoot img = actLeft(x, a);
        if (kmPositive(a) && fieldPositive(a) && !fieldPositive(img)) out.posToNeg.push_back(a);
        if (!kmPositive(a) && !fieldPositive(a) && fieldPositive(img)) out.negToPos.push_back(a);
    }
    std::sort(out.posToNeg.begin(), out.posToNeg.end());
    std::sort(out.negToPos.begin(), out.negToPos.end());
    return out;
}

std::vector<AffinizedRoot> AffRoots::candidateRoots(long long mBound, long long kBound) const {
    std::vector<AffinizedRoot> out;
    for (const auto& a : cartan_.enumeratePositiveReal(mBound)) {
        for (long long k = -kBound; k <= kBound; ++k) {
            out.push_back(AffinizedRoot{a, k});
            out.push_back(AffinizedRoot{-a, k});
        }
    }
    return out;
}

std::vector<LebEntry> AffRoots::lebSearch(const ExtendedElement& x, long long maxChain,
                                          long long bound) const {
    std::map<ExtendedElement, std::vector<AffinizedRoot>> found;
    found.emplace(x, std::vector<AffinizedRoot>{});
    std::vector<ExtendedElement> frontier{x};
    std::vector<AffinizedRoot> candidates = candidateRoots(bound, bound);
    for (long long step = 0; step < maxChain; ++step) {
        std::vector<ExtendedElement> next;
        for (const auto& cur : frontier) {
            for (const auto& alpha : candidates) {
                if (isXPositive(alpha, cur)) continue; // need current-negative
                ExtendedElement y = weyl_.extMultiply(reflectionElement(alpha), cur);
                if (found.count(y)) continue;
                std::vector<AffinizedRoot> chain = found.at(cur);
                chain.push_back(alpha);
                found.emplace(y, std::move(chain));
                next.push_back(y);
            }
        }
        frontier = std::move(next);
    }
    std::vector<LebEntry> out;
    for (auto& [y, chain] : found) out.push_back(LebEntry{y, chain});
    return out;
}

bool AffRoots::validateChain(const ExtendedElement& x, const LebEntry& entry) const {
    ExtendedElement cur = x;
    for (const auto& alpha : entry.chain) {
        if (isXPositive(alpha, cur)) return false;
        cur = weyl_.extMultiply(reflectionElement(alpha), cur);
    }
    return cur == entry.element;
}

} // namespace affsat

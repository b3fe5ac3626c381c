#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "affsat/cartan.hpp"
#include "affsat/vpoly.hpp"

namespace affsat {

// Element of W = W_o x| Q_o^vee in canonical form t_H o fin, i.e. the finite
// part acts first and the translation after.  Equality is equality of the
// (matrix, translation) pair; reduced words are cached externally.
struct WeylElement {
    std::vector<IVec> fin; // action matrix on simple-coroot coordinates
    IVec trans;            // H in Q_o^vee

    bool operator==(const WeylElement& o) const { return fin == o.fin && trans == o.trans; }
    bool operator!=(const WeylElement& o) const { return !(*this == o); }
    bool operator<(const WeylElement& o) const {
        if (trans != o.trans) return trans < o.trans;
        return fin < o.fin;
    }
};

// Element x = pi^{coweight} * weyl of the extended group W x| Lambda^vee.
struct ExtendedElement {
    WeylElement weyl;
    Coweight coweight;

    bool operator==(const ExtendedElement& o) const { return weyl == o.weyl && coweight == o.coweight; }
    bool operator<(const ExtendedElement& o) const {
        if (!(coweight == o.coweight)) return coweight < o.coweight;
        return weyl < o.weyl;
    }
};

struct StabilizerData {
    std::vector<int> generators; // 1-based indices of fixing simple reflections
    bool finite = false;
    VPoly poincare; // W_lambda(v^2) when finite
};

class WeylGroup {
public:
    explicit WeylGroup(const CartanData& cartan);

    const CartanData& cartan() const { return cartan_; }
    int numGenerators() const { return cartan_.rank() + 1; }

    WeylElement identity() const;
    WeylElement simpleReflection(int i) const; // i in 1..rank+1
    WeylElement reflection(const RootAff& a) const; // reflection in a real root
    WeylElement multiply(const WeylElement& a, const WeylElement& b) const;
    WeylElement inverse(const WeylElement& a) const;
    WeylElement fromWord(const std::vector<int>& word) const;

    Coweight act(const WeylElement& w, const Coweight& cw) const;
    RootAff actOnRoot(const WeylElement& w, const RootAff& r) const;
    CorootAff actOnCoroot(const WeylElement& w, const CorootAff& c) const;

    // inversion count over positive real roots sent negative
    long long length(const WeylElement& w) const;
    // ground-truth Cayley-graph distance, for cross-checking
    long long lengthByBfs(const WeylElement& w, long long cap) const;
    std::vector<RootAff> inversionSet(const WeylElement& w) const;

    std::vector<int> reducedWord(const WeylElement& w) const;
    bool bruhatLeq(const WeylElement& u, const WeylElement& w) const;

    // all elements with length <= L, grouped in length shells, each shell
    // sorted canonically
    std::vector<std::vector<WeylElement>> bfsEnumerate(long long L) const;
    // expand shells one at a time up to maxL; fn returns false to stop early
    void forEachShell(long long maxL,
                      const std::function<bool(long long, const std::vector<WeylElement>&)>& fn) const;

    std::pair<Coweight, WeylElement> dominantRepresentative(const Coweight& cw) const;

    StabilizerData stabilizerData(const Coweight& lam, long long enumCap = 2000000) const;
    std::vector<WeylElement> minimalCosetReps(const Coweight& lam, long long L) const;

    // --- extended group ---
    ExtendedElement extIdentity() const;
    ExtendedElement extFromParts(const WeylElement& w, const Coweight& cw) const; // pi^{cw} w
    ExtendedElement extMultiply(const ExtendedElement& a, const ExtendedElement& b) const;
    ExtendedElement extInverse(const ExtendedElement& a) const;
    bool extInTitsCone(const ExtendedElement& x) const { return cartan_.inTitsCone(x.coweight); }
    bool preceq(const ExtendedElement& x, const ExtendedElement& y) const;

private:
    const CartanData& cartan_;
    std::vector<WeylElement> gens_;
    WeylElement id_;
    mutable std::mutex wordMutex_;
    mutable std::map<WeylElement, std::vector<int>> wordCache_;

    IVec applyFin(const std::vector<IVec>& m, const IVec& x) const;
    std::vector<IVec> matMul(const std::vector<IVec>& a, const std::vector<IVec>& b) const;
    std::vector<IVec> matInv(const std::vector<IVec>& a) const;
};

} // namespace affsat

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "affsat/bigint.hpp"

namespace affsat {

// Coordinates are exact integers throughout: finite roots in the simple-root
// basis, finite coweights/coroots in the simple-coroot basis.
using IVec = std::vector<long long>;

enum class Family { A, D, E };

// Element of the affine coweight lattice Z c + Q_o^vee + Z d.
struct Coweight {
    long long c = 0;
    IVec finite;
    long long d = 0;

    bool operator==(const Coweight& o) const { return c == o.c && finite == o.finite && d == o.d; }
    bool operator!=(const Coweight& o) const { return !(*this == o); }
    bool operator<(const Coweight& o) const {
        if (c != o.c) return c < o.c;
        if (finite != o.finite) return finite < o.finite;
        return d < o.d;
    }
    Coweight operator+(const Coweight& o) const;
    Coweight operator-(const Coweight& o) const;
    Coweight operator-() const;
    Coweight scaled(long long n) const;
    bool isZero() const;
    std::string str() const;
};

// Affine root alpha + m*delta, alpha in R_o or 0.
struct RootAff {
    IVec finite;
    long long delta = 0;

    bool operator==(const RootAff& o) const { return finite == o.finite && delta == o.delta; }
    bool operator!=(const RootAff& o) const { return !(*this == o); }
    bool operator<(const RootAff& o) const {
        if (delta != o.delta) return delta < o.delta;
        return finite < o.finite;
    }
    RootAff operator-() const;
    std::string str() const;
};

// Affine coroot alpha^vee + m*c.
struct CorootAff {
    IVec finite;
    long long cMult = 0;

    bool operator==(const CorootAff& o) const { return finite == o.finite && cMult == o.cMult; }
    bool operator<(const CorootAff& o) const {
        if (cMult != o.cMult) return cMult < o.cMult;
        return finite < o.finite;
    }
    CorootAff operator-() const;
    // embeds as a coweight of level 0
    Coweight asCoweight() const;
    std::string str() const;
};

// Exact affine Cartan data for the untwisted simply-laced families.
class CartanData {
public:
    // typeName: "A1", "A2", ..., "D4", ..., "E6", "E7", "E8"
    static CartanData fromType(const std::string& typeName);

    Family family() const { return family_; }
    int rank() const { return rank_; }
    const std::string& typeName() const { return typeName_; }
    // finite Cartan matrix, also the symmetric form with (theta,theta)=2
    const std::vector<IVec>& cartanMatrix() const { return cartan_; }
    const IVec& thetaCoords() const { return theta_; }       // highest root, root coords
    const IVec& thetaCorootCoords() const { return theta_; } // simply laced
    long long coxeterNumber() const { return coxeter_; }     // = <rho, c>

    // finite positive roots in root coordinates, sorted by (height, lex)
    const std::vector<IVec>& finitePositiveRoots() const { return posRoots_; }
    bool isFiniteRoot(const IVec& r) const;
    static bool allNonNegative(const IVec& r);
    static bool allNonPositive(const IVec& r);

    long long finitePairing(const IVec& rootCoords, const IVec& corootCoords) const;
    long long symmetricForm(const IVec& a, const IVec& b) const; // on the coroot lattice
    static long long heightVec(const IVec& r);

    // --- affine operations ---
    long long pairing(const RootAff& root, const Coweight& cw) const;
    // pairing of the i-th affine simple root, i in 1..rank+1
    long long simplePairing(int i, const Coweight& cw) const;
    RootAff simpleRoot(int i) const;
    CorootAff simpleCoroot(int i) const;
    Coweight minimalImaginaryCoroot() const; // c
    Coweight derivationCoweight() const;     // d
    Coweight zeroCoweight() const;

    bool isRealRoot(const RootAff& r) const;
    bool isPositiveRoot(const RootAff& r) const;
    CorootAff corootOf(const RootAff& r) const;
    RootAff rootOf(const CorootAff& c) const;

    // positive real roots with delta-level <= mMax and, when heightBound >= 0,
    // finite height |ht(alpha)| <= heightBound; deterministic order
    std::vector<RootAff> enumeratePositiveReal(long long mMax, long long heightBound = -1) const;

    long long multiplicity(const CorootAff& c) const;

    long long rhoPairing(const Coweight& cw) const;
    bool isDominant(const Coweight& cw) const;
    bool inTitsCone(const Coweight& cw) const;
    long long level(const Coweight& cw) const { return cw.d; }

    // mu <= lam in dominance; witness = coefficients on simple affine coroots
    std::optional<IVec> dominanceWitness(const Coweight& mu, const Coweight& lam) const;
    bool dominanceLeq(const Coweight& mu, const Coweight& lam) const {
        return dominanceWitness(mu, lam).has_value();
    }

    // sum of simple-coroot coefficients of q in Q_+^vee; throws if q is not there
    long long height(const Coweight& q) const;
    // height when q in Q_+^vee, nullopt otherwise
    std::optional<long long> heightOpt(const Coweight& q) const;

    long long heightOfCoroot(const CorootAff& c) const;

private:
    Family family_;
    int rank_;
    std::string typeName_;
    std::vector<IVec> cartan_;
    IVec theta_;
    long long coxeter_;
    std::vector<IVec> posRoots_;

    void buildRoots();
    void validate() const;
};

} // namespace affsat

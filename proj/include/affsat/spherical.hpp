#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "affsat/polyrep.hpp"
#include "affsat/series.hpp"

namespace affsat {

// exact finitely-supported element of the coweight group algebra
using LaurentMap = std::map<Coweight, VCoeff>;

enum class JRoute { Recursion, DLOperator };
enum class HZeroRoute { Symmetrizer, Product };

struct SatakeOptions {
    long long depth = 6;
    std::optional<std::pair<int, int>> vWindow;
    long long shellBudget = 40;
};

struct SatakeResult {
    Coweight lambda;
    std::optional<BigRat> q; // nullopt: symbolic in v^2
    Series series;           // coefficients in C[v^2] scaled by q^{<rho,lam>}
    std::map<Coweight, BigRat> specialized;
    std::string route;
    long long certifiedDepth = 0;
    long long shellsUsed = 0;
    bool stabilized = false;
};

struct StabilizationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct VFinitenessError : std::runtime_error {
    Coweight offender;
    VFinitenessError(const std::string& m, Coweight mu) : std::runtime_error(m), offender(std::move(mu)) {}
};

class Spherical {
public:
    Spherical(const SeriesOps& ops, const PolyRep& rep)
        : ops_(ops), rep_(rep), weyl_(ops.weyl()), cartan_(ops.cartan()) {}

    // normalized q^{-<rho,lam>} J_w(lam): exact, coefficients in C[v^2]
    LaurentMap jTilde(const WeylElement& w, const Coweight& lam, JRoute route,
                      long long dlDepthHint = 16) const;

    // J_w(lam) as a window Series with the q^{<rho,lam>} prefactor (symbolic)
    Series jFunction(const WeylElement& w, const Coweight& lam, const SatakeOptions& opts,
                     JRoute route) const;
    // the alternative normalization J_flat = q^{l(w)} J_w
    Series jFlat(const WeylElement& w, const Coweight& lam, const SatakeOptions& opts,
                 JRoute route) const;

    SatakeResult satakeByDisassembly(const Coweight& lam, const SatakeOptions& opts,
                                     std::optional<BigRat> q) const;
    SatakeResult satakeByMacdonald(const Coweight& lam, const SatakeOptions& opts,
                                   std::optional<BigRat> q) const;

    Series hZero(const SatakeOptions& opts, HZeroRoute route) const;

    // Phi_mu(v^2), polynomial coefficients of the normalized disassembly
    std::map<Coweight, VPoly> phiTable(const Coweight& lam, const SatakeOptions& opts) const;

private:
    const SeriesOps& ops_;
    const PolyRep& rep_;
    const WeylGroup& weyl_;
    const CartanData& cartan_;
    mutable std::mutex jMutex_;
    mutable std::map<std::pair<Coweight, WeylElement>, LaurentMap> jCache_;

    LaurentMap jStep(int i, const LaurentMap& g) const;
    LaurentMap jTildeRecursive(const WeylElement& w, const Coweight& lam) const;

    void assertLeadingAndPositivity(SatakeResult& res) const;
};

} // namespace affsat

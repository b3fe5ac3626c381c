#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "affsat/series.hpp"

namespace affsat {

struct ShellAudit {
    long long shell = 0;
    bool empty = true;           // no terms at all
    long long minDepth = -1;     // min height-depth over contributed terms
    int minVOrder = -1;          // min v-order over contributed terms
    long long minCombined = -1;  // min (depth + v-order)
    bool inGauge = false;        // some term with depth <= D and vOrder <= Vmax
};

// Cherednik symmetrizer partial sums in operator-coefficient form.
struct ShellExpansion {
    long long shellMax = 0;
    TruncationContext ctx;
    std::map<WeylElement, Series> coefficients; // tau -> C_tau partial sum
    std::vector<ShellAudit> audits;
    // set when two consecutive shells contributed nothing inside the gauge
    std::optional<std::pair<long long, std::pair<int, int>>> stabilized;
};

struct ProportionalityReport {
    bool ok = false;
    std::vector<std::pair<WeylElement, Coweight>> mismatches;
    Series mFactor;     // Gamma * Delta^{-1}
    bool mInvariant = false;
    long long certifiedDepth = 0;
    int certifiedVOrder = 0;
};

struct PoincareData {
    VPoly finitePoly;                 // W_o(v^2)
    std::vector<long long> exponents; // m_1 <= ... <= m_l
    VPoly affineNum;                  // W(v^2) = affineNum / affineDen
    VPoly affineDen;
    std::vector<BigInt> affineSeries(long long L) const; // coefficients of t^0..t^L, t = v^2
};

class PolyRep {
public:
    explicit PolyRep(const SeriesOps& ops)
        : ops_(ops), weyl_(ops.weyl()), cartan_(ops.cartan()) {}

    // T~_a f = c(a) f^{w_a} + b(a) f.  Exactness: when f is entire and the
    // string endpoints stay inside the window the result is entire again.
    Series dlApply(int i, const Series& f) const;
    struct WordResult {
        Series series;
        bool exact = false; // entire-ness held at every step
    };
    WordResult dlWord(const WeylElement& w, const Series& f) const;
    WordResult dlAlongWord(const std::vector<int>& word, const Series& f) const;

    // T~_w in operator-coefficient form sum_sigma A_sigma(w) [sigma],
    // every A_sigma expanded in the anchor-0 window
    std::map<WeylElement, Series> dlOperatorCoefficients(const WeylElement& w,
                                                         const TruncationContext& ctx) const;

    ShellExpansion symmetrize(long long L, const TruncationContext& ctx) const;

    // residual of the one-sided eigen identities on the shell-truncated sum:
    // (T~_a . P^L - v P^L) on the left, (P^L . T~_a - v P^L) on the right.
    // Both are supported entirely on boundary shells by the Hecke relations.
    std::map<WeylElement, Series> leftEigenResidual(int i, long long L,
                                                    const TruncationContext& ctx) const;
    std::map<WeylElement, Series> rightEigenResidual(int i, long long L,
                                                     const TruncationContext& ctx) const;

    ProportionalityReport checkProportionality(const ShellExpansion& shells, long long tauLenCap) const;

    PoincareData poincareData(long long enumCap = 2000000) const;

private:
    const SeriesOps& ops_;
    const WeylGroup& weyl_;
    const CartanData& cartan_;
    mutable std::mutex opMutex_;
    mutable std::map<std::pair<WeylElement, long long>, std::map<WeylElement, Series>> opCache_;

    std::map<WeylElement, Series> extendOperator(const std::map<WeylElement, Series>& op, int i,
                                                 const TruncationContext& ctx) const;
};

} // namespace affsat

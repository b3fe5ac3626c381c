#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <utility>

#include "affsat/cartan.hpp"
#include "affsat/vpoly.hpp"
#include "affsat/weyl.hpp"

namespace affsat {

// Finite gauge for the Looijenga ring: support lives under the dominant
// anchor, cut off at height(anchor - mu) <= depth.  The optional v-window
// bounds the v-degrees a consumer may treat as certified.
struct TruncationContext {
    Coweight anchor;
    long long depth = 0;
    std::optional<std::pair<int, int>> vWindow;

    static TruncationContext composeMul(const TruncationContext& a, const TruncationContext& b);
};

class Series {
public:
    TruncationContext ctx;
    std::map<Coweight, VCoeff> terms;
    // true when the stored terms are the whole object, not a truncation
    bool entire = false;

    bool isZero() const { return terms.empty(); }
    VCoeff coeff(const Coweight& mu) const {
        auto it = terms.find(mu);
        return it == terms.end() ? VCoeff::zero() : it->second;
    }
};

// Ring operations over a fixed Cartan/Weyl context.  Series values are
// immutable; all members are const apart from expansion caches.
class SeriesOps {
public:
    explicit SeriesOps(const WeylGroup& weyl) : weyl_(weyl), cartan_(weyl.cartan()) {}

    const CartanData& cartan() const { return cartan_; }
    const WeylGroup& weyl() const { return weyl_; }

    long long depthOf(const TruncationContext& ctx, const Coweight& mu) const;
    bool inWindow(const TruncationContext& ctx, const Coweight& mu) const;

    Series zero(const TruncationContext& ctx) const;
    Series unit(const TruncationContext& ctx) const;                       // e^0
    Series monomial(const TruncationContext& ctx, const Coweight& mu, VCoeff c) const;
    Series fromTerms(const TruncationContext& ctx, std::map<Coweight, VCoeff> terms, bool entire) const;

    Series add(const Series& f, const Series& g) const;
    Series sub(const Series& f, const Series& g) const;
    Series mul(const Series& f, const Series& g) const;
    Series scale(const Series& f, const VCoeff& c) const;
    Series truncate(const Series& f, long long depth) const;

    // exponents mapped through w; terms leaving the window are dropped
    Series wAct(const Series& f, const WeylElement& w) const;

    // Satake normalization (1 - v^2 e^{-g})/(1 - e^{-g}); g any nonzero coroot
    // (real of either sign, or positive imaginary n*c), expanded toward -Q_+^vee
    Series expandSatakeC(const TruncationContext& ctx, const CorootAff& g) const;
    // Demazure-Lusztig normalization c(X) = (vX - v^{-1})/(X - 1) at X = e^{g}
    Series expandDLC(const TruncationContext& ctx, const CorootAff& g) const;
    // b(X) = (v - v^{-1})/(1 - X) at X = e^{g}
    Series expandDLB(const TruncationContext& ctx, const CorootAff& g) const;

    // prod over positive roots of c(w a^vee)^{mult}; inert factors skipped
    Series deltaW(const TruncationContext& ctx, const WeylElement& w) const;

    Series invertUnit(const Series& f) const; // anchor must be 0

    struct SpecializeError {
        Coweight offender;
        std::string reason;
    };
    std::pair<std::map<Coweight, BigRat>, std::optional<SpecializeError>>
    specialize(const Series& f, const BigRat& q) const;

    bool equalExact(const Series& f, const Series& g) const;
    // all coefficient differences vanish to v-order > vBound within depth
    bool agreeWithin(const Series& f, const Series& g, long long depth, int vBound) const;

private:
    const WeylGroup& weyl_;
    const CartanData& cartan_;
    mutable std::mutex cacheMutex_;
    mutable std::map<std::pair<CorootAff, long long>, std::map<Coweight, VCoeff>> satakeCCache_;

    Series geometricFactor(const TruncationContext& ctx, const Coweight& negStep, VCoeff constant,
                           VCoeff tail) const;
    void certifySatakeC(const Series& e, const CorootAff& g) const;
};

} // namespace affsat

#include "affsat/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace affsat {

TruncationContext TruncationContext::composeMul(const TruncationContext& a, const TruncationContext& b) {
    TruncationContext out;
    out.anchor = a.anchor + b.anchor;
    out.depth = std::min(a.depth, b.depth);
    if (a.vWindow && b.vWindow)
        out.vWindow = std::make_pair(std::max(a.vWindow->first, b.vWindow->first),
                                     std::min(a.vWindow->second, b.vWindow->second));
    else
        out.vWindow = a.vWindow ? a.vWindow : b.vWindow;
    return out;
}

long long SeriesOps::depthOf(const TruncationContext& ctx, const Coweight& mu) const {
    auto h = cartan_.heightOpt(ctx.anchor - mu);
    return h ? *h : -1;
}

bool SeriesOps::inWindow(const TruncationContext& ctx, const Coweight& mu) const {
    auto h = cartan_.heightOpt(ctx.anchor - mu);
    return h && *h <= ctx.depth;
}

Series SeriesOps::zero(const TruncationContext& ctx) const {
    Series s;
    s.ctx = ctx;
    s.entire = true;
    return s;
}

Series SeriesOps::unit(const TruncationContext& ctx) const {
    return monomial(ctx, cartan_.zeroCoweight(), VCoeff::one());
}

Series SeriesOps::monomial(const TruncationContext& ctx, const Coweight& mu, VCoeff c) const {
    Series s;
    s.ctx = ctx;
    s.entire = true;
    if (!c.isZero()) {
        if (!inWindow(ctx, mu)) throw std::invalid_argument("monomial outside window: " + mu.str());
        s.terms.emplace(mu, std::move(c));
    }
    return s;
}

Series SeriesOps::fromTerms(const TruncationContext& ctx, std::map<Coweight, VCoeff> terms, bool entire) const {
    Series s;
    s.ctx = ctx;
    s.entire = entire;
    for (auto& [mu, c] : terms) {
        if (c.isZero()) continue;
        if (!inWindow(ctx, mu)) {
            s.entire = false;
            continue;
        }
        s.terms.emplace(mu, std::move(c));
    }
    return s;
}

Series SeriesOps::add(const Series& f, const Series& g) const {
    if (!(f.ctx.anchor == g.ctx.anchor)) throw std::invalid_argument("add: incompatible anchors");
    TruncationContext ctx = f.ctx;
    ctx.depth = std::min(f.ctx.depth, g.ctx.depth);
    Series out;
    out.ctx = ctx;
    out.entire = f.entire && g.entire;
    out.terms = f.terms;
    for (const auto& [mu, c] : g.terms) {
        auto it = out.terms.find(mu);
        if (it == out.terms.end())
            out.terms.emplace(mu, c);
        else {
            it->second = it->second + c;
            if (it->second.isZero()) out.terms.erase(it);
        }
    }
    for (auto it = out.terms.begin(); it != out.terms.end();) {
        if (!inWindow(ctx, it->first)) {
            out.entire = false;
            it = out.terms.erase(it);
        } else {
            ++it;
        }
    }
    return out;
}

Series SeriesOps::sub(const Series& f, const Series& g) const { return add(f, scale(g, -VCoeff::one())); }

Series SeriesOps::scale(const Series& f, const VCoeff& c) const {
    Series out;
    out.ctx = f.ctx;
    out.entire = f.entire;
    if (c.isZero()) return out;
    for (const auto& [mu, x] : f.terms) {
        VCoeff y = x * c;
        if (!y.isZero()) out.terms.emplace(mu, std::move(y));
    }
    return out;
}

Series SeriesOps::mul(const Series& f, const Series& g) const {
    TruncationContext ctx = TruncationContext::composeMul(f.ctx, g.ctx);
    Series out;
    out.ctx = ctx;
    out.entire = f.entire && g.entire;
    for (const auto& [mu, cf] : f.terms) {
        long long df = depthOf(f.ctx, mu);
        for (const auto& [nu, cg] : g.terms) {
            long long dg = depthOf(g.ctx, nu);
            if (df + dg > ctx.depth) {
                out.entire = false;
                continue;
            }
            Coweight key = mu + nu;
            VCoeff prod = cf * cg;
            if (prod.isZero()) continue;
            auto it = out.terms.find(key);
            if (it == out.terms.end())
                out.terms.emplace(std::move(key), std::move(prod));
            else {
                it->second = it->second + prod;
                if (it->second.isZero()) out.terms.erase(it);
            }
        }
    }
    return out;
}

Series SeriesOps::truncate(const Series& f, long long depth) const {
    Series out;
    out.ctx = f.ctx;
    out.ctx.depth = std::min(f.ctx.depth, depth);
    out.entire = f.entire;
    for (const auto& [mu, c] : f.terms) {
        if (inWindow(out.ctx, mu))
            out.terms.emplace(mu, c);
        else
            out.entire = false;
    }
    return out;
}

Series SeriesOps::wAct(const Series& f, const WeylElement& w) const {
    Series out;
    out.ctx = f.ctx;
    out.entire = f.entire;
    for (const auto& [mu, c] : f.terms) {
        if (!cartan_.inTitsCone(mu))
            throw std::invalid_argument("wAct: support outside Tits cone at " + mu.str());
        Coweight img = weyl_.act(w, mu);
        if (!inWindow(f.ctx, img)) {
            out.entire = false;
            continue;
        }
        auto it = out.terms.find(img);
        if (it == out.terms.end())
            out.terms.emplace(std::move(img), c);
        else
            it->second = it->second + c;
    }
    return out;
}

// constant + tail * (e^{-step} + e^{-2 step} + ...) within depth
Series SeriesOps::geometricFactor(const TruncationContext& ctx, const Coweight& negStep, VCoeff constant,
                                  VCoeff tail) const {
    Series s;
    s.ctx = ctx;
    s.entire = false; // tails beyond the depth exist
    Coweight zero = cartan_.zeroCoweight();
    long long stepHeight = cartan_.height(negStep);
    if (stepHeight <= 0) throw std::logic_error("geometricFactor: bad step");
    if (!constant.isZero()) s.terms.emplace(zero, std::move(constant));
    if (!tail.isZero()) {
        Coweight cur = zero;
        for (long long j = 1; j * stepHeight <= ctx.depth; ++j) {
            cur = cur - negStep;
            s.terms.emplace(cur, tail);
        }
    }
    return s;
}

namespace {

bool corootPositive(const CartanData& cd, const CorootAff& g) {
    bool zero = std::all_of(g.finite.begin(), g.finite.end(), [](long long x) { return x == 0; });
    if (zero) {
        if (g.cMult == 0) throw std::invalid_argument("zero coroot");
        return g.cMult > 0;
    }
    return cd.isPositiveRoot(RootAff{g.finite, g.cMult});
}

} // namespace

Series SeriesOps::expandSatakeC(const TruncationContext& ctxIn, const CorootAff& g) const {
    TruncationContext ctx{cartan_.zeroCoweight(), ctxIn.depth, ctxIn.vWindow};
    bool pos = corootPositive(cartan_, g);
    CorootAff absG = pos ? g : -g;
    auto key = std::make_pair(g, ctx.depth);
    Series s;
    {
        std::lock_guard<std::mutex> lock(cacheMutex_);
        auto cached = satakeCCache_.find(key);
        if (cached != satakeCCache_.end()) {
            s.ctx = ctx;
            s.terms = cached->second;
            s.entire = false;
            return s;
        }
    }
    Coweight step = absG.asCoweight();
    // positive: 1 + (1 - v^2) sum e^{-j g};  negative: v^2 + (v^2 - 1) sum e^{-j|g|}
    VPoly one(BigInt(1));
    VPoly v2 = VPoly::monomial(BigInt(1), 2);
    if (pos)
        s = geometricFactor(ctx, step, VCoeff::one(), VCoeff(one - v2, one));
    else
        s = geometricFactor(ctx, step, VCoeff(v2, one), VCoeff(v2 - one, one));
    certifySatakeC(s, g);
    std::lock_guard<std::mutex> lock(cacheMutex_);
    satakeCCache_.emplace(std::move(key), s.terms);
    return s;
}

void SeriesOps::certifySatakeC(const Series& e, const CorootAff& g) const {
    // (1 - e^{-g}) * E = 1 - v^2 e^{-g}, rewritten into the ring for negative g
    bool pos = corootPositive(cartan_, g);
    Coweight step = (pos ? g : -g).asCoweight();
    Coweight zero = cartan_.zeroCoweight();
    VPoly one(BigInt(1));
    VPoly v2 = VPoly::monomial(BigInt(1), 2);
    std::map<Coweight, VCoeff> lhsTerms, rhsTerms;
    if (pos) {
        lhsTerms = {{zero, VCoeff::one()}, {zero - step, -VCoeff::one()}};
        rhsTerms = {{zero, VCoeff::one()}, {zero - step, VCoeff(-v2, one)}};
    } else {
        lhsTerms = {{zero - step, VCoeff::one()}, {zero, -VCoeff::one()}};
        rhsTerms = {{zero - step, VCoeff::one()}, {zero, VCoeff(-v2, one)}};
    }
    Series lhs = fromTerms(e.ctx, std::move(lhsTerms), true);
    Series prod = mul(lhs, e);
    Series rhs = fromTerms(e.ctx, std::move(rhsTerms), true);
    Series diff = sub(prod, rhs);
    if (!diff.isZero()) throw std::logic_error("expandSatakeC failed its defining identity");
}

Series SeriesOps::expandDLC(const TruncationContext& ctxIn, const CorootAff& g) const {
    TruncationContext ctx{cartan_.zeroCoweight(), ctxIn.depth, ctxIn.vWindow};
    bool pos = corootPositive(cartan_, g);
    Coweight step = (pos ? g : -g).asCoweight();
    // positive: v + (v - v^{-1}) sum;  negative: v^{-1} + (v^{-1} - v) sum
    VCoeff v = VCoeff::vPower(1);
    VCoeff vinv = VCoeff::vPower(-1);
    if (pos) return geometricFactor(ctx, step, v, v - vinv);
    return geometricFactor(ctx, step, vinv, vinv - v);
}

Series SeriesOps::expandDLB(const TruncationContext& ctxIn, const CorootAff& g) const {
    TruncationContext ctx{cartan_.zeroCoweight(), ctxIn.depth, ctxIn.vWindow};
    bool pos = corootPositive(cartan_, g);
    Coweight step = (pos ? g : -g).asCoweight();
    VCoeff v = VCoeff::vPower(1);
    VCoeff vinv = VCoeff::vPower(-1);
    // positive: (v^{-1} - v) sum;  negative: (v - v^{-1})(1 + sum)
    if (pos) return geometricFactor(ctx, step, VCoeff::zero(), vinv - v);
    return geometricFactor(ctx, step, v - vinv, v - vinv);
}

Series SeriesOps::deltaW(const TruncationContext& ctxIn, const WeylElement& w) const {
    TruncationContext ctx{cartan_.zeroCoweight(), ctxIn.depth, ctxIn.vWindow};
    struct Factor {
        CorootAff coroot;
        long long power;
    };
    std::vector<Factor> factors;
    long long h = cartan_.coxeterNumber();
    for (long long n = 1; n * h <= ctx.depth; ++n) {
        CorootAff nc{IVec(static_cast<size_t>(cartan_.rank()), 0), n};
        factors.push_back({nc, cartan_.rank()});
    }
    // real factors still visible inside the window: w a^vee = b^vee with b
    // positive of bounded height, plus the inverted ones; a level-m real
    // coroot has height at least m*h - (h-1)
    long long mMax = (ctx.depth + h - 1) / h;
    for (const auto& b : cartan_.enumeratePositiveReal(mMax)) {
        CorootAff bv = cartan_.corootOf(b);
        if (cartan_.heightOfCoroot(bv) > ctx.depth) continue;
        RootAff a = weyl_.actOnRoot(weyl_.inverse(w), b);
        if (cartan_.isPositiveRoot(a)) factors.push_back({bv, 1});
    }
    for (const auto& a : weyl_.inversionSet(w)) {
        CorootAff av = cartan_.corootOf(a);
        factors.push_back({weyl_.actOnCoroot(w, av), 1});
    }
    std::sort(factors.begin(), factors.end(),
              [](const Factor& x, const Factor& y) { return x.coroot < y.coroot; });
    Series acc = unit(ctx);
    acc.entire = false;
    for (const auto& f : factors) {
        Series e = expandSatakeC(ctx, f.coroot);
        for (long long k = 0; k < f.power; ++k) acc = mul(acc, e);
    }
    acc.ctx = ctx;
    return acc;
}

Series SeriesOps::invertUnit(const Series& f) const {
    if (!f.ctx.anchor.isZero()) throw std::invalid_argument("invertUnit: anchor must be 0");
    Coweight zero = cartan_.zeroCoweight();
    VCoeff u = f.coeff(zero);
    if (u.isZero()) throw std::invalid_argument("invertUnit: leading coefficient is not a unit");
    VCoeff uinv = VCoeff::one() / u;
    // f = u (1 - g) with g supported at depth >= 1
    Series g;
    g.ctx = f.ctx;
    g.entire = false;
    for (const auto& [mu, c] : f.terms) {
        if (mu == zero) continue;
        g.terms.emplace(mu, -(c * uinv));
    }
    Series r = unit(f.ctx);
    for (long long k = 1; k <= f.ctx.depth; ++k) {
        r = mul(g, r);
        r = add(unit(f.ctx), r);
    }
    Series out = scale(r, uinv);
    out.entire = false;
    return out;
}

std::pair<std::map<Coweight, BigRat>, std::optional<SeriesOps::SpecializeError>>
SeriesOps::specialize(const Series& f, const BigRat& q) const {
    std::map<Coweight, BigRat> out;
    if (q <= 0) return {out, SpecializeError{cartan_.zeroCoweight(), "q must be positive"}};
    BigRat v2 = BigRat(1) / q;
    for (const auto& [mu, c] : f.terms) {
        auto val = c.evalAtVSquared(v2);
        if (!val) return {std::map<Coweight, BigRat>{}, SpecializeError{mu, "coefficient is not v-finite in v^2"}};
        if (*val != 0) out.emplace(mu, *val);
    }
    return {out, std::nullopt};
}

bool SeriesOps::equalExact(const Series& f, const Series& g) const {
    return f.terms == g.terms;
}

bool SeriesOps::agreeWithin(const Series& f, const Series& g, long long depth, int vBound) const {
    auto check = [&](const Series& a, const Series& b) {
        for (const auto& [mu, c] : a.terms) {
            if (depthOf(a.ctx, mu) > depth) continue;
            VCoeff d = c - b.coeff(mu);
            if (!d.isZero() && d.vOrder() <= vBound) return false;
        }
        return true;
    };
    return check(f, g) && check(g, f);
}

} // namespace affsat

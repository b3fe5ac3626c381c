#include "affsat/polyrep.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace affsat {

Series PolyRep::dlApply(int i, const Series& f) const {
    CorootAff av = cartan_.simpleCoroot(i);
    WeylElement s = weyl_.simpleReflection(i);
    // endpoint bound: cancellation kills the coroot strings past both endpoints
    bool entireOut = f.entire;
    if (entireOut) {
        for (const auto& [mu, c] : f.terms) {
            long long d1 = ops_.depthOf(f.ctx, mu);
            long long d2 = ops_.depthOf(f.ctx, weyl_.act(s, mu));
            if (d2 < 0 || std::max(d1, d2) > f.ctx.depth) {
                entireOut = false;
                break;
            }
        }
    }
    Series fa = ops_.wAct(f, s);
    Series part1 = ops_.mul(ops_.expandDLC(f.ctx, av), fa);
    Series part2 = ops_.mul(ops_.expandDLB(f.ctx, av), f);
    Series out = ops_.add(part1, part2);
    out.ctx = f.ctx;
    out.entire = entireOut;
    return out;
}

PolyRep::WordResult PolyRep::dlAlongWord(const std::vector<int>& word, const Series& f) const {
    Series cur = f;
    // rightmost letter acts first
    for (auto it = word.rbegin(); it != word.rend(); ++it) cur = dlApply(*it, cur);
    return WordResult{cur, cur.entire};
}

PolyRep::WordResult PolyRep::dlWord(const WeylElement& w, const Series& f) const {
    return dlAlongWord(weyl_.reducedWord(w), f);
}

std::map<WeylElement, Series> PolyRep::extendOperator(const std::map<WeylElement, Series>& op, int i,
                                                      const TruncationContext& ctx) const {
    // (sum f_sigma [sigma]) . (c(a)[w_a] + b(a)[1])
    // = sum f_sigma c(sigma a)[sigma w_a] + f_sigma b(sigma a)[sigma]
    std::map<WeylElement, Series> out;
    CorootAff av = cartan_.simpleCoroot(i);
    WeylElement s = weyl_.simpleReflection(i);
    auto addInto = [&](const WeylElement& key, const Series& val) {
        auto it = out.find(key);
        if (it == out.end())
            out.emplace(key, val);
        else
            it->second = ops_.add(it->second, val);
    };
    for (const auto& [sigma, f] : op) {
        CorootAff gav = weyl_.actOnCoroot(sigma, av);
        addInto(weyl_.multiply(sigma, s), ops_.mul(f, ops_.expandDLC(ctx, gav)));
        addInto(sigma, ops_.mul(f, ops_.expandDLB(ctx, gav)));
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.isZero() ? out.erase(it) : std::next(it);
    return out;
}

std::map<WeylElement, Series> PolyRep::dlOperatorCoefficients(const WeylElement& w,
                                                              const TruncationContext& ctxIn) const {
    TruncationContext ctx{cartan_.zeroCoweight(), ctxIn.depth, ctxIn.vWindow};
    auto key = std::make_pair(w, ctx.depth);
    {
        std::lock_guard<std::mutex> lock(opMutex_);
        auto hit = opCache_.find(key);
        if (hit != opCache_.end()) return hit->second;
    }
    std::map<WeylElement, Series> op;
    if (w == weyl_.identity()) {
        op.emplace(weyl_.identity(), ops_.unit(ctx));
    } else {
        std::vector<int> word = weyl_.reducedWord(w);
        int last = word.back();
        word.pop_back();
        op = extendOperator(dlOperatorCoefficients(weyl_.fromWord(word), ctx), last, ctx);
    }
    std::lock_guard<std::mutex> lock(opMutex_);
    opCache_.emplace(std::move(key), op);
    return op;
}

namespace {

ShellAudit auditOf(const SeriesOps& ops, long long shell, const std::map<WeylElement, Series>& contrib,
                   const TruncationContext& ctx) {
    ShellAudit a;
    a.shell = shell;
    int vmax = ctx.vWindow ? ctx.vWindow->second : (1 << 20);
    for (const auto& [tau, s] : contrib) {
        for (const auto& [mu, c] : s.terms) {
            long long d = ops.depthOf(s.ctx, mu);
            int vo = c.vOrder();
            a.empty = false;
            if (a.minDepth < 0 || d < a.minDepth) a.minDepth = d;
            if (a.minVOrder < 0 || vo < a.minVOrder) a.minVOrder = vo;
            long long comb = d + vo;
            if (a.minCombined < 0 || comb < a.minCombined) a.minCombined = comb;
            if (d <= ctx.depth && vo <= vmax) a.inGauge = true;
        }
    }
    return a;
}

} // namespace

ShellExpansion PolyRep::symmetrize(long long L, const TruncationContext& ctxIn) const {
    TruncationContext ctx{cartan_.zeroCoweight(), ctxIn.depth, ctxIn.vWindow};
    ShellExpansion out;
    out.shellMax = L;
    out.ctx = ctx;
    weyl_.forEachShell(L, [&](long long s, const std::vector<WeylElement>& shell) {
        std::map<WeylElement, Series> contrib;
        VCoeff vs = VCoeff::vPower(static_cast<int>(s));
        for (const auto& w : shell) {
            for (const auto& [tau, a] : dlOperatorCoefficients(w, ctx)) {
                Series scaled = ops_.scale(a, vs);
                auto it = contrib.find(tau);
                if (it == contrib.end())
                    contrib.emplace(tau, std::move(scaled));
                else
                    it->second = ops_.add(it->second, scaled);
            }
        }
        out.audits.push_back(auditOf(ops_, s, contrib, ctx));
        for (const auto& [tau, c] : contrib) {
            auto it = out.coefficients.find(tau);
            if (it == out.coefficients.end())
                out.coefficients.emplace(tau, c);
            else
                it->second = ops_.add(it->second, c);
        }
        if (s >= 1 && ctx.vWindow && !out.stabilized && !out.audits[static_cast<size_t>(s)].inGauge &&
            !out.audits[static_cast<size_t>(s - 1)].inGauge)
            out.stabilized = std::make_pair(ctx.depth, *ctx.vWindow);
        // two shells of overshoot past stabilization, then stop expanding
        bool keepGoing = !(out.stabilized && s >= 3 && !out.audits[static_cast<size_t>(s - 2)].inGauge &&
                           !out.audits[static_cast<size_t>(s - 3)].inGauge);
        return keepGoing;
    });
    return out;
}

std::map<WeylElement, Series> PolyRep::leftEigenResidual(int i, long long L,
                                                         const TruncationContext& ctxIn) const {
    // T~_a P^L - v P^L = sum over w in shell L with l(w_a w) = L+1 of
    //   v^L ( T~_{w_a w} - v T~_w )
    TruncationContext ctx{cartan_.zeroCoweight(), ctxIn.depth, ctxIn.vWindow};
    WeylElement s = weyl_.simpleReflection(i);
    std::map<WeylElement, Series> res;
    auto addOp = [&](const std::map<WeylElement, Series>& op, const VCoeff& c) {
        for (const auto& [tau, a] : op) {
            Series scaled = ops_.scale(a, c);
            auto it = res.find(tau);
            if (it == res.end())
                it = res.emplace(tau, std::move(scaled)).first;
            else
                it->second = ops_.add(it->second, scaled);
            if (it->second.isZero()) res.erase(it);
        }
    };
    auto shells = weyl_.bfsEnumerate(L);
    for (const auto& w : shells.back()) {
        WeylElement sw = weyl_.multiply(s, w);
        if (weyl_.length(sw) != L + 1) continue;
        addOp(dlOperatorCoefficients(sw, ctx), VCoeff::vPower(static_cast<int>(L)));
        addOp(dlOperatorCoefficients(w, ctx), -VCoeff::vPower(static_cast<int>(L + 1)));
    }
    return res;
}

std::map<WeylElement, Series> PolyRep::rightEigenResidual(int i, long long L,
                                                          const TruncationContext& ctxIn) const {
    TruncationContext ctx{cartan_.zeroCoweight(), ctxIn.depth, ctxIn.vWindow};
    WeylElement s = weyl_.simpleReflection(i);
    std::map<WeylElement, Series> res;
    auto addOp = [&](const std::map<WeylElement, Series>& op, const VCoeff& c) {
        for (const auto& [tau, a] : op) {
            Series scaled = ops_.scale(a, c);
            auto it = res.find(tau);
            if (it == res.end())
                it = res.emplace(tau, std::move(scaled)).first;
            else
                it->second = ops_.add(it->second, scaled);
            if (it->second.isZero()) res.erase(it);
        }
    };
    auto shells = weyl_.bfsEnumerate(L);
    for (const auto& w : shells.back()) {
        WeylElement ws = weyl_.multiply(w, s);
        if (weyl_.length(ws) != L + 1) continue;
        addOp(dlOperatorCoefficients(ws, ctx), VCoeff::vPower(static_cast<int>(L)));
        addOp(dlOperatorCoefficients(w, ctx), -VCoeff::vPower(static_cast<int>(L + 1)));
    }
    return res;
}

ProportionalityReport PolyRep::checkProportionality(const ShellExpansion& shells,
                                                    long long tauLenCap) const {
    ProportionalityReport rep;
    if (!shells.ctx.vWindow) throw std::invalid_argument("checkProportionality: needs a v-window");
    int vmax = shells.ctx.vWindow->second;
    rep.certifiedDepth = shells.ctx.depth;
    rep.certifiedVOrder = vmax;
    Series delta = ops_.deltaW(shells.ctx, weyl_.identity());
    auto c1it = shells.coefficients.find(weyl_.identity());
    if (c1it == shells.coefficients.end()) throw std::logic_error("missing C_1 coefficient");
    const Series& gamma = c1it->second;
    rep.ok = true;
    for (const auto& [tau, ctau] : shells.coefficients) {
        if (weyl_.length(tau) > tauLenCap) continue;
        Series lhs = ops_.mul(ctau, delta);
        Series rhs = ops_.mul(gamma, ops_.deltaW(shells.ctx, tau));
        Series diff = ops_.sub(lhs, rhs);
        for (const auto& [mu, c] : diff.terms) {
            if (c.vOrder() <= vmax) {
                rep.ok = false;
                rep.mismatches.emplace_back(tau, mu);
            }
        }
    }
    rep.mFactor = ops_.mul(gamma, ops_.invertUnit(delta));
    // W-invariance of m within the window: coefficients agree on orbit pairs
    rep.mInvariant = true;
    for (int i = 1; i <= weyl_.numGenerators(); ++i) {
        WeylElement s = weyl_.simpleReflection(i);
        for (const auto& [mu, c] : rep.mFactor.terms) {
            Coweight nu = weyl_.act(s, mu);
            if (!ops_.inWindow(rep.mFactor.ctx, nu)) continue;
            VCoeff d = c - rep.mFactor.coeff(nu);
            if (!d.isZero() && d.vOrder() <= vmax) rep.mInvariant = false;
        }
    }
    return rep;
}

std::vector<BigInt> PoincareData::affineSeries(long long L) const {
    // expand affineNum/affineDen as a power series in t = v^2
    auto even = [&](const VPoly& p) {
        auto e = p.asEvenPowers();
        if (!e) throw std::logic_error("Poincare data has odd v-powers");
        return *e;
    };
    std::vector<BigInt> num = even(affineNum), den = even(affineDen);
    std::vector<BigInt> out(static_cast<size_t>(L) + 1, BigInt(0));
    if (den.empty() || den[0] == 0) throw std::logic_error("affine Poincare series: bad denominator");
    for (long long k = 0; k <= L; ++k) {
        BigInt acc = k < static_cast<long long>(num.size()) ? num[static_cast<size_t>(k)] : BigInt(0);
        for (long long j = 1; j <= k; ++j) {
            if (j >= static_cast<long long>(den.size())) break;
            acc -= den[static_cast<size_t>(j)] * out[static_cast<size_t>(k - j)];
        }
        if (acc % den[0] != 0) throw std::logic_error("affine Poincare series: non-integral coefficient");
        out[static_cast<size_t>(k)] = acc / den[0];
    }
    return out;
}

namespace {

// q-integer [d]_t = 1 + t + ... + t^{d-1} in the variable v with t = v^2
VPoly qInt(long long d) {
    std::vector<BigInt> cs(static_cast<size_t>(2 * (d - 1) + 1), BigInt(0));
    for (long long k = 0; k < d; ++k) cs[static_cast<size_t>(2 * k)] = 1;
    return VPoly::fromCoeffs(std::move(cs));
}

bool factorQInts(const VPoly& poly, long long need, std::vector<long long>& degrees) {
    if (need == 0) return poly == VPoly(BigInt(1));
    long long maxDeg = poly.degree() / 2 + 1;
    for (long long d = maxDeg; d >= 2; --d) {
        VPoly q = qInt(d);
        VPoly quot;
        try {
            quot = poly.exactDiv(q);
        } catch (const std::invalid_argument&) {
            continue;
        }
        degrees.push_back(d);
        if (factorQInts(quot, need - 1, degrees)) return true;
        degrees.pop_back();
    }
    return false;
}

} // namespace

PoincareData PolyRep::poincareData(long long enumCap) const {
    PoincareData out;
    // enumerate the finite Weyl group with the finite generators only
    std::set<WeylElement> seen{weyl_.identity()};
    std::vector<WeylElement> frontier{weyl_.identity()};
    std::vector<BigInt> counts{BigInt(1)};
    while (!frontier.empty()) {
        std::vector<WeylElement> next;
        for (const auto& x : frontier)
            for (int i = 1; i <= cartan_.rank(); ++i) {
                WeylElement y = weyl_.multiply(x, weyl_.simpleReflection(i));
                if (seen.insert(y).second) next.push_back(y);
            }
        if (static_cast<long long>(seen.size()) > enumCap)
            throw std::runtime_error("poincareData: enumeration cap exceeded");
        if (!next.empty()) counts.push_back(BigInt(next.size()));
        frontier = std::move(next);
    }
    std::vector<BigInt> cs;
    for (size_t s = 0; s < counts.size(); ++s) {
        cs.resize(2 * s + 1, BigInt(0));
        cs[2 * s] = counts[s];
    }
    out.finitePoly = VPoly::fromCoeffs(std::move(cs));
    std::vector<long long> degrees;
    if (!factorQInts(out.finitePoly, cartan_.rank(), degrees))
        throw std::runtime_error("poincareData: factorization failure");
    for (long long d : degrees) out.exponents.push_back(d - 1);
    std::sort(out.exponents.begin(), out.exponents.end());
    // W(v^2) = W_o(v^2) / prod (1 - v^{2 m_i})
    out.affineNum = out.finitePoly;
    VPoly den(BigInt(1));
    for (long long m : out.exponents)
        den = den * (VPoly(BigInt(1)) - VPoly::monomial(BigInt(1), static_cast<int>(2 * m)));
    out.affineDen = den;
    return out;
}

} // namespace affsat

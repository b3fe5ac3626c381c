#include "affsat/spherical.hpp"

#include <algorithm>
#include <stdexcept>

namespace affsat {

namespace {

void addTerm(LaurentMap& m, const Coweight& mu, const VCoeff& c) {
    if (c.isZero()) return;
    auto it = m.find(mu);
    if (it == m.end())
        m.emplace(mu, c);
    else {
        it->second = it->second + c;
        if (it->second.isZero()) m.erase(it);
    }
}

} // namespace

// h with h (1 - e^{a^vee}) = (1 - v^2 e^{a^vee}) g^{w_a} + (v^2 - 1) g;
// the division is exact, which is the telescoping cancellation
LaurentMap Spherical::jStep(int i, const LaurentMap& g) const {
    WeylElement s = weyl_.simpleReflection(i);
    Coweight av = cartan_.simpleCoroot(i).asCoweight();
    RootAff a = cartan_.simpleRoot(i);
    VCoeff v2 = VCoeff::vPower(2);
    LaurentMap rhs;
    for (const auto& [mu, c] : g) {
        Coweight smu = weyl_.act(s, mu);
        addTerm(rhs, smu, c);
        addTerm(rhs, smu + av, -(c * v2));
        addTerm(rhs, mu, c * (v2 - VCoeff::one()));
    }
    // divide by (1 - e^{a^vee}) along each a^vee-string by prefix sums
    std::map<Coweight, std::map<long long, VCoeff>> classes;
    for (const auto& [mu, c] : rhs) {
        long long p = cartan_.pairing(a, mu);
        long long jm = (p % 2 + 2) % 2; // representative pairing in {0,1}
        long long j = (p - jm) / 2;
        classes[mu - av.scaled(j)].emplace(j, c);
    }
    LaurentMap out;
    for (const auto& [rep, byJ] : classes) {
        VCoeff run = VCoeff::zero();
        long long next = byJ.begin()->first;
        for (const auto& [j, c] : byJ) {
            if (!run.isZero())
                for (long long k = next; k < j; ++k) addTerm(out, rep + av.scaled(k), run);
            run = run + c;
            if (!run.isZero()) addTerm(out, rep + av.scaled(j), run);
            next = j + 1;
        }
        if (!run.isZero()) throw std::logic_error("jStep: string sum does not telescope to zero");
    }
    return out;
}

LaurentMap Spherical::jTildeRecursive(const WeylElement& w, const Coweight& lam) const {
    auto key = std::make_pair(lam, w);
    {
        std::lock_guard<std::mutex> lock(jMutex_);
        auto hit = jCache_.find(key);
        if (hit != jCache_.end()) return hit->second;
    }
    LaurentMap out;
    if (w == weyl_.identity()) {
        out.emplace(lam, VCoeff::one());
    } else {
        int a = 0;
        long long lw = weyl_.length(w);
        for (int i = 1; i <= weyl_.numGenerators(); ++i)
            if (weyl_.length(weyl_.multiply(weyl_.simpleReflection(i), w)) < lw) {
                a = i;
                break;
            }
        if (a == 0) throw std::logic_error("jTilde: no left descent");
        out = jStep(a, jTildeRecursive(weyl_.multiply(weyl_.simpleReflection(a), w), lam));
    }
    std::lock_guard<std::mutex> lock(jMutex_);
    jCache_.emplace(std::move(key), out);
    return out;
}

LaurentMap Spherical::jTilde(const WeylElement& w, const Coweight& lam, JRoute route,
                             long long dlDepthHint) const {
    if (!cartan_.isDominant(lam)) throw std::invalid_argument("jTilde: non-dominant coweight");
    if (route == JRoute::Recursion) {
        LaurentMap out = jTildeRecursive(w, lam);
        for (const auto& [mu, c] : out)
            if (!c.isPolyInVSquared())
                throw VFinitenessError("jTilde: coefficient not in C[v^2] at " + mu.str(), mu);
        return out;
    }
    // DL route: v^{l(w)} T~_w(e^lam) on the truncated ring; the depth grows
    // until no truncation happened anywhere along the word
    long long depth = std::max<long long>(dlDepthHint, 4);
    const long long cap = 4096;
    for (;;) {
        TruncationContext ctx{lam, depth, {}};
        Series el = ops_.monomial(ctx, lam, VCoeff::one());
        auto r = rep_.dlWord(w, el);
        if (r.exact) {
            LaurentMap out;
            VCoeff vl = VCoeff::vPower(static_cast<int>(weyl_.length(w)));
            for (const auto& [mu, c] : r.series.terms) {
                VCoeff x = c * vl;
                if (!x.isPolyInVSquared())
                    throw VFinitenessError("jTilde(DL): coefficient not in C[v^2] at " + mu.str(), mu);
                if (!x.isZero()) out.emplace(mu, x);
            }
            return out;
        }
        depth *= 2;
        if (depth > cap) throw StabilizationError("jTilde: DL route depth cap exceeded");
    }
}

Series Spherical::jFunction(const WeylElement& w, const Coweight& lam, const SatakeOptions& opts,
                            JRoute route) const {
    LaurentMap jt = jTilde(w, lam, route, opts.depth * 2);
    VCoeff pref = VCoeff::vPower(static_cast<int>(-2 * cartan_.rhoPairing(lam)));
    TruncationContext ctx{lam, opts.depth, opts.vWindow};
    std::map<Coweight, VCoeff> terms;
    for (const auto& [mu, c] : jt) terms.emplace(mu, c * pref);
    return ops_.fromTerms(ctx, std::move(terms), true);
}

Series Spherical::jFlat(const WeylElement& w, const Coweight& lam, const SatakeOptions& opts,
                        JRoute route) const {
    Series j = jFunction(w, lam, opts, route);
    return ops_.scale(j, VCoeff::vPower(static_cast<int>(-2 * weyl_.length(w))));
}

void Spherical::assertLeadingAndPositivity(SatakeResult& res) const {
    long long rho = cartan_.rhoPairing(res.lambda);
    VCoeff lead = res.series.coeff(res.lambda);
    VCoeff want = VCoeff::vPower(static_cast<int>(-2 * rho));
    if (!(lead == want))
        throw std::logic_error("Satake leading term is not q^{<rho,lambda>} e^{lambda}");
    if (res.q) {
        auto [spec, err] = ops_.specialize(res.series, *res.q);
        if (err)
            throw VFinitenessError("Satake specialization failed at " + err->offender.str(),
                                   err->offender);
        // coefficient nonnegativity is a theorem for prime-power q; enforce it
        // on all integers >= 2 and leave other rationals unconstrained
        bool integral = boost::multiprecision::denominator(*res.q) == 1 && *res.q >= 2;
        if (integral)
            for (const auto& [mu, val] : spec)
                if (val < 0) throw std::logic_error("negative Satake coefficient at " + mu.str());
        res.specialized = std::move(spec);
    }
}

SatakeResult Spherical::satakeByDisassembly(const Coweight& lam, const SatakeOptions& opts,
                                            std::optional<BigRat> q) const {
    if (!cartan_.isDominant(lam)) throw std::invalid_argument("satake: non-dominant coweight");
    SatakeResult res;
    res.lambda = lam;
    res.q = q;
    res.route = "disassembly";
    res.certifiedDepth = opts.depth;
    TruncationContext ctx{lam, opts.depth, opts.vWindow};
    StabilizerData st = weyl_.stabilizerData(lam);
    LaurentMap acc;
    if (!st.finite) {
        // W_lam = W: the disassembly is the single term J_1
        acc.emplace(lam, VCoeff::one());
        res.shellsUsed = 0;
        res.stabilized = true;
    } else {
        long long emptyRun = 0;
        long long used = 0;
        weyl_.forEachShell(opts.shellBudget, [&](long long s, const std::vector<WeylElement>& shell) {
            bool contributed = false;
            for (const auto& w : shell) {
                bool minimal = true;
                for (int i : st.generators)
                    if (weyl_.length(weyl_.multiply(w, weyl_.simpleReflection(i))) < s) {
                        minimal = false;
                        break;
                    }
                if (!minimal) continue;
                for (const auto& [mu, c] : jTildeRecursive(w, lam)) {
                    if (!ops_.inWindow(ctx, mu)) continue;
                    addTerm(acc, mu, c);
                    contributed = true;
                }
            }
            emptyRun = contributed ? 0 : emptyRun + 1;
            used = s;
            return emptyRun < 2;
        });
        res.shellsUsed = used;
        res.stabilized = emptyRun >= 2;
        if (!res.stabilized)
            throw StabilizationError("satakeByDisassembly: shell budget exhausted before stabilization");
    }
    VCoeff pref = VCoeff::vPower(static_cast<int>(-2 * cartan_.rhoPairing(lam)));
    std::map<Coweight, VCoeff> terms;
    for (const auto& [mu, c] : acc) {
        if (!c.isPolyInVSquared())
            throw VFinitenessError("disassembly coefficient not in C[v^2] at " + mu.str(), mu);
        terms.emplace(mu, c * pref);
    }
    res.series = ops_.fromTerms(ctx, std::move(terms), false);
    assertLeadingAndPositivity(res);
    return res;
}

Series Spherical::hZero(const SatakeOptions& opts, HZeroRoute route) const {
    TruncationContext ctx{cartan_.zeroCoweight(), opts.depth, opts.vWindow};
    long long h = cartan_.coxeterNumber();
    if (route == HZeroRoute::Product) {
        // prod_{j,i} (1 - v^{2(m_j+1)} e^{-ic}) / (1 - v^{2 m_j} e^{-ic});
        // orientation fixed by the defining symmetrizer value, which the
        // flagship identity suite cross-checks shell by shell
        auto pd = rep_.poincareData();
        Series acc = ops_.unit(ctx);
        Coweight mc = -cartan_.minimalImaginaryCoroot();
        for (long long m : pd.exponents) {
            for (long long i = 1; i * h <= ctx.depth; ++i) {
                // coeff of e^{-ikc} is v^{2mk}(1 - v^2) for k >= 1
                std::map<Coweight, VCoeff> f;
                f.emplace(cartan_.zeroCoweight(), VCoeff::one());
                VCoeff tail = VCoeff::one() - VCoeff::vPower(2);
                for (long long k = 1; k * i * h <= ctx.depth; ++k)
                    f.emplace(mc.scaled(i * k),
                              VCoeff::vPower(static_cast<int>(2 * m * k)) * tail);
                acc = ops_.mul(acc, ops_.fromTerms(ctx, std::move(f), false));
                acc.ctx = ctx;
            }
        }
        return acc;
    }
    // symmetrizer route: (sum over shells Delta^w) / W(v^2)
    if (!opts.vWindow) throw std::invalid_argument("hZero(symmetrizer): needs a v-window");
    int vmax = opts.vWindow->second;
    Series acc = ops_.zero(ctx);
    long long emptyRun = 0;
    weyl_.forEachShell(opts.shellBudget, [&](long long, const std::vector<WeylElement>& shell) {
        bool contributed = false;
        for (const auto& w : shell) {
            Series dw = ops_.deltaW(ctx, w);
            for (const auto& [mu, c] : dw.terms)
                if (c.vOrder() <= vmax) contributed = true;
            acc = ops_.add(acc, dw);
        }
        emptyRun = contributed ? 0 : emptyRun + 1;
        return emptyRun < 2;
    });
    if (emptyRun < 2) throw StabilizationError("hZero: shell budget exhausted before stabilization");
    auto pd = rep_.poincareData();
    // divide by W(v^2) = affineNum / affineDen
    Series out = ops_.scale(acc, VCoeff(pd.affineDen, pd.affineNum));
    // the true value lives on the central line; anything else must sit
    // beyond the certified v-window
    for (const auto& [mu, c] : out.terms) {
        bool central = mu.d == 0 && std::all_of(mu.finite.begin(), mu.finite.end(),
                                                [](long long x) { return x == 0; });
        if (!central && c.vOrder() <= vmax)
            throw std::logic_error("hZero(symmetrizer): non-central support inside the window at " +
                                   mu.str());
    }
    return out;
}

SatakeResult Spherical::satakeByMacdonald(const Coweight& lam, const SatakeOptions& opts,
                                          std::optional<BigRat> q) const {
    if (!cartan_.isDominant(lam)) throw std::invalid_argument("satake: non-dominant coweight");
    SatakeResult res;
    res.lambda = lam;
    res.q = q;
    res.route = "macdonald";
    res.certifiedDepth = opts.depth;
    TruncationContext ctx{lam, opts.depth, opts.vWindow};
    StabilizerData st = weyl_.stabilizerData(lam);
    if (!st.finite) {
        // lam is central: H_lam / H_0 = v^{-2 <rho, lam>} e^{lam}
        res.series =
            ops_.monomial(ctx, lam, VCoeff::vPower(static_cast<int>(-2 * cartan_.rhoPairing(lam))));
        res.stabilized = true;
        assertLeadingAndPositivity(res);
        return res;
    }
    Series num = ops_.zero(ctx);
    long long emptyRun = 0;
    long long used = 0;
    weyl_.forEachShell(opts.shellBudget, [&](long long s, const std::vector<WeylElement>& shell) {
        bool contributed = false;
        for (const auto& w : shell) {
            Coweight wl = weyl_.act(w, lam);
            if (!ops_.inWindow(ctx, wl)) continue;
            Series term = ops_.mul(ops_.deltaW(ctx, w), ops_.monomial(ctx, wl, VCoeff::one()));
            term.ctx = ctx;
            num = ops_.add(num, term);
            contributed = true;
        }
        emptyRun = contributed ? 0 : emptyRun + 1;
        used = s;
        return emptyRun < 2;
    });
    res.shellsUsed = used;
    res.stabilized = emptyRun >= 2;
    if (!res.stabilized)
        throw StabilizationError("satakeByMacdonald: shell budget exhausted before stabilization");
    VCoeff pref = VCoeff::vPower(static_cast<int>(-2 * cartan_.rhoPairing(lam)));
    Series hlam = ops_.scale(num, pref / VCoeff(st.poincare, VPoly(BigInt(1))));
    Series h0 = hZero(opts, HZeroRoute::Product);
    Series ratio = ops_.mul(hlam, ops_.invertUnit(h0));
    ratio.ctx = ctx;
    VCoeff unpref = VCoeff::vPower(static_cast<int>(2 * cartan_.rhoPairing(lam)));
    for (const auto& [mu, c] : ratio.terms)
        if (!(c * unpref).isPolyInVSquared())
            throw VFinitenessError("Macdonald route coefficient not in C[v^2] at " + mu.str(), mu);
    res.series = ratio;
    assertLeadingAndPositivity(res);
    return res;
}

std::map<Coweight, VPoly> Spherical::phiTable(const Coweight& lam, const SatakeOptions& opts) const {
    SatakeResult sres = satakeByDisassembly(lam, opts, std::nullopt);
    VCoeff unpref = VCoeff::vPower(static_cast<int>(2 * cartan_.rhoPairing(lam)));
    std::map<Coweight, VPoly> out;
    for (const auto& [mu, c] : sres.series.terms) {
        VCoeff norm = c * unpref;
        if (!norm.isPolyInVSquared())
            throw VFinitenessError("phiTable: coefficient not in C[v^2] at " + mu.str(), mu);
        out.emplace(mu, norm.num());
    }
    return out;
}

} // namespace affsat

#include "affsat/hecke.hpp"

#include <algorithm>
#include <stdexcept>

namespace affsat {

namespace {

VCoeff vPow(int k) { return VCoeff::vPower(k); }

// v^{-2} - 1
VCoeff qMinusOne() { return VCoeff::vPower(-2) - VCoeff::one(); }

} // namespace

HeckeElement HeckeAlgebra::one() const {
    return monomial(cartan_.zeroCoweight(), weyl_.identity(), VCoeff::one());
}

HeckeElement HeckeAlgebra::theta(const Coweight& lam) const {
    return monomial(lam, weyl_.identity(), VCoeff::one());
}

HeckeElement HeckeAlgebra::tElement(const WeylElement& w) const {
    return monomial(cartan_.zeroCoweight(), w, VCoeff::one());
}

HeckeElement HeckeAlgebra::tWord(const std::vector<int>& word) const {
    HeckeElement x = one();
    for (int i : word) x = mulByTGen(x, i);
    return x;
}

HeckeElement HeckeAlgebra::tGenInverse(int i) const {
    HeckeElement x = monomial(cartan_.zeroCoweight(), weyl_.simpleReflection(i), vPow(2));
    x.addTerm(cartan_.zeroCoweight(), weyl_.identity(), vPow(2) - VCoeff::one());
    return x;
}

HeckeElement HeckeAlgebra::monomial(const Coweight& lam, const WeylElement& w, VCoeff c) const {
    HeckeElement x;
    x.addTerm(lam, w, c);
    return x;
}

HeckeElement HeckeAlgebra::scale(const HeckeElement& x, const VCoeff& c) const {
    HeckeElement out;
    if (c.isZero()) return out;
    for (const auto& [k, v] : x.terms) out.addTerm(k.first, k.second, v * c);
    return out;
}

HeckeElement HeckeAlgebra::add(const HeckeElement& x, const HeckeElement& y) const {
    HeckeElement out = x;
    for (const auto& [k, v] : y.terms) out.addTerm(k.first, k.second, v);
    return out;
}

HeckeElement HeckeAlgebra::sub(const HeckeElement& x, const HeckeElement& y) const {
    return add(x, scale(y, -VCoeff::one()));
}

// right multiplication by the generator T_{a_i}; quadratic relation
// (T_a + 1)(T_a - v^{-2}) = 0 on descents
HeckeElement HeckeAlgebra::mulByTGen(const HeckeElement& x, int i) const {
    HeckeElement out;
    WeylElement s = weyl_.simpleReflection(i);
    for (const auto& [k, c] : x.terms) {
        const WeylElement& z = k.second;
        WeylElement zs = weyl_.multiply(z, s);
        if (weyl_.length(zs) > weyl_.length(z)) {
            out.addTerm(k.first, zs, c);
        } else {
            out.addTerm(k.first, z, c * qMinusOne());
            out.addTerm(k.first, zs, c * vPow(-2));
        }
    }
    return out;
}

HeckeElement HeckeAlgebra::bernsteinCommute(int i, const Coweight& lam) const {
    long long k = cartan_.simplePairing(i, lam);
    HeckeElement out;
    if (k == 0) return out;
    Coweight av = cartan_.simpleCoroot(i).asCoweight();
    if (k > 0) {
        VCoeff c = qMinusOne(); // v^{-2} - 1
        Coweight cur = lam;
        for (long long j = 0; j < k; ++j) {
            out.addTerm(cur, weyl_.identity(), c);
            cur = cur - av;
        }
    } else {
        VCoeff c = VCoeff::one() - VCoeff::vPower(-2); // 1 - v^{-2}
        Coweight cur = weyl_.act(weyl_.simpleReflection(i), lam);
        for (long long j = 0; j < -k; ++j) {
            out.addTerm(cur, weyl_.identity(), c);
            cur = cur - av;
        }
    }
    return out;
}

HeckeElement HeckeAlgebra::normalOrderTTheta(const WeylElement& x, const Coweight& mu) const {
    if (x == weyl_.identity()) return theta(mu);
    auto key = std::make_pair(x, mu);
    {
        std::lock_guard<std::mutex> lock(cacheMutex_);
        auto it = normalOrderCache_.find(key);
        if (it != normalOrderCache_.end()) return it->second;
    }

    std::vector<int> word = weyl_.reducedWord(x);
    int a = word.back();
    word.pop_back();
    WeylElement xp = weyl_.fromWord(word);
    // T_x Theta_mu = T_{x'} (Theta_{w_a mu} T_a + B(a, mu))
    Coweight sam = weyl_.act(weyl_.simpleReflection(a), mu);
    HeckeElement head = mulByTGen(normalOrderTTheta(xp, sam), a);
    HeckeElement tail;
    for (const auto& [k, c] : bernsteinCommute(a, mu).terms)
        tail = add(tail, scale(normalOrderTTheta(xp, k.first), c));
    HeckeElement out = add(head, tail);
    std::lock_guard<std::mutex> lock(cacheMutex_);
    normalOrderCache_.emplace(std::move(key), out);
    return out;
}

HeckeElement HeckeAlgebra::multiply(const HeckeElement& x, const HeckeElement& y) const {
    HeckeElement out;
    for (const auto& [kx, cx] : x.terms) {
        for (const auto& [ky, cy] : y.terms) {
            VCoeff c = cx * cy;
            if (c.isZero()) continue;
            // (Theta_l T_z)(Theta_m T_u) = Theta_l (T_z Theta_m) T_u
            HeckeElement mid = normalOrderTTheta(kx.second, ky.first);
            std::vector<int> uWord = weyl_.reducedWord(ky.second);
            for (int i : uWord) mid = mulByTGen(mid, i);
            for (const auto& [km, cm] : mid.terms)
                out.addTerm(kx.first + km.first, km.second, c * cm);
        }
    }
    return out;
}

std::map<long long, HeckeElement> HeckeAlgebra::grade(const HeckeElement& x) const {
    std::map<long long, HeckeElement> out;
    for (const auto& [k, c] : x.terms) out[k.first.d].addTerm(k.first, k.second, c);
    return out;
}

bool HeckeAlgebra::isInHPlus(const HeckeElement& x) const {
    for (const auto& [k, c] : x.terms) {
        const Coweight& th = k.first;
        if (th.d > 0) continue;
        if (th.d < 0) return false;
        bool central = std::all_of(th.finite.begin(), th.finite.end(), [](long long v) { return v == 0; });
        if (!central) return false;
    }
    return true;
}

HeckeElement HeckeAlgebra::thetaBuild(const Coweight& mu, ThetaPolicy policy, long long budget,
                                      long long& used, std::vector<ThetaStep>& trace,
                                      std::map<Coweight, HeckeElement>& memo) const {
    auto hit = memo.find(mu);
    if (hit != memo.end()) return hit->second;
    if (++used > budget) throw std::runtime_error("thetaConstruct: budget exceeded at " + mu.str());
    if (cartan_.isDominant(mu)) {
        trace.push_back(ThetaStep{mu, 0, 0});
        HeckeElement t = theta(mu);
        memo.emplace(mu, t);
        return t;
    }
    int a = 0;
    if (policy == ThetaPolicy::SmallestIndex) {
        for (int i = 1; i <= weyl_.numGenerators(); ++i)
            if (cartan_.simplePairing(i, mu) < 0) { a = i; break; }
    } else {
        for (int i = weyl_.numGenerators(); i >= 1; --i)
            if (cartan_.simplePairing(i, mu) < 0) { a = i; break; }
    }
    if (a == 0) throw std::logic_error("thetaConstruct: no descent for non-dominant input");
    long long d = -cartan_.simplePairing(a, mu);
    trace.push_back(ThetaStep{mu, a, d});
    Coweight sam = weyl_.act(weyl_.simpleReflection(a), mu);
    Coweight av = cartan_.simpleCoroot(a).asCoweight();
    // theta_mu = T_a theta_{w_a mu} T_a^{-1} - (v^{-2}-1)(theta_{w_a mu} + ... ) T_a^{-1}
    HeckeElement head = multiply(tElement(weyl_.simpleReflection(a)), thetaBuild(sam, policy, budget, used, trace, memo));
    HeckeElement corr;
    Coweight cur = sam;
    for (long long j = 0; j < d; ++j) {
        corr = add(corr, thetaBuild(cur, policy, budget, used, trace, memo));
        cur = cur - av;
    }
    HeckeElement expr = sub(head, scale(corr, qMinusOne()));
    expr = multiply(expr, tGenInverse(a));
    memo.emplace(mu, expr);
    return expr;
}

ThetaResult HeckeAlgebra::thetaConstruct(const Coweight& mu, ThetaPolicy policy, long long budget) const {
    if (!cartan_.inTitsCone(mu)) throw std::invalid_argument("thetaConstruct: input outside Tits cone");
    ThetaResult res;
    std::map<Coweight, HeckeElement> memo;
    res.element = thetaBuild(mu, policy, budget, res.budgetUsed, res.trace, memo);
    res.verified = (res.element == theta(mu));
    return res;
}

} // namespace affsat

#include "affsat/weyl.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace affsat {

WeylGroup::WeylGroup(const CartanData& cartan) : cartan_(cartan) {
    int l = cartan_.rank();
    id_.fin.assign(static_cast<size_t>(l), IVec(static_cast<size_t>(l), 0));
    for (int i = 0; i < l; ++i) id_.fin[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
    id_.trans.assign(static_cast<size_t>(l), 0);

    const auto& A = cartan_.cartanMatrix();
    for (int i = 1; i <= l; ++i) {
        WeylElement s = id_;
        // x -> x - <a_i, x> a_i^vee on coroot coordinates
        for (int j = 0; j < l; ++j)
            s.fin[static_cast<size_t>(i - 1)][static_cast<size_t>(j)] -=
                A[static_cast<size_t>(i - 1)][static_cast<size_t>(j)];
        gens_.push_back(s);
    }
    // affine generator: t_{-theta^vee} o (reflection in theta)
    {
        WeylElement s = id_;
        const IVec& th = cartan_.thetaCoords();
        for (int j = 0; j < l; ++j) {
            long long p = 0;
            for (int i = 0; i < l; ++i) p += th[static_cast<size_t>(i)] * A[static_cast<size_t>(i)][static_cast<size_t>(j)];
            for (int i = 0; i < l; ++i)
                s.fin[static_cast<size_t>(i)][static_cast<size_t>(j)] -= p * th[static_cast<size_t>(i)];
        }
        for (int j = 0; j < l; ++j) s.trans[static_cast<size_t>(j)] = -th[static_cast<size_t>(j)];
        gens_.push_back(s);
        // validate against the reflection formula on a spanning set
        std::vector<Coweight> span{cartan_.minimalImaginaryCoroot(), cartan_.derivationCoweight()};
        for (int i = 1; i <= l; ++i) span.push_back(cartan_.simpleCoroot(i).asCoweight());
        RootAff aAff = cartan_.simpleRoot(l + 1);
        Coweight aVee = cartan_.simpleCoroot(l + 1).asCoweight();
        for (const auto& x : span) {
            Coweight want = x - aVee.scaled(cartan_.pairing(aAff, x));
            if (!(act(s, x) == want)) throw std::logic_error("affine reflection failed validation");
        }
    }
}

WeylElement WeylGroup::identity() const { return id_; }

WeylElement WeylGroup::simpleReflection(int i) const {
    if (i < 1 || i > numGenerators()) throw std::invalid_argument("simpleReflection: index out of range");
    return gens_[static_cast<size_t>(i - 1)];
}

WeylElement WeylGroup::reflection(const RootAff& a) const {
    if (!cartan_.isRealRoot(a)) throw std::invalid_argument("reflection: not a real root");
    int l = cartan_.rank();
    const auto& A = cartan_.cartanMatrix();
    // reflection in alpha + m delta is t_{m alpha^vee} composed after the
    // finite reflection in alpha
    WeylElement s = id_;
    for (int j = 0; j < l; ++j) {
        long long p = 0;
        for (int i = 0; i < l; ++i)
            p += a.finite[static_cast<size_t>(i)] * A[static_cast<size_t>(i)][static_cast<size_t>(j)];
        for (int i = 0; i < l; ++i)
            s.fin[static_cast<size_t>(i)][static_cast<size_t>(j)] -= p * a.finite[static_cast<size_t>(i)];
    }
    for (int j = 0; j < l; ++j) s.trans[static_cast<size_t>(j)] = a.delta * a.finite[static_cast<size_t>(j)];
    // sanity: involution and the reflection formula on a spanning set
    Coweight av = cartan_.corootOf(a).asCoweight();
    std::vector<Coweight> span{cartan_.minimalImaginaryCoroot(), cartan_.derivationCoweight()};
    for (int i = 1; i <= l; ++i) span.push_back(cartan_.simpleCoroot(i).asCoweight());
    for (const auto& x : span) {
        Coweight want = x - av.scaled(cartan_.pairing(a, x));
        if (!(act(s, x) == want)) throw std::logic_error("reflection: formula validation failed");
    }
    return s;
}

IVec WeylGroup::applyFin(const std::vector<IVec>& m, const IVec& x) const {
    int l = cartan_.rank();
    IVec r(static_cast<size_t>(l), 0);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j)
            r[static_cast<size_t>(i)] += m[static_cast<size_t>(i)][static_cast<size_t>(j)] * x[static_cast<size_t>(j)];
    return r;
}

std::vector<IVec> WeylGroup::matMul(const std::vector<IVec>& a, const std::vector<IVec>& b) const {
    int l = cartan_.rank();
    std::vector<IVec> r(static_cast<size_t>(l), IVec(static_cast<size_t>(l), 0));
    for (int i = 0; i < l; ++i)
        for (int k = 0; k < l; ++k) {
            long long aik = a[static_cast<size_t>(i)][static_cast<size_t>(k)];
            if (aik == 0) continue;
            for (int j = 0; j < l; ++j)
                r[static_cast<size_t>(i)][static_cast<size_t>(j)] += aik * b[static_cast<size_t>(k)][static_cast<size_t>(j)];
        }
    return r;
}

std::vector<IVec> WeylGroup::matInv(const std::vector<IVec>& a) const {
    int l = cartan_.rank();
    std::vector<std::vector<BigRat>> m(static_cast<size_t>(l), std::vector<BigRat>(static_cast<size_t>(2 * l), BigRat(0)));
    for (int i = 0; i < l; ++i) {
        for (int j = 0; j < l; ++j) m[static_cast<size_t>(i)][static_cast<size_t>(j)] = BigRat(a[static_cast<size_t>(i)][static_cast<size_t>(j)]);
        m[static_cast<size_t>(i)][static_cast<size_t>(l + i)] = BigRat(1);
    }
    for (int col = 0; col < l; ++col) {
        int piv = -1;
        for (int r = col; r < l; ++r)
            if (m[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) { piv = r; break; }
        if (piv < 0) throw std::logic_error("matInv: singular matrix");
        std::swap(m[static_cast<size_t>(piv)], m[static_cast<size_t>(col)]);
        BigRat d = m[static_cast<size_t>(col)][static_cast<size_t>(col)];
        for (auto& x : m[static_cast<size_t>(col)]) x /= d;
        for (int r = 0; r < l; ++r) {
            if (r == col) continue;
            BigRat f = m[static_cast<size_t>(r)][static_cast<size_t>(col)];
            if (f == 0) continue;
            for (int j = 0; j < 2 * l; ++j)
                m[static_cast<size_t>(r)][static_cast<size_t>(j)] -= f * m[static_cast<size_t>(col)][static_cast<size_t>(j)];
        }
    }
    std::vector<IVec> inv(static_cast<size_t>(l), IVec(static_cast<size_t>(l), 0));
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) {
            BigRat x = m[static_cast<size_t>(i)][static_cast<size_t>(l + j)];
            if (boost::multiprecision::denominator(x) != 1) throw std::logic_error("matInv: non-integer inverse");
            inv[static_cast<size_t>(i)][static_cast<size_t>(j)] = static_cast<long long>(boost::multiprecision::numerator(x));
        }
    return inv;
}

WeylElement WeylGroup::multiply(const WeylElement& a, const WeylElement& b) const {
    WeylElement r;
    r.fin = matMul(a.fin, b.fin);
    IVec shifted = applyFin(a.fin, b.trans);
    r.trans.resize(shifted.size());
    for (size_t i = 0; i < shifted.size(); ++i) r.trans[i] = a.trans[i] + shifted[i];
    return r;
}

WeylElement WeylGroup::inverse(const WeylElement& a) const {
    WeylElement r;
    r.fin = matInv(a.fin);
    IVec t = applyFin(r.fin, a.trans);
    r.trans.resize(t.size());
    for (size_t i = 0; i < t.size(); ++i) r.trans[i] = -t[i];
    return r;
}

WeylElement WeylGroup::fromWord(const std::vector<int>& word) const {
    WeylElement w = id_;
    for (int i : word) w = multiply(w, simpleReflection(i));
    return w;
}

Coweight WeylGroup::act(const WeylElement& w, const Coweight& cw) const {
    IVec x = applyFin(w.fin, cw.finite);
    long long r = cw.d;
    long long m = cw.c;
    // t_H per (ff): c-coefficient picks up (x, H) - r (H, H)/2
    long long xH = cartan_.symmetricForm(x, w.trans);
    long long HH = cartan_.symmetricForm(w.trans, w.trans);
    Coweight out;
    out.c = m + xH - r * (HH / 2);
    out.finite.resize(x.size());
    for (size_t i = 0; i < x.size(); ++i) out.finite[i] = x[i] - r * w.trans[i];
    out.d = r;
    return out;
}

RootAff WeylGroup::actOnRoot(const WeylElement& w, const RootAff& root) const {
    IVec beta = applyFin(w.fin, root.finite); // same matrix on root coordinates (simply laced)
    long long m = root.delta + cartan_.finitePairing(beta, w.trans);
    return RootAff{beta, m};
}

CorootAff WeylGroup::actOnCoroot(const WeylElement& w, const CorootAff& c) const {
    Coweight img = act(w, c.asCoweight());
    return CorootAff{img.finite, img.c};
}

long long WeylGroup::length(const WeylElement& w) const {
    long long total = 0;
    for (const auto& beta : cartan_.finitePositiveRoots()) {
        IVec gamma = applyFin(w.fin, beta);
        long long p = cartan_.finitePairing(gamma, w.trans);
        if (CartanData::allNonNegative(gamma)) {
            total += p < 0 ? -p : p;
        } else {
            long long q = p - 1;
            total += q < 0 ? -q : q;
        }
    }
    return total;
}

long long WeylGroup::lengthByBfs(const WeylElement& w, long long cap) const {
    if (w == id_) return 0;
    std::set<WeylElement> seen{id_};
    std::vector<WeylElement> frontier{id_};
    for (long long dist = 1; dist <= cap; ++dist) {
        std::vector<WeylElement> next;
        for (const auto& x : frontier)
            for (int i = 1; i <= numGenerators(); ++i) {
                WeylElement y = multiply(x, simpleReflection(i));
                if (y == w) return dist;
                if (seen.insert(y).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    throw std::runtime_error("lengthByBfs: cap exceeded");
}

std::vector<RootAff> WeylGroup::inversionSet(const WeylElement& w) const {
    std::vector<RootAff> out;
    for (const auto& beta : cartan_.finitePositiveRoots()) {
        IVec gamma = applyFin(w.fin, beta);
        long long p = cartan_.finitePairing(gamma, w.trans);
        IVec negBeta(beta);
        for (auto& x : negBeta) x = -x;
        if (CartanData::allNonNegative(gamma)) {
            for (long long m = 0; m < -p; ++m) out.push_back(RootAff{beta, m});
            for (long long m = 1; m <= p; ++m) out.push_back(RootAff{negBeta, m});
        } else {
            for (long long m = 0; m <= -p; ++m) out.push_back(RootAff{beta, m});
            for (long long m = 1; m <= p - 1; ++m) out.push_back(RootAff{negBeta, m});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> WeylGroup::reducedWord(const WeylElement& w) const {
    {
        std::lock_guard<std::mutex> lock(wordMutex_);
        auto it = wordCache_.find(w);
        if (it != wordCache_.end()) return it->second;
    }
    std::vector<int> word;
    WeylElement cur = w;
    long long len = length(cur);
    while (len > 0) {
        bool found = false;
        for (int i = 1; i <= numGenerators(); ++i) {
            WeylElement nxt = multiply(cur, simpleReflection(i));
            long long ln = length(nxt);
            if (ln == len - 1) {
                word.push_back(i);
                cur = nxt;
                len = ln;
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("reducedWord: no descent found");
    }
    std::reverse(word.begin(), word.end());
    std::lock_guard<std::mutex> lock(wordMutex_);
    wordCache_[w] = word;
    return word;
}

bool WeylGroup::bruhatLeq(const WeylElement& u, const WeylElement& w) const {
    long long lu = length(u), lw = length(w);
    if (lu > lw) return false;
    if (u == w) return true;
    std::vector<int> word = reducedWord(w);
    // subword search with backtracking: consume word left to right, optionally
    // taking a letter as the next letter of a reduced word for the target
    std::map<std::pair<size_t, WeylElement>, bool> memo;
    std::function<bool(size_t, const WeylElement&, long long)> go =
        [&](size_t pos, const WeylElement& target, long long tlen) -> bool {
        if (tlen == 0) return true;
        if (static_cast<long long>(word.size() - pos) < tlen) return false;
        auto key = std::make_pair(pos, target);
        auto mit = memo.find(key);
        if (mit != memo.end()) return mit->second;
        bool ok = go(pos + 1, target, tlen); // skip letter
        if (!ok) {
            WeylElement st = multiply(simpleReflection(word[pos]), target);
            if (length(st) == tlen - 1) ok = go(pos + 1, st, tlen - 1); // take letter
        }
        memo[key] = ok;
        return ok;
    };
    return go(0, u, lu);
}

std::vector<std::vector<WeylElement>> WeylGroup::bfsEnumerate(long long L) const {
    std::vector<std::vector<WeylElement>> shells;
    forEachShell(L, [&](long long, const std::vector<WeylElement>& shell) {
        shells.push_back(shell);
        return true;
    });
    return shells;
}

void WeylGroup::forEachShell(
    long long maxL, const std::function<bool(long long, const std::vector<WeylElement>&)>& fn) const {
    std::set<WeylElement> seen{id_};
    std::vector<WeylElement> frontier{id_};
    if (!fn(0, frontier)) return;
    for (long long s = 1; s <= maxL; ++s) {
        std::set<WeylElement> shell;
        for (const auto& x : frontier)
            for (int i = 1; i <= numGenerators(); ++i) {
                WeylElement y = multiply(x, simpleReflection(i));
                if (!seen.count(y)) shell.insert(y);
            }
        frontier.assign(shell.begin(), shell.end());
        seen.insert(shell.begin(), shell.end());
        if (!fn(s, frontier)) return;
    }
}

std::pair<Coweight, WeylElement> WeylGroup::dominantRepresentative(const Coweight& cw) const {
    if (!cartan_.inTitsCone(cw)) throw std::invalid_argument("dominantRepresentative: outside Tits cone");
    Coweight cur = cw;
    WeylElement w = id_;
    long long guard = 0;
    for (;;) {
        int neg = 0;
        for (int i = 1; i <= numGenerators(); ++i)
            if (cartan_.simplePairing(i, cur) < 0) { neg = i; break; }
        if (neg == 0) break;
        cur = act(simpleReflection(neg), cur);
        w = multiply(w, simpleReflection(neg)); // cw = w(cur) is maintained
        if (++guard > 100000) throw std::runtime_error("dominantRepresentative: did not terminate");
    }
    // strip right descents that lie in the stabilizer of the dominant form,
    // leaving the minimal-length coset representative
    bool reduced = false;
    while (!reduced) {
        reduced = true;
        long long lw = length(w);
        for (int i = 1; i <= numGenerators(); ++i) {
            if (cartan_.simplePairing(i, cur) != 0) continue;
            WeylElement cand = multiply(w, simpleReflection(i));
            if (length(cand) < lw) {
                w = cand;
                reduced = false;
                break;
            }
        }
    }
    return {cur, w};
}

StabilizerData WeylGroup::stabilizerData(const Coweight& lam, long long enumCap) const {
    if (!cartan_.isDominant(lam)) throw std::invalid_argument("stabilizerData: non-dominant input");
    StabilizerData out;
    for (int i = 1; i <= numGenerators(); ++i)
        if (cartan_.simplePairing(i, lam) == 0) out.generators.push_back(i);
    // untwisted affine diagram: every proper parabolic is finite
    out.finite = static_cast<int>(out.generators.size()) < numGenerators();
    if (out.finite) {
        std::set<WeylElement> seen{id_};
        std::vector<WeylElement> frontier{id_};
        std::vector<BigInt> counts{BigInt(1)};
        long long shellIdx = 0;
        while (!frontier.empty()) {
            std::vector<WeylElement> next;
            for (const auto& x : frontier)
                for (int i : out.generators) {
                    WeylElement y = multiply(x, simpleReflection(i));
                    if (seen.insert(y).second) next.push_back(y);
                }
            if (static_cast<long long>(seen.size()) > enumCap)
                throw std::runtime_error("stabilizerData: enumeration cap exceeded");
            ++shellIdx;
            if (!next.empty()) counts.push_back(BigInt(next.size()));
            frontier = std::move(next);
        }
        std::vector<BigInt> cs;
        for (size_t s = 0; s < counts.size(); ++s) {
            cs.resize(2 * s + 1, BigInt(0));
            cs[2 * s] = counts[s];
        }
        out.poincare = VPoly::fromCoeffs(std::move(cs));
        (void)shellIdx;
    }
    return out;
}

std::vector<WeylElement> WeylGroup::minimalCosetReps(const Coweight& lam, long long L) const {
    StabilizerData st = stabilizerData(lam);
    std::vector<WeylElement> reps;
    auto shells = bfsEnumerate(L);
    for (size_t s = 0; s < shells.size(); ++s)
        for (const auto& w : shells[s]) {
            bool minimal = true;
            for (int i : st.generators)
                if (length(multiply(w, simpleReflection(i))) < static_cast<long long>(s)) {
                    minimal = false;
                    break;
                }
            if (minimal) reps.push_back(w);
        }
    return reps;
}

ExtendedElement WeylGroup::extIdentity() const {
    return ExtendedElement{id_, cartan_.zeroCoweight()};
}

ExtendedElement WeylGroup::extFromParts(const WeylElement& w, const Coweight& cw) const {
    return ExtendedElement{w, cw};
}

ExtendedElement WeylGroup::extMultiply(const ExtendedElement& a, const ExtendedElement& b) const {
    // (pi^l1 w1)(pi^l2 w2) = pi^{l1 + w1 l2} (w1 w2)
    return ExtendedElement{multiply(a.weyl, b.weyl), a.coweight + act(a.weyl, b.coweight)};
}

ExtendedElement WeylGroup::extInverse(const ExtendedElement& a) const {
    WeylElement wi = inverse(a.weyl);
    return ExtendedElement{wi, -act(wi, a.coweight)};
}

bool WeylGroup::preceq(const ExtendedElement& x, const ExtendedElement& y) const {
    if (cartan_.dominanceLeq(x.coweight, y.coweight)) {
        if (!(x.coweight == y.coweight)) return true;
        return bruhatLeq(x.weyl, y.weyl);
    }
    return false;
}

} // namespace affsat

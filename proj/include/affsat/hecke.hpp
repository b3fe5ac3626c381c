#pragma once

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "affsat/cartan.hpp"
#include "affsat/vpoly.hpp"
#include "affsat/weyl.hpp"

namespace affsat {

// Element of the Bernstein-presented algebra in normal form
// sum coeff * Theta_lambda T_w; equality is map equality.
class HeckeElement {
public:
    using Key = std::pair<Coweight, WeylElement>;
    std::map<Key, VCoeff> terms;

    bool isZero() const { return terms.empty(); }
    bool operator==(const HeckeElement& o) const { return terms == o.terms; }
    bool operator!=(const HeckeElement& o) const { return !(*this == o); }

    void addTerm(const Coweight& theta, const WeylElement& t, const VCoeff& c) {
        if (c.isZero()) return;
        Key k{theta, t};
        auto it = terms.find(k);
        if (it == terms.end())
            terms.emplace(std::move(k), c);
        else {
            it->second = it->second + c;
            if (it->second.isZero()) terms.erase(it);
        }
    }
};

enum class ThetaPolicy { SmallestIndex, LargestIndex };

struct ThetaStep {
    Coweight mu;
    int chosenRoot; // 0 at dominant leaves
    long long drop; // -<a, mu>

    bool operator==(const ThetaStep& o) const {
        return mu == o.mu && chosenRoot == o.chosenRoot && drop == o.drop;
    }
};

struct ThetaResult {
    HeckeElement element; // normal form of the assembled expression
    bool verified = false;
    std::vector<ThetaStep> trace;
    long long budgetUsed = 0;
};

class HeckeAlgebra {
public:
    explicit HeckeAlgebra(const WeylGroup& weyl) : weyl_(weyl), cartan_(weyl.cartan()) {}

    const WeylGroup& weyl() const { return weyl_; }

    HeckeElement zero() const { return HeckeElement{}; }
    HeckeElement one() const;
    HeckeElement theta(const Coweight& lam) const;
    HeckeElement tWord(const std::vector<int>& word) const; // product of generators
    HeckeElement tElement(const WeylElement& w) const;      // T_w
    HeckeElement tGenInverse(int i) const;                  // T_a^{-1} = v^2 T_a + (v^2-1)
    HeckeElement monomial(const Coweight& lam, const WeylElement& w, VCoeff c) const;
    HeckeElement scale(const HeckeElement& x, const VCoeff& c) const;
    HeckeElement add(const HeckeElement& x, const HeckeElement& y) const;
    HeckeElement sub(const HeckeElement& x, const HeckeElement& y) const;

    HeckeElement multiply(const HeckeElement& x, const HeckeElement& y) const;

    // the finite sum on the right of the Bernstein relation:
    // T_a Theta_lam - Theta_{w_a lam} T_a
    HeckeElement bernsteinCommute(int i, const Coweight& lam) const;

    std::map<long long, HeckeElement> grade(const HeckeElement& x) const;
    bool isInHPlus(const HeckeElement& x) const;

    ThetaResult thetaConstruct(const Coweight& mu, ThetaPolicy policy = ThetaPolicy::SmallestIndex,
                               long long budget = 100000) const;

private:
    const WeylGroup& weyl_;
    const CartanData& cartan_;
    mutable std::mutex cacheMutex_;
    mutable std::map<std::pair<WeylElement, Coweight>, HeckeElement> normalOrderCache_;

    HeckeElement mulByTGen(const HeckeElement& x, int i) const;
    // normal form of T_x * Theta_mu
    HeckeElement normalOrderTTheta(const WeylElement& x, const Coweight& mu) const;

    HeckeElement thetaBuild(const Coweight& mu, ThetaPolicy policy, long long budget,
                            long long& used, std::vector<ThetaStep>& trace,
                            std::map<Coweight, HeckeElement>& memo) const;
};

} // namespace affsat

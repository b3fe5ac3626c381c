#pragma once

#include <optional>
#include <string>
#include <vector>

#include "affsat/bigint.hpp"

namespace affsat {

// Dense polynomial in the formal variable v, integer coefficients,
// ascending degree, no trailing zeros.
class VPoly {
public:
    VPoly() = default;
    explicit VPoly(BigInt constant);
    static VPoly monomial(BigInt coeff, int degree);

    bool isZero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    // index of lowest nonzero coefficient; -1 for the zero polynomial
    int order() const;
    const BigInt& coeff(int k) const;
    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    VPoly operator+(const VPoly& o) const;
    VPoly operator-(const VPoly& o) const;
    VPoly operator*(const VPoly& o) const;
    VPoly operator-() const;
    bool operator==(const VPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const VPoly& o) const { return !(*this == o); }

    // quotient when the division is exact; throws otherwise
    VPoly exactDiv(const VPoly& d) const;

    BigInt content() const;
    VPoly primitivePart() const;
    static VPoly gcd(const VPoly& a, const VPoly& b);

    bool isMonomial() const;

    // substitute v^2 -> x; fails when an odd power is present
    std::optional<std::vector<BigInt>> asEvenPowers() const;

    std::string str(const std::string& var = "v") const;

    static VPoly fromCoeffs(std::vector<BigInt> cs);

private:
    std::vector<BigInt> coeffs_;
    void normalize();
};

// Ratio num/den of integer polynomials in v, canonical form:
// gcd-reduced, coprime integer contents, positive leading denominator.
class VCoeff {
public:
    VCoeff() : num_(), den_(VPoly(BigInt(1))) {}
    VCoeff(VPoly num, VPoly den);
    explicit VCoeff(BigInt n) : num_(VPoly(std::move(n))), den_(VPoly(BigInt(1))) {}
    static VCoeff fromInt(long long n) { return VCoeff(BigInt(n)); }
    // coeff * v^k, k may be negative
    static VCoeff vPower(int k, BigInt coeff = BigInt(1));
    static VCoeff one() { return VCoeff(BigInt(1)); }
    static VCoeff zero() { return VCoeff(); }

    const VPoly& num() const { return num_; }
    const VPoly& den() const { return den_; }

    bool isZero() const { return num_.isZero(); }
    bool isOne() const;

    VCoeff operator+(const VCoeff& o) const;
    VCoeff operator-(const VCoeff& o) const;
    VCoeff operator*(const VCoeff& o) const;
    VCoeff operator/(const VCoeff& o) const;
    VCoeff operator-() const;
    bool operator==(const VCoeff& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const VCoeff& o) const { return !(*this == o); }

    // order of vanishing at v = 0 (num order minus den order); zero -> large sentinel
    int vOrder() const;

    // Laurent polynomial in v, i.e. denominator is a plain power of v
    bool isVFinite() const;
    // lies in C[v^2]
    bool isPolyInVSquared() const;
    // evaluation at v^2 = value; requires v-finiteness and even support
    std::optional<BigRat> evalAtVSquared(const BigRat& value) const;

    std::string str() const;

    static constexpr int kInfiniteOrder = 1 << 28;

private:
    VPoly num_, den_;
    void reduce();
};

} // namespace affsat

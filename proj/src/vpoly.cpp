#include "affsat/vpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace affsat {

VPoly::VPoly(BigInt constant) {
    if (constant != 0) coeffs_.push_back(std::move(constant));
}

VPoly VPoly::monomial(BigInt coeff, int degree) {
    VPoly p;
    if (coeff == 0) return p;
    p.coeffs_.assign(static_cast<size_t>(degree) + 1, BigInt(0));
    p.coeffs_.back() = std::move(coeff);
    return p;
}

VPoly VPoly::fromCoeffs(std::vector<BigInt> cs) {
    VPoly p;
    p.coeffs_ = std::move(cs);
    p.normalize();
    return p;
}

void VPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

int VPoly::order() const {
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return static_cast<int>(i);
    return -1;
}

const BigInt& VPoly::coeff(int k) const {
    static const BigInt zero(0);
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return zero;
    return coeffs_[static_cast<size_t>(k)];
}

VPoly VPoly::operator+(const VPoly& o) const {
    std::vector<BigInt> out(std::max(coeffs_.size(), o.coeffs_.size()), BigInt(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) out[i] += o.coeffs_[i];
    return fromCoeffs(std::move(out));
}

VPoly VPoly::operator-(const VPoly& o) const { return *this + (-o); }

VPoly VPoly::operator-() const {
    VPoly p(*this);
    for (auto& c : p.coeffs_) c = -c;
    return p;
}

VPoly VPoly::operator*(const VPoly& o) const {
    if (isZero() || o.isZero()) return VPoly();
    std::vector<BigInt> out(coeffs_.size() + o.coeffs_.size() - 1, BigInt(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            if (o.coeffs_[j] != 0) out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return fromCoeffs(std::move(out));
}

VPoly VPoly::exactDiv(const VPoly& d) const {
    if (d.isZero()) throw std::invalid_argument("VPoly::exactDiv by zero");
    if (isZero()) return VPoly();
    std::vector<BigInt> rem = coeffs_;
    int dd = d.degree();
    int qd = degree() - dd;
    if (qd < 0) throw std::invalid_argument("VPoly::exactDiv not divisible (degree)");
    std::vector<BigInt> q(static_cast<size_t>(qd) + 1, BigInt(0));
    const BigInt& lead = d.coeffs_.back();
    for (int k = qd; k >= 0; --k) {
        BigInt top = rem[static_cast<size_t>(k + dd)];
        if (top == 0) continue;
        if (top % lead != 0) throw std::invalid_argument("VPoly::exactDiv not divisible");
        BigInt c = top / lead;
        q[static_cast<size_t>(k)] = c;
        for (int i = 0; i <= dd; ++i)
            rem[static_cast<size_t>(k + i)] -= c * d.coeffs_[static_cast<size_t>(i)];
    }
    for (const auto& c : rem)
        if (c != 0) throw std::invalid_argument("VPoly::exactDiv nonzero remainder");
    return fromCoeffs(std::move(q));
}

BigInt VPoly::content() const {
    BigInt g(0);
    for (const auto& c : coeffs_) g = boost::multiprecision::gcd(g, c);
    return g;
}

VPoly VPoly::primitivePart() const {
    if (isZero()) return VPoly();
    BigInt g = content();
    if (coeffs_.back() < 0) g = -g;
    VPoly p(*this);
    for (auto& c : p.coeffs_) c /= g;
    return p;
}

// primitive pseudo-remainder sequence
VPoly VPoly::gcd(const VPoly& a, const VPoly& b) {
    VPoly p = a.primitivePart(), q = b.primitivePart();
    if (p.isZero()) return q;
    if (q.isZero()) return p;
    if (p.degree() < q.degree()) std::swap(p, q);
    while (!q.isZero()) {
        // pseudo-remainder of p by q
        VPoly r = p;
        int dq = q.degree();
        const BigInt& lq = q.coeffs_.back();
        while (!r.isZero() && r.degree() >= dq) {
            int shift = r.degree() - dq;
            BigInt lr = r.coeffs_.back();
            // scale r so the leading term cancels exactly
            VPoly scaled = r;
            for (auto& c : scaled.coeffs_) c *= lq;
            VPoly sub = q * VPoly::monomial(lr, shift);
            r = scaled - sub;
        }
        p = q;
        q = r.primitivePart();
    }
    return p.primitivePart();
}

bool VPoly::isMonomial() const {
    if (isZero()) return false;
    return order() == degree();
}

std::optional<std::vector<BigInt>> VPoly::asEvenPowers() const {
    std::vector<BigInt> out;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (i % 2 != 0) return std::nullopt;
        if (out.size() < i / 2 + 1) out.resize(i / 2 + 1, BigInt(0));
        out[i / 2] = coeffs_[i];
    }
    return out;
}

std::string VPoly::str(const std::string& var) const {
    if (isZero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        const BigInt& c = coeffs_[i];
        if (c == 0) continue;
        BigInt a = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool unitCoeff = (a == 1) && i > 0;
        if (!unitCoeff) os << a.str();
        if (i > 0) {
            if (!unitCoeff) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------

VCoeff::VCoeff(VPoly num, VPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.isZero()) throw std::invalid_argument("VCoeff: zero denominator");
    reduce();
}

VCoeff VCoeff::vPower(int k, BigInt coeff) {
    if (k >= 0) return VCoeff(VPoly::monomial(std::move(coeff), k), VPoly(BigInt(1)));
    return VCoeff(VPoly(std::move(coeff)), VPoly::monomial(BigInt(1), -k));
}

void VCoeff::reduce() {
    if (num_.isZero()) {
        den_ = VPoly(BigInt(1));
        return;
    }
    VPoly g = VPoly::gcd(num_, den_);
    if (!g.isZero() && g.degree() >= 0 && !(g.degree() == 0 && g.coeff(0) == 1)) {
        num_ = num_.exactDiv(g);
        den_ = den_.exactDiv(g);
    }
    BigInt cn = num_.content();
    BigInt cd = den_.content();
    BigInt g2 = boost::multiprecision::gcd(cn, cd);
    if (g2 > 1) {
        num_ = num_.exactDiv(VPoly(g2));
        den_ = den_.exactDiv(VPoly(g2));
    }
    if (den_.coeffs().back() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

bool VCoeff::isOne() const {
    return den_.degree() == 0 && den_.coeff(0) == 1 && num_.degree() == 0 && num_.coeff(0) == 1;
}

VCoeff VCoeff::operator+(const VCoeff& o) const {
    return VCoeff(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

VCoeff VCoeff::operator-(const VCoeff& o) const {
    return VCoeff(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

VCoeff VCoeff::operator*(const VCoeff& o) const {
    if (isZero() || o.isZero()) return VCoeff();
    return VCoeff(num_ * o.num_, den_ * o.den_);
}

VCoeff VCoeff::operator/(const VCoeff& o) const {
    if (o.isZero()) throw std::invalid_argument("VCoeff: division by zero");
    return VCoeff(num_ * o.den_, den_ * o.num_);
}

VCoeff VCoeff::operator-() const {
    VCoeff r(*this);
    r.num_ = -r.num_;
    return r;
}

int VCoeff::vOrder() const {
    if (isZero()) return kInfiniteOrder;
    return num_.order() - den_.order();
}

bool VCoeff::isVFinite() const {
    if (isZero()) return true;
    return den_.isMonomial() && den_.coeffs().back() == 1;
}

bool VCoeff::isPolyInVSquared() const {
    if (isZero()) return true;
    if (!(den_.degree() == 0 && den_.coeff(0) == 1)) return false;
    return num_.asEvenPowers().has_value();
}

std::optional<BigRat> VCoeff::evalAtVSquared(const BigRat& value) const {
    if (isZero()) return BigRat(0);
    if (!isVFinite()) return std::nullopt;
    int shift = den_.degree(); // den = v^shift
    BigRat acc(0);
    for (int i = 0; i <= num_.degree(); ++i) {
        if (num_.coeff(i) == 0) continue;
        int e = i - shift;
        if (e % 2 != 0) return std::nullopt;
        int h = e / 2;
        BigRat term(num_.coeff(i));
        if (h >= 0) {
            for (int k = 0; k < h; ++k) term *= value;
        } else {
            for (int k = 0; k < -h; ++k) term /= value;
        }
        acc += term;
    }
    return acc;
}

std::string VCoeff::str() const {
    if (den_.degree() == 0 && den_.coeff(0) == 1) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

} // namespace affsat

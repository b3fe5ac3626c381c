#include "affsat/cartan.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace affsat {

namespace {

std::string vecStr(const IVec& v) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i];
    }
    os << "]";
    return os.str();
}

IVec addVec(const IVec& a, const IVec& b) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

} // namespace

Coweight Coweight::operator+(const Coweight& o) const {
    Coweight r{c + o.c, addVec(finite, o.finite), d + o.d};
    return r;
}

Coweight Coweight::operator-(const Coweight& o) const { return *this + (-o); }

Coweight Coweight::operator-() const {
    Coweight r{-c, finite, -d};
    for (auto& x : r.finite) x = -x;
    return r;
}

Coweight Coweight::scaled(long long n) const {
    Coweight r{c * n, finite, d * n};
    for (auto& x : r.finite) x *= n;
    return r;
}

bool Coweight::isZero() const {
    if (c != 0 || d != 0) return false;
    for (auto x : finite)
        if (x != 0) return false;
    return true;
}

std::string Coweight::str() const {
    std::ostringstream os;
    os << "(" << c << "," << vecStr(finite) << "," << d << ")";
    return os.str();
}

RootAff RootAff::operator-() const {
    RootAff r{finite, -delta};
    for (auto& x : r.finite) x = -x;
    return r;
}

std::string RootAff::str() const {
    std::ostringstream os;
    os << vecStr(finite) << "+" << delta << "d";
    return os.str();
}

CorootAff CorootAff::operator-() const {
    CorootAff r{finite, -cMult};
    for (auto& x : r.finite) x = -x;
    return r;
}

Coweight CorootAff::asCoweight() const { return Coweight{cMult, finite, 0}; }

std::string CorootAff::str() const {
    std::ostringstream os;
    os << vecStr(finite) << "+" << cMult << "c";
    return os.str();
}

// ---------------------------------------------------------------------------

CartanData CartanData::fromType(const std::string& typeName) {
    if (typeName.size() < 2) throw std::invalid_argument("bad type string: " + typeName);
    char fam = typeName[0];
    int rank = std::stoi(typeName.substr(1));
    CartanData cd;
    cd.typeName_ = typeName;
    cd.rank_ = rank;
    auto link = [&](std::vector<IVec>& m, int i, int j) {
        m[static_cast<size_t>(i)][static_cast<size_t>(j)] = -1;
        m[static_cast<size_t>(j)][static_cast<size_t>(i)] = -1;
    };
    std::vector<IVec> m(static_cast<size_t>(rank), IVec(static_cast<size_t>(rank), 0));
    for (int i = 0; i < rank; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(i)] = 2;
    IVec theta(static_cast<size_t>(rank), 0);
    switch (fam) {
    case 'A': {
        if (rank < 1) throw std::invalid_argument("A_l needs l >= 1");
        cd.family_ = Family::A;
        for (int i = 0; i + 1 < rank; ++i) link(m, i, i + 1);
        for (int i = 0; i < rank; ++i) theta[static_cast<size_t>(i)] = 1;
        break;
    }
    case 'D': {
        if (rank < 4) throw std::invalid_argument("D_l needs l >= 4");
        cd.family_ = Family::D;
        for (int i = 0; i + 1 < rank - 1; ++i) link(m, i, i + 1);
        link(m, rank - 3, rank - 1);
        theta[0] = 1;
        for (int i = 1; i <= rank - 3; ++i) theta[static_cast<size_t>(i)] = 2;
        theta[static_cast<size_t>(rank - 2)] = 1;
        theta[static_cast<size_t>(rank - 1)] = 1;
        break;
    }
    case 'E': {
        cd.family_ = Family::E;
        // Bourbaki numbering: chain 1-3-4-5-...-rank, node 2 attached to 4
        if (rank < 6 || rank > 8) throw std::invalid_argument("E_l needs l in {6,7,8}");
        link(m, 0, 2);
        link(m, 1, 3);
        for (int i = 2; i + 1 < rank; ++i) link(m, i, i + 1);
        if (rank == 6) theta = {1, 2, 2, 3, 2, 1};
        if (rank == 7) theta = {2, 2, 3, 4, 3, 2, 1};
        if (rank == 8) theta = {2, 3, 4, 6, 5, 4, 3, 2};
        break;
    }
    default:
        throw std::invalid_argument("unsupported family: " + typeName);
    }
    cd.cartan_ = std::move(m);
    cd.theta_ = std::move(theta);
    cd.coxeter_ = heightVec(cd.theta_) + 1;
    cd.buildRoots();
    cd.validate();
    return cd;
}

void CartanData::buildRoots() {
    // orbit closure of the simple roots under simple reflections
    std::set<IVec> all;
    std::vector<IVec> frontier;
    for (int i = 0; i < rank_; ++i) {
        IVec e(static_cast<size_t>(rank_), 0);
        e[static_cast<size_t>(i)] = 1;
        all.insert(e);
        frontier.push_back(e);
    }
    while (!frontier.empty()) {
        std::vector<IVec> next;
        for (const auto& r : frontier) {
            for (int i = 0; i < rank_; ++i) {
                long long p = 0;
                for (int j = 0; j < rank_; ++j)
                    p += cartan_[static_cast<size_t>(i)][static_cast<size_t>(j)] * r[static_cast<size_t>(j)];
                IVec img = r;
                img[static_cast<size_t>(i)] -= p;
                if (all.insert(img).second) next.push_back(img);
            }
        }
        frontier = std::move(next);
    }
    posRoots_.clear();
    for (const auto& r : all)
        if (allNonNegative(r) && !std::all_of(r.begin(), r.end(), [](long long x) { return x == 0; }))
            posRoots_.push_back(r);
    std::sort(posRoots_.begin(), posRoots_.end(), [](const IVec& a, const IVec& b) {
        long long ha = heightVec(a), hb = heightVec(b);
        if (ha != hb) return ha < hb;
        return a < b;
    });
}

void CartanData::validate() const {
    for (int i = 0; i < rank_; ++i) {
        for (int j = 0; j < rank_; ++j) {
            long long a = cartan_[static_cast<size_t>(i)][static_cast<size_t>(j)];
            if (i == j && a != 2) throw std::logic_error("Cartan diagonal must be 2");
            if (i != j && a != 0 && a != -1) throw std::logic_error("Cartan off-diagonal must be 0 or -1");
            if (a != cartan_[static_cast<size_t>(j)][static_cast<size_t>(i)])
                throw std::logic_error("Cartan matrix must be symmetric");
        }
    }
    if (!isFiniteRoot(theta_)) throw std::logic_error("theta is not a root");
    // highest root: theta + alpha_i is never a root
    for (int i = 0; i < rank_; ++i) {
        IVec t = theta_;
        t[static_cast<size_t>(i)] += 1;
        if (isFiniteRoot(t)) throw std::logic_error("theta is not highest");
    }
}

bool CartanData::isFiniteRoot(const IVec& r) const {
    // simply laced: r is a root iff (r, r) = 2 and r is in the lattice orbit;
    // the norm test suffices inside the root lattice span enumerated above
    return std::binary_search(posRoots_.begin(), posRoots_.end(), r,
                              [](const IVec& a, const IVec& b) {
                                  long long ha = heightVec(a), hb = heightVec(b);
                                  if (ha != hb) return ha < hb;
                                  return a < b;
                              }) ||
           std::binary_search(posRoots_.begin(), posRoots_.end(), [&] {
               IVec neg(r);
               for (auto& x : neg) x = -x;
               return neg;
           }(),
                              [](const IVec& a, const IVec& b) {
                                  long long ha = heightVec(a), hb = heightVec(b);
                                  if (ha != hb) return ha < hb;
                                  return a < b;
                              });
}

bool CartanData::allNonNegative(const IVec& r) {
    return std::all_of(r.begin(), r.end(), [](long long x) { return x >= 0; });
}

bool CartanData::allNonPositive(const IVec& r) {
    return std::all_of(r.begin(), r.end(), [](long long x) { return x <= 0; });
}

long long CartanData::finitePairing(const IVec& rootCoords, const IVec& corootCoords) const {
    long long s = 0;
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j)
            s += rootCoords[static_cast<size_t>(i)] * cartan_[static_cast<size_t>(i)][static_cast<size_t>(j)] *
                 corootCoords[static_cast<size_t>(j)];
    return s;
}

long long CartanData::symmetricForm(const IVec& a, const IVec& b) const { return finitePairing(a, b); }

long long CartanData::heightVec(const IVec& r) {
    long long s = 0;
    for (auto x : r) s += x;
    return s;
}

long long CartanData::pairing(const RootAff& root, const Coweight& cw) const {
    return finitePairing(root.finite, cw.finite) + root.delta * cw.d;
}

RootAff CartanData::simpleRoot(int i) const {
    if (i < 1 || i > rank_ + 1) throw std::invalid_argument("simple root index out of range");
    RootAff r;
    r.finite.assign(static_cast<size_t>(rank_), 0);
    if (i <= rank_) {
        r.finite[static_cast<size_t>(i - 1)] = 1;
        r.delta = 0;
    } else {
        for (int j = 0; j < rank_; ++j) r.finite[static_cast<size_t>(j)] = -theta_[static_cast<size_t>(j)];
        r.delta = 1;
    }
    return r;
}

CorootAff CartanData::simpleCoroot(int i) const {
    if (i < 1 || i > rank_ + 1) throw std::invalid_argument("simple coroot index out of range");
    CorootAff c;
    c.finite.assign(static_cast<size_t>(rank_), 0);
    if (i <= rank_) {
        c.finite[static_cast<size_t>(i - 1)] = 1;
        c.cMult = 0;
    } else {
        for (int j = 0; j < rank_; ++j) c.finite[static_cast<size_t>(j)] = -theta_[static_cast<size_t>(j)];
        c.cMult = 1;
    }
    return c;
}

long long CartanData::simplePairing(int i, const Coweight& cw) const {
    return pairing(simpleRoot(i), cw);
}

Coweight CartanData::minimalImaginaryCoroot() const {
    return Coweight{1, IVec(static_cast<size_t>(rank_), 0), 0};
}

Coweight CartanData::derivationCoweight() const {
    return Coweight{0, IVec(static_cast<size_t>(rank_), 0), 1};
}

Coweight CartanData::zeroCoweight() const {
    return Coweight{0, IVec(static_cast<size_t>(rank_), 0), 0};
}

bool CartanData::isRealRoot(const RootAff& r) const {
    bool zero = std::all_of(r.finite.begin(), r.finite.end(), [](long long x) { return x == 0; });
    return !zero && isFiniteRoot(r.finite);
}

bool CartanData::isPositiveRoot(const RootAff& r) const {
    if (isRealRoot(r)) {
        bool finPos = allNonNegative(r.finite);
        return (finPos && r.delta >= 0) || (!finPos && r.delta > 0);
    }
    bool zero = std::all_of(r.finite.begin(), r.finite.end(), [](long long x) { return x == 0; });
    if (zero && r.delta != 0) return r.delta > 0; // imaginary
    return false;
}

CorootAff CartanData::corootOf(const RootAff& r) const {
    if (!isRealRoot(r)) throw std::invalid_argument("corootOf: imaginary or non-root input");
    return CorootAff{r.finite, r.delta}; // simply laced
}

RootAff CartanData::rootOf(const CorootAff& c) const {
    RootAff r{c.finite, c.cMult};
    if (!isRealRoot(r)) throw std::invalid_argument("rootOf: imaginary or non-coroot input");
    return r;
}

std::vector<RootAff> CartanData::enumeratePositiveReal(long long mMax, long long heightBound) const {
    std::vector<RootAff> out;
    for (long long mlevel = 0; mlevel <= mMax; ++mlevel) {
        std::vector<RootAff> layer;
        for (const auto& pr : posRoots_) {
            if (heightBound >= 0 && heightVec(pr) > heightBound) continue;
            if (mlevel >= 0) layer.push_back(RootAff{pr, mlevel});
            if (mlevel > 0) {
                IVec neg(pr);
                for (auto& x : neg) x = -x;
                layer.push_back(RootAff{neg, mlevel});
            }
        }
        std::sort(layer.begin(), layer.end(), [](const RootAff& a, const RootAff& b) {
            long long ha = heightVec(a.finite), hb = heightVec(b.finite);
            long long aa = ha < 0 ? -ha : ha, ab = hb < 0 ? -hb : hb;
            if (aa != ab) return aa < ab;
            return a.finite < b.finite;
        });
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

long long CartanData::multiplicity(const CorootAff& c) const {
    bool zero = std::all_of(c.finite.begin(), c.finite.end(), [](long long x) { return x == 0; });
    if (zero && c.cMult == 0) throw std::invalid_argument("multiplicity: zero vector");
    if (zero) return rank_;
    RootAff r{c.finite, c.cMult};
    if (!isRealRoot(r)) throw std::invalid_argument("multiplicity: not a coroot");
    return 1;
}

long long CartanData::rhoPairing(const Coweight& cw) const {
    long long s = cw.c * coxeter_;
    for (auto x : cw.finite) s += x;
    return s;
}

bool CartanData::isDominant(const Coweight& cw) const {
    for (int i = 1; i <= rank_ + 1; ++i)
        if (simplePairing(i, cw) < 0) return false;
    return true;
}

bool CartanData::inTitsCone(const Coweight& cw) const {
    if (cw.d > 0) return true;
    if (cw.d < 0) return false;
    return std::all_of(cw.finite.begin(), cw.finite.end(), [](long long x) { return x == 0; });
}

std::optional<IVec> CartanData::dominanceWitness(const Coweight& mu, const Coweight& lam) const {
    Coweight diff = lam - mu;
    if (diff.d != 0) return std::nullopt;
    long long nLast = diff.c;
    if (nLast < 0) return std::nullopt;
    IVec witness(static_cast<size_t>(rank_) + 1, 0);
    witness[static_cast<size_t>(rank_)] = nLast;
    for (int i = 0; i < rank_; ++i) {
        long long ni = diff.finite[static_cast<size_t>(i)] + nLast * theta_[static_cast<size_t>(i)];
        if (ni < 0) return std::nullopt;
        witness[static_cast<size_t>(i)] = ni;
    }
    return witness;
}

std::optional<long long> CartanData::heightOpt(const Coweight& q) const {
    Coweight zero = zeroCoweight();
    auto w = dominanceWitness(zero, q);
    if (!w) return std::nullopt;
    long long s = 0;
    for (auto x : *w) s += x;
    return s;
}

long long CartanData::height(const Coweight& q) const {
    auto h = heightOpt(q);
    if (!h) throw std::invalid_argument("height: not in Q_+^vee: " + q.str());
    return *h;
}

long long CartanData::heightOfCoroot(const CorootAff& c) const {
    return c.cMult * coxeter_ + heightVec(c.finite);
}

} // namespace affsat

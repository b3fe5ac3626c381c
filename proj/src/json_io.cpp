#include "affsat/json_io.hpp"

#include <algorithm>
#include <stdexcept>

namespace affsat {

namespace {

IVec ivecFromJson(const Json& j, int rank) {
    if (!j.is_array() || static_cast<int>(j.size()) != rank)
        throw std::invalid_argument("expected an array of " + std::to_string(rank) + " integers");
    IVec v;
    for (const auto& x : j) v.push_back(x.get<long long>());
    return v;
}

} // namespace

Json toJson(const Coweight& cw) {
    return Json{{"c", cw.c}, {"finite", cw.finite}, {"d", cw.d}};
}

Coweight coweightFromJson(const Json& j, int rank) {
    if (!j.is_object() || !j.contains("c") || !j.contains("finite") || !j.contains("d"))
        throw std::invalid_argument("coweight needs fields c, finite, d");
    return Coweight{j.at("c").get<long long>(), ivecFromJson(j.at("finite"), rank),
                    j.at("d").get<long long>()};
}

Json toJson(const RootAff& r) { return Json{{"finite", r.finite}, {"m", r.delta}}; }

RootAff rootFromJson(const Json& j, int rank) {
    if (!j.is_object() || !j.contains("finite") || !j.contains("m"))
        throw std::invalid_argument("root needs fields finite, m");
    return RootAff{ivecFromJson(j.at("finite"), rank), j.at("m").get<long long>()};
}

Json toJson(const VCoeff& c) {
    return Json{{"num", c.num().str()}, {"den", c.den().str()}};
}

Json toJson(const AffinizedRoot& a) { return Json{{"root", toJson(a.root)}, {"k", a.piLevel}}; }

Json weylToJson(const WeylGroup& w, const WeylElement& x) {
    Json m = Json::array();
    for (const auto& row : x.fin) m.push_back(row);
    return Json{{"word", w.reducedWord(x)}, {"translation", x.trans}, {"matrix", m}};
}

WeylElement weylFromJson(const WeylGroup& w, const Json& j) {
    const Json* word = nullptr;
    if (j.is_array())
        word = &j;
    else if (j.is_object() && j.contains("word"))
        word = &j.at("word");
    else
        throw std::invalid_argument("Weyl element needs a word");
    std::vector<int> letters;
    for (const auto& x : *word) {
        int i = x.get<int>();
        if (i < 1 || i > w.numGenerators()) throw std::invalid_argument("generator index out of range");
        letters.push_back(i);
    }
    return w.fromWord(letters);
}

Json extToJson(const WeylGroup& w, const ExtendedElement& x) {
    return Json{{"word", w.reducedWord(x.weyl)}, {"coweight", toJson(x.coweight)}};
}

ExtendedElement extFromJson(const WeylGroup& w, const Json& j) {
    if (!j.is_object() || !j.contains("coweight"))
        throw std::invalid_argument("extended element needs word and coweight");
    WeylElement we = j.contains("word") ? weylFromJson(w, j.at("word")) : w.identity();
    return ExtendedElement{we, coweightFromJson(j.at("coweight"), w.cartan().rank())};
}

Json seriesToJson(const SeriesOps& ops, const Series& s) {
    std::vector<std::pair<Coweight, VCoeff>> sorted(s.terms.begin(), s.terms.end());
    std::stable_sort(sorted.begin(), sorted.end(), [&](const auto& a, const auto& b) {
        long long da = ops.depthOf(s.ctx, a.first), db = ops.depthOf(s.ctx, b.first);
        if (da != db) return da < db;
        return a.first < b.first;
    });
    Json terms = Json::array();
    for (const auto& [cw, c] : sorted) terms.push_back(Json{{"cw", toJson(cw)}, {"coeff", toJson(c)}});
    Json out{{"anchor", toJson(s.ctx.anchor)}, {"depth", s.ctx.depth}, {"terms", terms}};
    if (s.ctx.vWindow)
        out["vwindow"] = Json{{"vmin", s.ctx.vWindow->first}, {"vmax", s.ctx.vWindow->second}};
    return out;
}

Json heckeToJson(const WeylGroup& w, const HeckeElement& x) {
    Json out = Json::array();
    for (const auto& [k, c] : x.terms)
        out.push_back(Json{{"theta", toJson(k.first)}, {"t", w.reducedWord(k.second)}, {"coeff", toJson(c)}});
    return out;
}

Json satakeToJson(const SeriesOps& ops, const SatakeResult& r) {
    Json out;
    out["lambda"] = toJson(r.lambda);
    if (r.q) {
        BigRat q = *r.q;
        out["q"] = BigInt(boost::multiprecision::denominator(q)) == 1
                       ? boost::multiprecision::numerator(q).str()
                       : q.str();
    } else {
        out["q"] = "sym";
    }
    out["route"] = r.route;
    Json window{{"depth", r.certifiedDepth}};
    if (r.series.ctx.vWindow) {
        window["vmin"] = r.series.ctx.vWindow->first;
        window["vmax"] = r.series.ctx.vWindow->second;
    }
    out["window"] = window;
    out["shells"] = r.shellsUsed;
    std::vector<std::pair<Coweight, VCoeff>> sorted(r.series.terms.begin(), r.series.terms.end());
    std::stable_sort(sorted.begin(), sorted.end(), [&](const auto& a, const auto& b) {
        long long da = ops.depthOf(r.series.ctx, a.first), db = ops.depthOf(r.series.ctx, b.first);
        if (da != db) return da < db;
        return a.first < b.first;
    });
    Json terms = Json::array();
    for (const auto& [cw, c] : sorted) {
        Json t{{"cw", toJson(cw)}};
        if (r.q) {
            auto it = r.specialized.find(cw);
            t["coeff"] = it == r.specialized.end() ? "0" : it->second.str();
        } else {
            t["coeff"] = c.str();
        }
        terms.push_back(t);
    }
    out["terms"] = terms;
    return out;
}

Json shellExpansionToJson(const SeriesOps& ops, const ShellExpansion& sh) {
    Json out;
    out["L"] = sh.shellMax;
    if (sh.stabilized)
        out["stabilized"] = Json{{"depth", sh.stabilized->first},
                                 {"vmin", sh.stabilized->second.first},
                                 {"vmax", sh.stabilized->second.second}};
    else
        out["stabilized"] = nullptr;
    Json cs = Json::array();
    for (const auto& [tau, series] : sh.coefficients)
        cs.push_back(Json{{"tau", ops.weyl().reducedWord(tau)}, {"series", seriesToJson(ops, series)}});
    out["C"] = cs;
    return out;
}

std::string canonicalDump(const Json& j) { return j.dump(2); }

} // namespace affsat

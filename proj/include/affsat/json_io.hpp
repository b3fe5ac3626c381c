#pragma once

#include <json.hpp>

#include "affsat/affroots.hpp"
#include "affsat/hecke.hpp"
#include "affsat/spherical.hpp"

namespace affsat {

using Json = nlohmann::json; // object keys are kept sorted, so dumps are canonical

Json toJson(const Coweight& cw);
Coweight coweightFromJson(const Json& j, int rank);

Json toJson(const RootAff& r);
RootAff rootFromJson(const Json& j, int rank);

Json toJson(const VCoeff& c);

Json toJson(const AffinizedRoot& a);

Json weylToJson(const WeylGroup& w, const WeylElement& x);
// accepts {"word": [i...]} or a bare array of generator indices
WeylElement weylFromJson(const WeylGroup& w, const Json& j);

Json extToJson(const WeylGroup& w, const ExtendedElement& x);
ExtendedElement extFromJson(const WeylGroup& w, const Json& j);

// terms sorted by (height below the anchor, then lexicographic)
Json seriesToJson(const SeriesOps& ops, const Series& s);

Json heckeToJson(const WeylGroup& w, const HeckeElement& x);

Json satakeToJson(const SeriesOps& ops, const SatakeResult& r);

Json shellExpansionToJson(const SeriesOps& ops, const ShellExpansion& sh);

std::string canonicalDump(const Json& j);

} // namespace affsat

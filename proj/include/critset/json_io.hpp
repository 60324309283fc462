#pragma once

// JSON forms.  Matrix: {"rows","cols","rowSums","colSums","triples"} with
// empty cells omitted; walks: {"depth":[...]}; trades and cycles: a list
// of [i,j,bodyValue] triples (the mate is the flipped list).

#include "json.hpp"

#include "critset/constructions.hpp"
#include "critset/extremal.hpp"

namespace critset {

using json = nlohmann::json;

json matrix_json(const PartialMatrix& m);
PartialMatrix matrix_from_json(const json& j);

json triples_json(const std::vector<Triple>& ts);

json walk_json(const Walk& w);
Walk walk_from_json(const json& j, int rows);

json certificate_json(const WalkCertificate& c);
WalkCertificate certificate_from_json(const json& j);

json cycle_json(const Cycle& c);
json trade_json(const Trade& t);

json certified_set_json(const CertifiedCriticalSet& c);

json report_json(const ExtremalReport& r);
json spot_report_json(const SpotReport& r);

}  // namespace critset

#pragma once

// JSON encodings of the public types.  Collections are emitted sorted and
// floats rounded to nine significant digits so output is byte-stable.

#include "totreal/classify.hpp"
#include "totreal/diophantine.hpp"
#include "totreal/maslov.hpp"

#include <json.hpp>

namespace totreal {

using json = nlohmann::ordered_json;

double round_sig9(double v);

json to_json(const Modulus& q);
json to_json(const CycElem& e);           // {"q": int|null, "v": int}
json to_json(const Surface& s);           // {"orientable": bool, "genus": int}
json to_json(const IndexClass& c);        // {"q": int|null, "coords": [...]}
json to_json(const IqDescriptor& d);
json to_json(const Target& t);            // {"kind": ..., "m": int?}
json to_json(const DegreeClass& d);       // {"ring": "Z"|"Z2", "c": [...]}
json to_json(const Existence& e);
json to_json(const IndexDegreePair& p);
json to_json(const ZSet& z);
json to_json(const TotalMod2Degree& t);
json to_json(const DiophSolution& s);     // {"d", "q", "s", "r", "ell"}
json to_json(const Table1& t);
json to_json(const Table2& t);
json to_json(const MaslovResult& r);      // {"index", "residuals", "minJ"}

Surface surface_from_json(const json& j);
Target target_from_json(const json& j);

// Full classification report for one (surface, target) query.
json classify_report(const Surface& s, const Target& t);

}  // namespace totreal

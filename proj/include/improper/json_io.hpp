#pragma once

#include <json.hpp>

#include "improper/families.hpp"
#include "improper/interval.hpp"
#include "improper/spectrum.hpp"
#include "improper/structure.hpp"

namespace improper {

using Json = nlohmann::ordered_json;

// {"n": 3, "intervals": [[l, r], ...]}
Json to_json(const IntervalRepresentation& r);
// Throws InvalidRepresentation on a malformed document.
IntervalRepresentation representation_from_json(const Json& j);

Json to_json(const SearchStats& s);
Json to_json(const ImproprietyCertificate& c);
Json to_json(const Calibration& c);
// Metadata sidecar written next to a generated graph.
Json family_sidecar(const FamilyInstance& inst);
Json to_json(const StructureReport& r);
Json to_json(const SpectrumReport& r);

}  // namespace improper

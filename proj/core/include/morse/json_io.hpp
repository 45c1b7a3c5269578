#pragma once

#include <json.hpp>

#include "morse/conormal.hpp"
#include "morse/hecke.hpp"
#include "morse/module_rep.hpp"
#include "morse/slice.hpp"
#include "morse/tracker.hpp"

namespace morse {

// All CLI output uses ordered JSON with a top-level "schema" tag; rationals
// serialize as canonical strings and complex numbers as [re, im].
using Json = nlohmann::ordered_json;

Json to_json(const RatMat& m);
Json to_json(const HeckeElement& x);
Json complex_json(const std::complex<double>& z);

Json rep_json(const ModuleRep& rep);
Json verify_json(const VerifyReport& report);
Json normal_form_json(const NormalFormReport& report);
Json track_json(const TrackResult& result);
Json critical_points_json(const std::vector<CriticalPoint>& points);

}  // namespace morse

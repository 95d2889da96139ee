#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "quasiadj/resolution.hpp"
#include "quasiadj/spectra.hpp"
#include "quasiadj/walls.hpp"

namespace quasiadj::report {

using Json = nlohmann::json;  // std::map-backed: keys come out sorted

Json rationals(const std::vector<Rat>& v);

Json resolution_json(const ResolutionData& res);
Json ideal_json(const IdealHandle& h);
Json face_json(const Face& f);
Json faces_json(const std::vector<Face>& faces);
Json spectrum_json(const std::vector<SpectrumElement>& elements);
Json bernstein_json(const std::vector<BernsteinFactor>& factors);
Json milnor_json(const MilnorReport& m, const MilnorDelta& d);

std::string resolution_table(const ResolutionData& res);
std::string faces_table(const std::vector<Face>& faces);
std::string spectrum_table(const std::vector<SpectrumElement>& elements, const std::string& heading);

/// Unit square (r = 2) or unit interval (r = 1) in a 1000x1000 viewBox: candidate walls light,
/// faces heavy with depth labels.
std::string faces_svg(const ResolutionData& res, const std::vector<Face>& faces, bool rupture_only = false);

}  // namespace quasiadj::report

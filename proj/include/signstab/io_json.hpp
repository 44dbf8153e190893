#pragma once

#include "signstab/entropy.hpp"
#include "signstab/fm.hpp"

#include <json.hpp>

#include <iosfwd>

namespace signstab {

using ordered_json = nlohmann::ordered_json;

/// Decimal string "p/q" ("p" when q = 1); exact.
std::string rat_to_string(const Rat& x);
Rat rat_from_string(const std::string& s);

/// Integers serialize as JSON numbers while they fit in 64 bits and as
/// decimal strings beyond that.
ordered_json int_to_json(const Int& x);
Int int_from_json(const ordered_json& j);

ordered_json matrix_to_json(const IntMat& m);
IntMat matrix_from_json(const ordered_json& j);

ordered_json coeffs_to_json(const std::vector<Int>& coeffs);

// Seed file: {"n": int, "b": [[int]]}
ordered_json seed_to_json(const ExchangeMatrix& b);
ExchangeMatrix seed_from_json(const ordered_json& j);

// Loop file: {"b": [[int]], "word": [1-based], "sigma": [1-based images]},
// sigma omitted = identity.
ordered_json loop_to_json(const MutationLoop& loop);
MutationLoop loop_from_json(const ordered_json& j);

// Cone file: {"normals": [[int]], "rays": [[int]], "lineality": [[int]]};
// normals are authoritative on input, the V-representation is recomputed.
ordered_json cone_to_json(const Cone& c);
Cone cone_from_json(const ordered_json& j);

ordered_json report_to_json(const StabilityReport& rep);
ordered_json entropy_to_json(const EntropyEstimate& est);
ordered_json slope_trace_to_json(const SlopeTrace& t, const std::string& source);

std::string orbit_to_csv(const TropOrbit& orbit);
ordered_json orbit_to_json(const TropOrbit& orbit);
std::string slope_trace_to_csv(const SlopeTrace& t, int n_lo);

/// Stereographic plot data for rank-3 cones: the boundary arcs of the cone on
/// the unit sphere, projected from (1,1,1)/sqrt(3).
std::string stereographic_csv(const Cone& c, int samples_per_arc = 64);

ordered_json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace signstab

// JSON and DOT output. JSON round-trips through the matching from_json
// functions; DOT names nodes by their summand dimension-vector lists, so
// output is stable across runs.

#pragma once

#include <string>

#include "tiltlab/tilting.hpp"
#include "tiltlab/transport.hpp"

namespace tiltlab {

std::string tilt_tag_name(TiltTag t);
std::string b_tag_name(BTag t);

std::string quiver_to_json(const Quiver& q);
Quiver quiver_from_json(const std::string& text);

// Vertices carry their summand dimension vectors; when tags are given they
// are written per vertex.
std::string tilting_quiver_to_json(const IndTable& tbl, const TiltingQuiver& tq,
                                   const std::vector<TiltTag>* tags = nullptr);
TiltingQuiver tilting_quiver_from_json(const IndTable& tbl, const std::string& text);

// Tilted-side vertices separate plain summands from the x-side ones, which
// are written under "x_summands".
std::string b_tilting_quiver_to_json(const IndTable& tbl, const BTiltingQuiver& bq);
BTiltingQuiver b_tilting_quiver_from_json(const IndTable& tbl, const std::string& text);

std::string tilting_quiver_to_dot(const IndTable& tbl, const TiltingQuiver& tq);
std::string b_tilting_quiver_to_dot(const IndTable& tbl, const BTiltingQuiver& bq);

}  // namespace tiltlab

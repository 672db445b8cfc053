#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "mcluster/coloured_quiver.hpp"
#include "mcluster/polygon.hpp"

namespace mcluster {

// Coloured quivers: {"m": int, "vertices": [labels],
//                    "arrows": [{"from", "to", "colour", "mult"}]}
// with arrows sorted by (from, to, colour) in vertex-list order.
nlohmann::ordered_json quiver_to_json(const ColouredQuiver& q);
ColouredQuiver quiver_from_json(const nlohmann::json& j);
std::string serialize_quiver(const ColouredQuiver& q);
ColouredQuiver parse_quiver(const std::string& text);

/// One edge per arrow, labelled "(c)".
std::string quiver_to_dot(const ColouredQuiver& q);

// Angulations: {"m", "n", "diagonals": [[i, j], ...]} with sorted pairs.
nlohmann::ordered_json angulation_to_json(const Angulation& a);
Angulation angulation_from_json(const nlohmann::json& j);
std::string serialize_angulation(const Angulation& a);
Angulation parse_angulation(const std::string& text);

struct SvgOptions {
  double size = 400.0;
  /// Diagonal whose flip candidates are drawn dashed.
  std::optional<MDiagonal> highlight;
};

/// Regular N-gon on the unit circle, vertex 1 at 90 degrees, numbered
/// clockwise; diagonals as chords, flip candidates dashed.
std::string angulation_to_svg(const Angulation& a, const SvgOptions& options = {});

/// Arrows solid, tau drawn as dotted edges x -> tau(x).
std::string translation_quiver_to_dot(const TranslationQuiver& gamma);

}  // namespace mcluster

#pragma once

#include <string>
#include <string_view>

#include "mcluster/coloured_quiver.hpp"

namespace mcluster {

/// Type of the underlying undirected multigraph of a connected quiver.
struct GraphClass {
  enum class Family { kDynkin, kExtendedDynkin, kSmall, kOther };

  Family family = Family::kOther;
  char letter = '\0';  // 'A', 'D' or 'E' for (extended) Dynkin types
  int rank = 0;        // Dynkin: vertex count; extended: vertex count - 1

  /// "A4", "~D4", "small", "other"
  std::string name() const;

  friend bool operator==(const GraphClass&, const GraphClass&) = default;
};

GraphClass classify_graph(const PlainQuiver& q);

/// Finiteness of the coloured mutation class of a connected acyclic quiver:
/// Dynkin, extended Dynkin, or at most two vertices.
bool is_finite_class(const PlainQuiver& q, int m);

/// Linearly oriented Dynkin quivers from specs like "A4", "D 5", "E6".
/// A_n: 1 -> 2 -> ... -> n; D_n: path 1..n-1 plus n-2 -> n;
/// E_n: path 1..n-1 plus 3 -> n.
PlainQuiver dynkin_quiver(std::string_view spec);

}  // namespace mcluster

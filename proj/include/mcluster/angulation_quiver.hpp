#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mcluster/coloured_quiver.hpp"
#include "mcluster/polygon.hpp"

namespace mcluster {

/// One exchange: `removed` is replaced by next_complement(current, removed).
struct FlipStep {
  MDiagonal removed;
  MDiagonal added;

  friend bool operator==(const FlipStep&, const FlipStep&) = default;
};

/// Fan at vertex 1: {(1, t m + 2) : 1 <= t <= n-1}.
Angulation fan_angulation(const Polygon& p);

/// Linear coloured quiver on the fan: d_t -> d_{t+1} of colour 0 and
/// d_{t+1} -> d_t of colour m. Vertices are labelled by to_string(diagonal).
ColouredQuiver fan_quiver(const Polygon& p);

/// to_string of each diagonal of `a`, in sorted order.
std::vector<std::string> diagonal_labels(const Angulation& a);

/// Applies one exchange to a linked (angulation, quiver) pair: mutation at
/// the vertex of d, which is then relabelled to the new diagonal.
std::pair<Angulation, ColouredQuiver> exchange(const Angulation& a, const ColouredQuiver& q,
                                               const MDiagonal& d);

/// Folds mutation along `path` starting from (base, base_quiver). Throws
/// IllegalMoveError if the path does not lead from base to target.
ColouredQuiver coloured_quiver_of_angulation(const Angulation& target, const Angulation& base,
                                             const ColouredQuiver& base_quiver,
                                             std::span<const FlipStep> path);

/// Shortest exchange path between two angulations of the same polygon.
std::vector<FlipStep> flip_path(const Angulation& from, const Angulation& to);

/// Quiver of `a` relative to the fan base.
ColouredQuiver coloured_quiver_of_angulation(const Angulation& a);

/// Every angulation reachable from `base` with the quiver obtained along a
/// breadth-first exchange tree.
std::map<Angulation, ColouredQuiver> quivers_by_angulation(const Angulation& base,
                                                           const ColouredQuiver& base_quiver);

}  // namespace mcluster

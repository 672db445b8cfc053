#pragma once

#include <string>
#include <vector>

#include "mcluster/coloured_quiver.hpp"
#include "mcluster/polygon.hpp"

namespace fixtures {

using mcluster::ColouredQuiver;

inline const std::vector<std::string> kTriangleLabels{"X", "I4", "I1", "Y[1]"};

// The three quivers of the m = 2 mutation cycle at X.
inline ColouredQuiver q_t() {
  return ColouredQuiver::from_arrows(2, kTriangleLabels,
                                     {{"X", "I4", 0}, {"I4", "X", 2}, {"X", "I1", 0},
                                      {"I1", "X", 2}, {"X", "Y[1]", 1}, {"Y[1]", "X", 1},
                                      {"I1", "Y[1]", 0}, {"Y[1]", "I1", 2}});
}

inline ColouredQuiver q_t_prime() {
  return ColouredQuiver::from_arrows(2, kTriangleLabels,
                                     {{"X", "I4", 2}, {"I4", "X", 0}, {"X", "I1", 2},
                                      {"I1", "X", 0}, {"X", "Y[1]", 0}, {"Y[1]", "X", 2},
                                      {"I4", "Y[1]", 1}, {"Y[1]", "I4", 1}});
}

inline ColouredQuiver q_t_double_prime() {
  return ColouredQuiver::from_arrows(2, kTriangleLabels,
                                     {{"X", "I4", 1}, {"I4", "X", 1}, {"X", "I1", 1},
                                      {"I1", "X", 1}, {"X", "Y[1]", 2}, {"Y[1]", "X", 0},
                                      {"I1", "Y[1]", 0}, {"Y[1]", "I1", 2}});
}

/// Two vertices, m = 3, colours (c) on a -> b and (3 - c) on b -> a.
inline ColouredQuiver two_cycle(int c) {
  return ColouredQuiver::from_arrows(3, {"a", "b"}, {{"a", "b", c}, {"b", "a", 3 - c}});
}

// Diagonals of the 12-gon (m = 2, n = 5) matching the objects above.
inline const mcluster::Polygon kP25{2, 5};
inline const mcluster::MDiagonal kX{3, 8};
inline const mcluster::MDiagonal kI4{5, 8};
inline const mcluster::MDiagonal kI1{3, 12};
inline const mcluster::MDiagonal kY1{9, 12};
inline const mcluster::MDiagonal kP2Shift{5, 12};
inline const mcluster::MDiagonal kI3Shift{4, 9};

inline mcluster::Angulation base_angulation() { return {kP25, {kX, kI4, kI1, kY1}}; }

/// q_t() with vertices renamed to their diagonals.
inline ColouredQuiver q_t_on_diagonals() {
  auto q = q_t();
  q = q.relabelled(0, mcluster::to_string(kX));
  q = q.relabelled(1, mcluster::to_string(kI4));
  q = q.relabelled(2, mcluster::to_string(kI1));
  q = q.relabelled(3, mcluster::to_string(kY1));
  return q;
}

}  // namespace fixtures

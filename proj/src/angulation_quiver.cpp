#include "mcluster/angulation_quiver.hpp"

#include <algorithm>
#include <deque>

#include "mcluster/mutation.hpp"

namespace mcluster {

Angulation fan_angulation(const Polygon& p) {
  std::vector<MDiagonal> diagonals;
  for (int t = 1; t <= p.n() - 1; ++t) diagonals.emplace_back(1, t * p.m() + 2);
  return Angulation(p, std::move(diagonals));
}

ColouredQuiver fan_quiver(const Polygon& p) {
  const auto fan = fan_angulation(p);
  ColouredQuiver q(p.m(), diagonal_labels(fan));
  // Sorted order of the fan is d_1, d_2, ...
  for (Index t = 0; t + 1 < q.size(); ++t) {
    q.add_arrow(t, t + 1, 0);
    q.add_arrow(t + 1, t, p.m());
  }
  return q;
}

std::vector<std::string> diagonal_labels(const Angulation& a) {
  std::vector<std::string> labels;
  for (const auto& d : a.diagonals()) labels.push_back(to_string(d));
  return labels;
}

std::pair<Angulation, ColouredQuiver> exchange(const Angulation& a, const ColouredQuiver& q,
                                               const MDiagonal& d) {
  const auto vertex = q.find(to_string(d));
  if (!vertex) throw IllegalMoveError("quiver has no vertex for " + to_string(d));
  const MDiagonal next = next_complement(a, d);
  auto mutated = mutate_procedural(q, *vertex).relabelled(*vertex, to_string(next));
  return {a.replaced(d, next), std::move(mutated)};
}

ColouredQuiver coloured_quiver_of_angulation(const Angulation& target, const Angulation& base,
                                             const ColouredQuiver& base_quiver,
                                             std::span<const FlipStep> path) {
  auto labels = base_quiver.labels();
  auto expected = diagonal_labels(base);
  std::sort(labels.begin(), labels.end());
  std::sort(expected.begin(), expected.end());
  if (labels != expected) throw IllegalMoveError("base quiver vertices do not match the base angulation");

  Angulation current = base;
  ColouredQuiver quiver = base_quiver;
  for (const auto& step : path) {
    if (!current.contains(step.removed)) {
      throw IllegalMoveError(to_string(step.removed) + " is not in the current angulation");
    }
    if (next_complement(current, step.removed) != step.added) {
      throw IllegalMoveError(to_string(step.added) + " is not the next complement of " +
                             to_string(step.removed));
    }
    std::tie(current, quiver) = exchange(current, quiver, step.removed);
  }
  if (current != target) throw IllegalMoveError("flip path does not end at the target angulation");
  return quiver;
}

std::vector<FlipStep> flip_path(const Angulation& from, const Angulation& to) {
  if (from.polygon() != to.polygon()) throw IllegalMoveError("angulations of different polygons");
  std::map<Angulation, std::pair<Angulation, FlipStep>> parent;
  std::deque<Angulation> queue{from};
  parent.emplace(from, std::pair{from, FlipStep{}});
  while (!queue.empty()) {
    const Angulation a = queue.front();
    queue.pop_front();
    if (a == to) break;
    for (const auto& d : a.diagonals()) {
      const MDiagonal next = next_complement(a, d);
      Angulation b = a.replaced(d, next);
      if (parent.contains(b)) continue;
      parent.emplace(b, std::pair{a, FlipStep{d, next}});
      queue.push_back(std::move(b));
    }
  }
  if (!parent.contains(to)) throw IllegalMoveError("target angulation is unreachable");
  std::vector<FlipStep> path;
  for (Angulation a = to; a != from;) {
    const auto& [prev, step] = parent.at(a);
    path.push_back(step);
    a = prev;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

ColouredQuiver coloured_quiver_of_angulation(const Angulation& a) {
  const auto base = fan_angulation(a.polygon());
  const auto path = flip_path(base, a);
  return coloured_quiver_of_angulation(a, base, fan_quiver(a.polygon()), path);
}

std::map<Angulation, ColouredQuiver> quivers_by_angulation(const Angulation& base,
                                                           const ColouredQuiver& base_quiver) {
  std::map<Angulation, ColouredQuiver> out;
  out.emplace(base, base_quiver);
  std::deque<Angulation> queue{base};
  while (!queue.empty()) {
    const Angulation a = queue.front();
    queue.pop_front();
    const ColouredQuiver q = out.at(a);
    for (const auto& d : a.diagonals()) {
      auto [b, next] = exchange(a, q, d);
      if (out.contains(b)) continue;
      out.emplace(b, std::move(next));
      queue.push_back(std::move(b));
    }
  }
  return out;
}

}  // namespace mcluster

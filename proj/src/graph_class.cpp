#include "mcluster/graph_class.hpp"

#include <algorithm>
#include <charconv>
#include <vector>

namespace mcluster {

namespace {

GraphClass dynkin(char letter, int rank) { return {GraphClass::Family::kDynkin, letter, rank}; }
GraphClass extended(char letter, int rank) { return {GraphClass::Family::kExtendedDynkin, letter, rank}; }
GraphClass other() { return {GraphClass::Family::kOther, '\0', 0}; }

// Length (in edges) of the arm leaving `centre` through `first`, or -1 if the
// arm branches.
int arm_length(const std::vector<std::vector<Index>>& adj, Index centre, Index first) {
  int length = 1;
  Index prev = centre;
  Index cur = first;
  while (adj[cur].size() == 2) {
    const Index next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
    prev = cur;
    cur = next;
    ++length;
  }
  return adj[cur].size() == 1 ? length : -1;
}

GraphClass classify_tree(const std::vector<std::vector<Index>>& adj) {
  const auto n = static_cast<int>(adj.size());
  std::vector<Index> branch;
  for (Index i = 0; i < n; ++i) {
    if (adj[i].size() >= 5) return other();
    if (adj[i].size() >= 3) branch.push_back(i);
  }
  if (branch.empty()) return dynkin('A', n);

  if (branch.size() == 1) {
    const Index centre = branch.front();
    std::vector<int> arms;
    for (const Index next : adj[centre]) arms.push_back(arm_length(adj, centre, next));
    std::sort(arms.begin(), arms.end());
    if (arms.size() == 4) {
      return arms == std::vector<int>{1, 1, 1, 1} ? extended('D', 4) : other();
    }
    const int a = arms[0], b = arms[1], c = arms[2];
    if (a == 1 && b == 1) return dynkin('D', n);
    if (a == 1 && b == 2 && c >= 2 && c <= 4) return dynkin('E', n);
    if (a == 2 && b == 2 && c == 2) return extended('E', 6);
    if (a == 1 && b == 3 && c == 3) return extended('E', 7);
    if (a == 1 && b == 2 && c == 5) return extended('E', 8);
    return other();
  }

  if (branch.size() == 2) {
    // ~D_k (k >= 5): two degree-3 vertices, each carrying two leaves.
    for (const Index centre : branch) {
      if (adj[centre].size() != 3) return other();
      int leaves = 0;
      for (const Index next : adj[centre]) leaves += adj[next].size() == 1 ? 1 : 0;
      if (leaves != 2) return other();
    }
    return extended('D', n - 1);
  }
  return other();
}

}  // namespace

std::string GraphClass::name() const {
  switch (family) {
    case Family::kDynkin:
      return std::string(1, letter) + std::to_string(rank);
    case Family::kExtendedDynkin:
      return "~" + std::string(1, letter) + std::to_string(rank);
    case Family::kSmall:
      return "small";
    case Family::kOther:
      break;
  }
  return "other";
}

GraphClass classify_graph(const PlainQuiver& q) {
  if (!q.is_connected()) throw InvalidQuiverError("classify_graph requires a connected quiver");
  const Index n = q.size();
  const PlainQuiver::Matrix weight = q.arrows() + q.arrows().transpose();

  if (n == 1) return dynkin('A', 1);
  if (n == 2) {
    const auto w = weight(0, 1);
    if (w == 1) return dynkin('A', 2);
    if (w == 2) return extended('A', 1);
    return {GraphClass::Family::kSmall, '\0', 0};
  }
  if ((weight.array() > 1).any()) return other();

  std::vector<std::vector<Index>> adj(static_cast<std::size_t>(n));
  Index edges = 0;
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      if (weight(i, j) > 0) adj[i].push_back(j);
      if (i < j && weight(i, j) > 0) ++edges;
    }
  }
  if (edges == n - 1) return classify_tree(adj);
  if (edges == n) {
    const bool cycle = std::all_of(adj.begin(), adj.end(), [](const auto& a) { return a.size() == 2; });
    return cycle ? extended('A', static_cast<int>(n) - 1) : other();
  }
  return other();
}

bool is_finite_class(const PlainQuiver& q, int m) {
  if (m < 1) throw std::invalid_argument("is_finite_class requires m >= 1");
  if (!q.is_acyclic()) throw InvalidQuiverError("is_finite_class requires an acyclic quiver");
  return classify_graph(q).family != GraphClass::Family::kOther;
}

PlainQuiver dynkin_quiver(std::string_view spec) {
  if (spec.size() < 2) throw ParseError("unrecognized Dynkin spec '" + std::string(spec) + "'");
  const char letter = spec.front();
  int n = 0;
  auto digits = spec.substr(1);
  while (!digits.empty() && digits.front() == ' ') digits.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || n < 1) {
    throw ParseError("unrecognized Dynkin spec '" + std::string(spec) + "'");
  }
  std::vector<std::pair<Index, Index>> arrows;
  switch (letter) {
    case 'A':
      for (Index i = 1; i < n; ++i) arrows.emplace_back(i, i + 1);
      break;
    case 'D':
      if (n < 4) throw ParseError("D_n requires n >= 4");
      for (Index i = 1; i < n - 1; ++i) arrows.emplace_back(i, i + 1);
      arrows.emplace_back(n - 2, n);
      break;
    case 'E':
      if (n < 6 || n > 8) throw ParseError("E_n requires 6 <= n <= 8");
      for (Index i = 1; i < n - 1; ++i) arrows.emplace_back(i, i + 1);
      arrows.emplace_back(3, n);
      break;
    default:
      throw ParseError("unrecognized Dynkin spec '" + std::string(spec) + "'");
  }
  return PlainQuiver::numbered(n, arrows);
}

}  // namespace mcluster

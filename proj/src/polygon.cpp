#include "mcluster/polygon.hpp"

#include <algorithm>
#include <bitset>
#include <charconv>
#include <future>
#include <limits>
#include <numeric>
#include <sstream>

namespace mcluster {

Polygon::Polygon(int m, int n) : m_(m), n_(n) {
  if (m < 1) throw std::invalid_argument("polygon requires m >= 1");
  if (n < 2) throw std::invalid_argument("polygon requires n >= 2");
}

int Polygon::wrap(int vertex) const {
  const int count = vertex_count();
  return ((vertex - 1) % count + count) % count + 1;
}

std::string to_string(const MDiagonal& d) {
  return "(" + std::to_string(d.first()) + "," + std::to_string(d.second()) + ")";
}

MDiagonal parse_diagonal(std::string_view text) {
  const auto fail = [&]() { return ParseError("malformed diagonal '" + std::string(text) + "'"); };
  std::string_view s = text;
  if (s.size() < 5 || s.front() != '(' || s.back() != ')') throw fail();
  s = s.substr(1, s.size() - 2);
  const auto comma = s.find(',');
  if (comma == std::string_view::npos) throw fail();
  int a = 0, b = 0;
  const auto first = s.substr(0, comma);
  const auto second = s.substr(comma + 1);
  if (std::from_chars(first.data(), first.data() + first.size(), a).ptr != first.data() + first.size() ||
      std::from_chars(second.data(), second.data() + second.size(), b).ptr !=
          second.data() + second.size() ||
      first.empty() || second.empty()) {
    throw fail();
  }
  return MDiagonal(a, b);
}

bool is_m_diagonal(const Polygon& p, int i, int j) {
  const int count = p.vertex_count();
  if (i < 1 || j < 1 || i > count || j > count || i == j) return false;
  const int gap = ((j - i) % count + count) % count;
  const int m = p.m();
  // Each side must be an (m t + 2)-gon with t >= 1: gap = m t + 1.
  return gap >= m + 1 && count - gap >= m + 1 && (gap - 1) % m == 0;
}

std::vector<MDiagonal> all_m_diagonals(const Polygon& p) {
  std::vector<MDiagonal> out;
  const int count = p.vertex_count();
  for (int i = 1; i <= count; ++i)
    for (int j = i + 1; j <= count; ++j)
      if (is_m_diagonal(p, i, j)) out.emplace_back(i, j);
  return out;
}

namespace {

bool strictly_between(int lo, int x, int hi) { return lo < x && x < hi; }

bool crosses_unchecked(const MDiagonal& a, const MDiagonal& b) {
  if (a.has_endpoint(b.first()) || a.has_endpoint(b.second())) return false;
  return strictly_between(a.first(), b.first(), a.second()) !=
         strictly_between(a.first(), b.second(), a.second());
}

void require_diagonal(const Polygon& p, const MDiagonal& d) {
  if (!is_m_diagonal(p, d)) {
    throw InvalidQuiverError(to_string(d) + " is not an m-diagonal of the " +
                             std::to_string(p.vertex_count()) + "-gon for m=" + std::to_string(p.m()));
  }
}

bool noncrossing(std::span<const MDiagonal> set) {
  for (std::size_t a = 0; a < set.size(); ++a)
    for (std::size_t b = a + 1; b < set.size(); ++b)
      if (set[a] == set[b] || crosses_unchecked(set[a], set[b])) return false;
  return true;
}

bool compatible_with_all(const MDiagonal& d, std::span<const MDiagonal> set) {
  return std::none_of(set.begin(), set.end(),
                      [&](const MDiagonal& e) { return e == d || crosses_unchecked(d, e); });
}

// Vertices of the piece on the clockwise arc from `from` to `to`, bounded by
// the chord (from, to) and the diagonals in `chords`.
std::vector<int> arc_piece(const Polygon& p, std::span<const MDiagonal> chords, int from, int to) {
  std::vector<int> out{from};
  const int count = p.vertex_count();
  int v = from;
  while (v != to) {
    const int remaining = ((to - v) % count + count) % count;
    int next = p.wrap(v + 1);
    for (int step = remaining; step >= 2; --step) {
      const int w = p.wrap(v + step);
      const MDiagonal chord(v, w);
      if (std::find(chords.begin(), chords.end(), chord) != chords.end()) {
        next = w;
        break;
      }
    }
    out.push_back(next);
    v = next;
  }
  return out;
}

}  // namespace

bool crosses(const Polygon& p, const MDiagonal& a, const MDiagonal& b) {
  require_diagonal(p, a);
  require_diagonal(p, b);
  return crosses_unchecked(a, b);
}

bool is_angulation(const Polygon& p, std::span<const MDiagonal> diagonals) {
  for (const auto& d : diagonals)
    if (!is_m_diagonal(p, d)) return false;
  if (!noncrossing(diagonals)) return false;
  for (const auto& d : all_m_diagonals(p))
    if (compatible_with_all(d, diagonals)) return false;
  return true;
}

Angulation::Angulation(const Polygon& p, std::vector<MDiagonal> diagonals)
    : polygon_(p), diagonals_(std::move(diagonals)) {
  std::sort(diagonals_.begin(), diagonals_.end());
  if (!is_angulation(polygon_, diagonals_)) {
    throw InvalidQuiverError("not a maximal noncrossing set of m-diagonals");
  }
}

bool Angulation::contains(const MDiagonal& d) const {
  return std::binary_search(diagonals_.begin(), diagonals_.end(), d);
}

Angulation Angulation::replaced(const MDiagonal& removed, const MDiagonal& added) const {
  if (!contains(removed)) throw IllegalMoveError(to_string(removed) + " is not in the angulation");
  auto next = diagonals_;
  *std::find(next.begin(), next.end(), removed) = added;
  return Angulation(polygon_, std::move(next));
}

std::vector<MDiagonal> completions(const Polygon& p, std::span<const MDiagonal> partial) {
  for (const auto& d : partial) require_diagonal(p, d);
  if (!noncrossing(partial)) throw InvalidQuiverError("partial set contains crossing diagonals");
  std::vector<MDiagonal> out;
  std::vector<MDiagonal> trial(partial.begin(), partial.end());
  trial.emplace_back();
  for (const auto& d : all_m_diagonals(p)) {
    if (!compatible_with_all(d, partial)) continue;
    trial.back() = d;
    if (is_angulation(p, trial)) out.push_back(d);
  }
  return out;
}

std::vector<int> merged_region(const Angulation& a, const MDiagonal& d) {
  if (!a.contains(d)) throw IllegalMoveError(to_string(d) + " is not in the angulation");
  std::vector<MDiagonal> rest;
  for (const auto& e : a.diagonals())
    if (e != d) rest.push_back(e);
  const auto& p = a.polygon();
  auto cycle = arc_piece(p, rest, d.first(), d.second());
  const auto other = arc_piece(p, rest, d.second(), d.first());
  cycle.pop_back();
  cycle.insert(cycle.end(), other.begin(), other.end() - 1);
  return cycle;
}

MDiagonal next_complement(const Angulation& a, const MDiagonal& d) {
  const auto cycle = merged_region(a, d);
  const auto size = static_cast<std::ptrdiff_t>(cycle.size());
  const auto predecessor = [&](int v) {
    const auto pos = std::find(cycle.begin(), cycle.end(), v) - cycle.begin();
    return cycle[static_cast<std::size_t>((pos - 1 + size) % size)];
  };
  return MDiagonal(predecessor(d.first()), predecessor(d.second()));
}

std::vector<MDiagonal> flips(const Angulation& a, const MDiagonal& d) {
  std::vector<MDiagonal> out;
  Angulation current = a;
  MDiagonal at = d;
  for (int k = 0; k < a.polygon().m(); ++k) {
    const MDiagonal next = next_complement(current, at);
    current = current.replaced(at, next);
    at = next;
    out.push_back(next);
  }
  return out;
}

int exchange_distance(const Angulation& a, const MDiagonal& d, const MDiagonal& replacement) {
  const auto order = flips(a, d);
  const auto it = std::find(order.begin(), order.end(), replacement);
  if (it == order.end()) {
    throw IllegalMoveError(to_string(replacement) + " is not a flip of " + to_string(d));
  }
  return static_cast<int>(it - order.begin()) + 1;
}

// ---------------------------------------------------------------------------

std::size_t TranslationQuiver::index_of(const MDiagonal& d) const {
  const auto it = std::lower_bound(vertices.begin(), vertices.end(), d);
  if (it == vertices.end() || *it != d) throw UnknownVertexError(to_string(d) + " is not a vertex");
  return static_cast<std::size_t>(it - vertices.begin());
}

TranslationQuiver translation_quiver(const Polygon& p) {
  TranslationQuiver gamma{p, all_m_diagonals(p), {}, {}};
  const auto count = static_cast<Index>(gamma.vertices.size());
  gamma.arrows = MultiplicityMatrix<int>::Zero(count, count);
  const int m = p.m();
  for (Index x = 0; x < count; ++x) {
    const auto& d = gamma.vertices[static_cast<std::size_t>(x)];
    const int i = d.first();
    const int j = d.second();
    for (const auto& [a, b] : {std::pair{i, p.wrap(j + m)}, std::pair{p.wrap(i + m), j}}) {
      if (is_m_diagonal(p, a, b)) gamma.arrows(x, static_cast<Index>(gamma.index_of(MDiagonal(a, b)))) += 1;
    }
    gamma.tau.push_back(gamma.index_of(MDiagonal(p.wrap(i - m), p.wrap(j - m))));
  }
  return gamma;
}

bool satisfies_mesh(const TranslationQuiver& gamma) {
  const auto count = gamma.vertices.size();
  auto image = gamma.tau;
  std::sort(image.begin(), image.end());
  for (std::size_t k = 0; k < count; ++k)
    if (image[k] != k) return false;
  for (std::size_t x = 0; x < count; ++x)
    for (std::size_t y = 0; y < count; ++y)
      if (gamma.arrows(static_cast<Index>(x), static_cast<Index>(y)) !=
          gamma.arrows(static_cast<Index>(gamma.tau[y]), static_cast<Index>(x)))
        return false;
  return true;
}

std::vector<std::vector<std::size_t>> tau_orbits(const TranslationQuiver& gamma) {
  std::vector<bool> seen(gamma.vertices.size(), false);
  std::vector<std::vector<std::size_t>> orbits;
  for (std::size_t start = 0; start < gamma.vertices.size(); ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> orbit;
    for (std::size_t x = start; !seen[x]; x = gamma.tau[x]) {
      seen[x] = true;
      orbit.push_back(x);
    }
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

// ---------------------------------------------------------------------------

namespace {

// N <= 20 gives at most 170 diagonals.
using DiagonalSet = std::bitset<192>;

struct CompatibilityGraph {
  std::vector<MDiagonal> diagonals;
  std::vector<DiagonalSet> neighbours;  // noncrossing, distinct
};

CompatibilityGraph compatibility_graph(const Polygon& p) {
  if (p.vertex_count() > kMaxEnumerationVertices) {
    throw SizeLimitError("brute-force enumeration supports polygons with at most " +
                         std::to_string(kMaxEnumerationVertices) + " vertices");
  }
  CompatibilityGraph g{all_m_diagonals(p), {}};
  g.neighbours.assign(g.diagonals.size(), DiagonalSet{});
  for (std::size_t a = 0; a < g.diagonals.size(); ++a)
    for (std::size_t b = 0; b < g.diagonals.size(); ++b)
      if (a != b && !crosses_unchecked(g.diagonals[a], g.diagonals[b])) g.neighbours[a].set(b);
  return g;
}

// Bron-Kerbosch with pivoting; calls `report` once per maximal clique.
template <typename Report>
void maximal_cliques(const CompatibilityGraph& g, DiagonalSet& clique, DiagonalSet candidates,
                     DiagonalSet excluded, Report& report) {
  if (candidates.none() && excluded.none()) {
    report(clique);
    return;
  }
  const DiagonalSet pool = candidates | excluded;
  std::size_t pivot = 0;
  std::size_t best = 0;
  for (std::size_t u = pool._Find_first(); u < pool.size(); u = pool._Find_next(u)) {
    const auto score = (candidates & g.neighbours[u]).count();
    if (score >= best) {
      best = score;
      pivot = u;
    }
  }
  const DiagonalSet branch = candidates & ~g.neighbours[pivot];
  for (std::size_t v = branch._Find_first(); v < branch.size(); v = branch._Find_next(v)) {
    clique.set(v);
    maximal_cliques(g, clique, candidates & g.neighbours[v], excluded & g.neighbours[v], report);
    clique.reset(v);
    candidates.reset(v);
    excluded.set(v);
  }
}

DiagonalSet all_of(const CompatibilityGraph& g) {
  DiagonalSet s;
  for (std::size_t k = 0; k < g.diagonals.size(); ++k) s.set(k);
  return s;
}

std::vector<MDiagonal> members(const CompatibilityGraph& g, const DiagonalSet& s) {
  std::vector<MDiagonal> out;
  for (std::size_t k = s._Find_first(); k < s.size(); k = s._Find_next(k)) out.push_back(g.diagonals[k]);
  return out;
}

}  // namespace

void for_each_angulation(const Polygon& p,
                         const std::function<void(std::span<const MDiagonal>)>& visit) {
  const auto g = compatibility_graph(p);
  DiagonalSet clique;
  auto report = [&](const DiagonalSet& s) {
    const auto set = members(g, s);
    visit(set);
  };
  maximal_cliques(g, clique, all_of(g), DiagonalSet{}, report);
}

std::vector<Angulation> all_angulations(const Polygon& p) {
  std::vector<Angulation> out;
  for_each_angulation(p, [&](std::span<const MDiagonal> set) {
    out.emplace_back(p, std::vector<MDiagonal>(set.begin(), set.end()));
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t count_angulations(const Polygon& p, unsigned threads) {
  const auto g = compatibility_graph(p);
  // Split at the first level: the branch for diagonal v excludes the
  // diagonals of earlier branches.
  DiagonalSet candidates = all_of(g);
  DiagonalSet excluded;
  struct Branch {
    std::size_t vertex;
    DiagonalSet candidates;
    DiagonalSet excluded;
  };
  std::vector<Branch> branches;
  for (std::size_t v = 0; v < g.diagonals.size(); ++v) {
    branches.push_back({v, candidates, excluded});
    candidates.reset(v);
    excluded.set(v);
  }
  const auto run_branch = [&g](const Branch& b) {
    std::uint64_t found = 0;
    auto report = [&found](const DiagonalSet&) { ++found; };
    DiagonalSet clique;
    clique.set(b.vertex);
    maximal_cliques(g, clique, b.candidates & g.neighbours[b.vertex], b.excluded & g.neighbours[b.vertex],
                    report);
    return found;
  };
  if (threads <= 1) {
    std::uint64_t total = 0;
    for (const auto& b : branches) total += run_branch(b);
    return total;
  }
  std::vector<std::future<std::uint64_t>> parts;
  const std::size_t stride = threads;
  for (std::size_t w = 0; w < stride; ++w) {
    parts.push_back(std::async(std::launch::async, [&, w]() {
      std::uint64_t total = 0;
      for (std::size_t k = w; k < branches.size(); k += stride) total += run_branch(branches[k]);
      return total;
    }));
  }
  std::uint64_t total = 0;
  for (auto& part : parts) total += part.get();
  return total;
}

std::uint64_t fuss_catalan(int n, int m) {
  if (n < 1 || m < 0) throw std::invalid_argument("fuss_catalan requires n >= 1, m >= 0");
  // binom((m+1) n, n-1) by exact incremental products.
  const std::uint64_t top = static_cast<std::uint64_t>(m + 1) * static_cast<std::uint64_t>(n);
  unsigned __int128 binom = 1;
  for (std::uint64_t k = 1; k <= static_cast<std::uint64_t>(n - 1); ++k) {
    binom = binom * (top - k + 1) / k;
  }
  const unsigned __int128 result = binom / static_cast<unsigned>(n);
  if (result > std::numeric_limits<std::uint64_t>::max()) {
    throw std::overflow_error("Fuss-Catalan number exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(result);
}

FacetReport facet_checks(const Polygon& p) {
  const auto g = compatibility_graph(p);
  FacetReport report;
  report.expected_facet_size = static_cast<std::size_t>(p.n() - 1);
  report.expected_link = static_cast<std::uint64_t>(p.m() + 1);
  report.min_facet_size = std::numeric_limits<std::size_t>::max();
  report.min_ridge_size = std::numeric_limits<std::size_t>::max();
  report.min_link = std::numeric_limits<std::uint64_t>::max();

  auto on_facet = [&](const DiagonalSet& facet) {
    ++report.facets;
    const auto size = facet.count();
    report.min_facet_size = std::min(report.min_facet_size, size);
    report.max_facet_size = std::max(report.max_facet_size, size);
    for (std::size_t d = facet._Find_first(); d < facet.size(); d = facet._Find_next(d)) {
      DiagonalSet ridge = facet;
      ridge.reset(d);
      // Facets through the ridge are the ridge plus a maximal clique among
      // the diagonals compatible with every ridge member.
      DiagonalSet open = all_of(g) & ~ridge;
      for (std::size_t r = ridge._Find_first(); r < ridge.size(); r = ridge._Find_next(r)) {
        open &= g.neighbours[r];
      }
      std::uint64_t link = 0;
      DiagonalSet smallest;
      bool first = true;
      auto on_extension = [&](const DiagonalSet& ext) {
        ++link;
        const auto key = members(g, ext);
        if (first || key < members(g, smallest)) smallest = ext;
        first = false;
      };
      DiagonalSet clique;
      maximal_cliques(g, clique, open, DiagonalSet{}, on_extension);
      report.min_link = std::min(report.min_link, link);
      report.max_link = std::max(report.max_link, link);
      // Count each ridge once: from the facet whose extension is smallest.
      DiagonalSet own;
      own.set(d);
      if (smallest == own) {
        ++report.ridges;
        report.min_ridge_size = std::min(report.min_ridge_size, ridge.count());
        report.max_ridge_size = std::max(report.max_ridge_size, ridge.count());
      }
    }
  };
  DiagonalSet clique;
  maximal_cliques(g, clique, all_of(g), DiagonalSet{}, on_facet);
  return report;
}

}  // namespace mcluster

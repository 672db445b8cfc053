#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "mcluster/mutation.hpp"

namespace oracle {

using mcluster::MDiagonal;
using mcluster::Multiplicity;

namespace {

Index order(const Layers& q) { return q.empty() ? 0 : q.front().rows(); }

// (layer, multiplicity, direction) for every arrow touching v, sorted.
std::vector<std::int64_t> signature(const Layers& q, Index v) {
  std::vector<std::int64_t> sig;
  for (std::size_t c = 0; c < q.size(); ++c) {
    for (Index u = 0; u < order(q); ++u) {
      if (q[c](v, u) > 0) sig.push_back(static_cast<std::int64_t>(c) * 1000003 + q[c](v, u) * 2);
      if (q[c](u, v) > 0) sig.push_back(static_cast<std::int64_t>(c) * 1000003 + q[c](u, v) * 2 + 1);
    }
  }
  std::sort(sig.begin(), sig.end());
  return sig;
}

std::vector<std::int64_t> global_invariant(const Layers& q) {
  std::vector<std::vector<std::int64_t>> sigs;
  for (Index v = 0; v < order(q); ++v) sigs.push_back(signature(q, v));
  std::sort(sigs.begin(), sigs.end());
  std::vector<std::int64_t> flat{order(q), static_cast<std::int64_t>(q.size())};
  for (const auto& s : sigs) {
    flat.push_back(-1);
    flat.insert(flat.end(), s.begin(), s.end());
  }
  return flat;
}

bool extend(const Layers& a, const Layers& b, const std::vector<std::vector<std::int64_t>>& sa,
            const std::vector<std::vector<std::int64_t>>& sb, std::vector<Index>& map,
            std::vector<bool>& used, Index next) {
  const Index n = order(a);
  if (next == n) return true;
  for (Index w = 0; w < n; ++w) {
    if (used[w] || sa[next] != sb[w]) continue;
    bool ok = true;
    for (Index u = 0; u < next && ok; ++u) {
      for (std::size_t c = 0; c < a.size() && ok; ++c) {
        ok = a[c](next, u) == b[c](w, map[u]) && a[c](u, next) == b[c](map[u], w);
      }
    }
    if (!ok) continue;
    map[next] = w;
    used[w] = true;
    if (extend(a, b, sa, sb, map, used, next + 1)) return true;
    used[w] = false;
  }
  return false;
}

Layers layers_of(const PlainQuiver& q) { return {q.arrows()}; }

// FZ mutation written out entry by entry.
Layers fz_step(const Layers& q, Index v) {
  const auto& a = q.front();
  const Index n = a.rows();
  auto out = a;
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      if (i == v || j == v) {
        out(i, j) = a(j, i);
      } else {
        const Multiplicity x = a(i, j) - a(j, i) + a(i, v) * a(v, j) - a(j, v) * a(v, i);
        out(i, j) = x > 0 ? x : 0;
      }
    }
  }
  return {out};
}

}  // namespace

bool isomorphic(const Layers& a, const Layers& b) {
  if (a.size() != b.size() || order(a) != order(b)) return false;
  const Index n = order(a);
  std::vector<std::vector<std::int64_t>> sa, sb;
  for (Index v = 0; v < n; ++v) {
    sa.push_back(signature(a, v));
    sb.push_back(signature(b, v));
  }
  auto ca = sa, cb = sb;
  std::sort(ca.begin(), ca.end());
  std::sort(cb.begin(), cb.end());
  if (ca != cb) return false;
  std::vector<Index> map(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  return extend(a, b, sa, sb, map, used, 0);
}

bool isomorphic(const ColouredQuiver& a, const ColouredQuiver& b) {
  return a.m() == b.m() && isomorphic(a.layers(), b.layers());
}

bool isomorphic(const PlainQuiver& a, const PlainQuiver& b) {
  return isomorphic(layers_of(a), layers_of(b));
}

bool IsoSet::insert(const Layers& q) {
  auto& bucket = buckets_[global_invariant(q)];
  for (const auto& r : bucket)
    if (isomorphic(r, q)) return false;
  bucket.push_back(q);
  ++count_;
  return true;
}

namespace {

template <typename Step>
long explore(const Layers& seed, Step step, std::size_t cap, IsoSet* gabriel,
             std::size_t gabriel_layer) {
  IsoSet seen;
  seen.insert(seed);
  std::deque<Layers> queue{seed};
  while (!queue.empty()) {
    const Layers q = std::move(queue.front());
    queue.pop_front();
    if (gabriel) gabriel->insert({q[gabriel_layer]});
    for (Index v = 0; v < order(q); ++v) {
      Layers next = step(q, v);
      if (seen.insert(next)) {
        if (seen.size() > cap) return -1;
        queue.push_back(std::move(next));
      }
    }
  }
  return static_cast<long>(seen.size());
}

long class_walk(const ColouredQuiver& seed, std::size_t cap, IsoSet* gabriel) {
  if (seed.m() == 1) return explore({seed.layer(0)}, fz_step, cap, gabriel, 0);
  const int m = seed.m();
  std::vector<std::string> labels = seed.labels();
  auto step = [m, &labels](const Layers& q, Index v) {
    return mcluster::mutate_formula(ColouredQuiver(m, labels, q), v).layers();
  };
  return explore(seed.layers(), step, cap, gabriel, 0);
}

}  // namespace

long class_size(const ColouredQuiver& seed, std::size_t cap) {
  return class_walk(seed, cap, nullptr);
}

std::size_t gabriel_image_count(const ColouredQuiver& seed) {
  IsoSet images;
  class_walk(seed, 1000000, &images);
  return images.size();
}

// ---- random inputs ----------------------------------------------------------

PlainQuiver random_acyclic(std::mt19937& rng, int n, bool extra_edge) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> parent(0, v - 1);
    edges.emplace_back(parent(rng), v);
  }
  if (extra_edge && n >= 3) {
    std::vector<std::pair<int, int>> missing;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (std::find(edges.begin(), edges.end(), std::pair{i, j}) == edges.end() &&
            std::find(edges.begin(), edges.end(), std::pair{j, i}) == edges.end())
          missing.emplace_back(i, j);
    if (!missing.empty()) {
      std::uniform_int_distribution<std::size_t> pick(0, missing.size() - 1);
      edges.push_back(missing[pick(rng)]);
    }
  }
  std::vector<int> rank(static_cast<std::size_t>(n));
  std::iota(rank.begin(), rank.end(), 0);
  std::shuffle(rank.begin(), rank.end(), rng);
  mcluster::MultiplicityMatrix<Multiplicity> a = decltype(a)::Zero(n, n);
  for (auto [i, j] : edges) {
    if (rank[i] < rank[j]) {
      a(i, j) = 1;
    } else {
      a(j, i) = 1;
    }
  }
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back("v" + std::to_string(i));
  return PlainQuiver(labels, a);
}

ColouredQuiver random_reachable(std::mt19937& rng, int max_n, int max_m, int max_walk) {
  const int n = std::uniform_int_distribution<int>(1, max_n)(rng);
  const int m = std::uniform_int_distribution<int>(1, max_m)(rng);
  const bool extra = std::bernoulli_distribution(0.3)(rng);
  auto q = mcluster::seed_from_acyclic(random_acyclic(rng, n, extra), m);
  const int walk = std::uniform_int_distribution<int>(0, max_walk)(rng);
  std::uniform_int_distribution<Index> vertex(0, n - 1);
  for (int k = 0; k < walk; ++k) q = mcluster::mutate_procedural(q, vertex(rng));
  return q;
}

ColouredQuiver permuted(const ColouredQuiver& q, const std::vector<Index>& perm) {
  const Index n = q.size();
  std::vector<std::string> labels;
  for (Index k = 0; k < n; ++k) labels.push_back(q.labels()[perm[k]]);
  Layers layers;
  for (int c = 0; c <= q.m(); ++c) {
    auto layer = q.layer(c);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) layer(i, j) = q(c, perm[i], perm[j]);
    layers.push_back(layer);
  }
  return ColouredQuiver(q.m(), labels, layers);
}

ColouredQuiver by_label(const ColouredQuiver& q) {
  std::vector<Index> perm(static_cast<std::size_t>(q.size()));
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(),
            [&](Index a, Index b) { return q.labels()[a] < q.labels()[b]; });
  return permuted(q, perm);
}

// ---- polygon ----------------------------------------------------------------

std::vector<MDiagonal> diagonals_by_piece_size(int m, int n) {
  const int N = m * n + 2;
  std::vector<MDiagonal> out;
  auto piece_ok = [m](int vertices) {
    if (vertices < m + 2) return false;
    return (vertices - 2) % m == 0;
  };
  for (int i = 1; i <= N; ++i) {
    for (int j = i + 1; j <= N; ++j) {
      const int side_a = j - i + 1;
      const int side_b = N - (j - i) + 1;
      if (piece_ok(side_a) && piece_ok(side_b)) out.emplace_back(i, j);
    }
  }
  return out;
}

bool separated(const MDiagonal& a, const MDiagonal& b) {
  auto strictly_inside = [&](int v) { return a.first() < v && v < a.second(); };
  if (a.has_endpoint(b.first()) || a.has_endpoint(b.second())) return false;
  return strictly_inside(b.first()) != strictly_inside(b.second());
}

namespace {

bool noncrossing_with(const MDiagonal& d, const std::vector<MDiagonal>& set) {
  return std::none_of(set.begin(), set.end(), [&](const MDiagonal& e) { return separated(d, e); });
}

bool maximal(const std::vector<MDiagonal>& all, const std::vector<MDiagonal>& set) {
  for (const auto& d : all) {
    if (std::find(set.begin(), set.end(), d) != set.end()) continue;
    if (noncrossing_with(d, set)) return false;
  }
  return true;
}

void grow(const std::vector<MDiagonal>& all, std::size_t at, std::vector<MDiagonal>& current,
          std::vector<std::vector<MDiagonal>>& out) {
  if (at == all.size()) {
    if (maximal(all, current)) out.push_back(current);
    return;
  }
  if (noncrossing_with(all[at], current)) {
    current.push_back(all[at]);
    grow(all, at + 1, current, out);
    current.pop_back();
  }
  grow(all, at + 1, current, out);
}

}  // namespace

std::vector<MDiagonal> complements(int m, int n, const std::vector<MDiagonal>& partial) {
  const auto all = diagonals_by_piece_size(m, n);
  std::vector<MDiagonal> out;
  for (const auto& d : all) {
    if (std::find(partial.begin(), partial.end(), d) != partial.end()) continue;
    if (!noncrossing_with(d, partial)) continue;
    auto extended = partial;
    extended.push_back(d);
    if (maximal(all, extended)) out.push_back(d);
  }
  return out;
}

std::vector<std::vector<MDiagonal>> maximal_sets(int m, int n) {
  const auto all = diagonals_by_piece_size(m, n);
  std::vector<std::vector<MDiagonal>> out;
  std::vector<MDiagonal> current;
  grow(all, 0, current, out);
  return out;
}

std::vector<std::vector<int>> pieces(int m, int n, const std::vector<MDiagonal>& diags) {
  const int N = m * n + 2;
  std::vector<std::vector<int>> out(1);
  for (int v = 1; v <= N; ++v) out.front().push_back(v);
  for (const auto& d : diags) {
    for (std::size_t k = 0; k < out.size(); ++k) {
      auto& piece = out[k];
      const bool has_a = std::binary_search(piece.begin(), piece.end(), d.first());
      const bool has_b = std::binary_search(piece.begin(), piece.end(), d.second());
      if (!has_a || !has_b) continue;
      std::vector<int> inner, outer;
      for (int v : piece) {
        if (v >= d.first() && v <= d.second()) inner.push_back(v);
        if (v <= d.first() || v >= d.second()) outer.push_back(v);
      }
      if (inner.size() < 3 || outer.size() < 3) continue;
      piece = std::move(inner);
      out.push_back(std::move(outer));
      break;
    }
  }
  return out;
}

ColouredQuiver geometric_quiver(int m, int n, const std::vector<MDiagonal>& diags) {
  auto sorted = diags;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::string> labels;
  for (const auto& d : sorted) labels.push_back(mcluster::to_string(d));
  ColouredQuiver q(m, labels);
  auto position = [&](const MDiagonal& d) -> Index {
    return std::find(sorted.begin(), sorted.end(), d) - sorted.begin();
  };
  for (const auto& piece : pieces(m, n, sorted)) {
    const int L = static_cast<int>(piece.size());
    std::vector<int> at;  // edge positions holding a diagonal
    for (int k = 0; k < L; ++k) {
      const MDiagonal e(piece[k], piece[(k + 1) % L]);
      if (std::binary_search(sorted.begin(), sorted.end(), e)) at.push_back(k);
    }
    for (int p : at) {
      for (int r : at) {
        if (p == r) continue;
        const MDiagonal ep(piece[p], piece[(p + 1) % L]);
        const MDiagonal er(piece[r], piece[(r + 1) % L]);
        q.add_arrow(position(ep), position(er), ((p - r - 1) % L + L) % L);
      }
    }
  }
  return q;
}

}  // namespace oracle

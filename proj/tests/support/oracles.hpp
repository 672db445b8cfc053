#pragma once

// Reference implementations used only by tests. Each one is written without
// calling the library routine it is meant to check.

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "mcluster/coloured_quiver.hpp"
#include "mcluster/polygon.hpp"

namespace oracle {

using mcluster::ColouredQuiver;
using mcluster::Index;
using mcluster::PlainQuiver;
using Layers = std::vector<mcluster::MultiplicityMatrix<mcluster::Multiplicity>>;

// ---- isomorphism by backtracking --------------------------------------------

/// Vertex bijection preserving every layer, found by backtracking over
/// vertices bucketed by their incidence signature.
bool isomorphic(const Layers& a, const Layers& b);
bool isomorphic(const ColouredQuiver& a, const ColouredQuiver& b);
bool isomorphic(const PlainQuiver& a, const PlainQuiver& b);

/// Representatives up to isomorphism; membership via isomorphic().
class IsoSet {
 public:
  /// True if `q` was new.
  bool insert(const Layers& q);
  std::size_t size() const { return count_; }

 private:
  std::map<std::vector<std::int64_t>, std::vector<Layers>> buckets_;
  std::size_t count_ = 0;
};

/// Number of isomorphism classes reachable from `seed`, or -1 if more than
/// `cap` classes are found. m = 1 seeds are explored at FZ level on the
/// colour-0 quiver; m > 1 with the closed mutation formula.
long class_size(const ColouredQuiver& seed, std::size_t cap = 200000);

/// Isomorphism classes of colour-0 quivers over the class of `seed`.
std::size_t gabriel_image_count(const ColouredQuiver& seed);

// ---- random inputs ----------------------------------------------------------

/// Connected acyclic quiver on n vertices: a random tree, optionally with one
/// extra edge, oriented by a random vertex order. No multi-edges.
PlainQuiver random_acyclic(std::mt19937& rng, int n, bool extra_edge);

/// Seed from random_acyclic followed by a random walk of mutations.
ColouredQuiver random_reachable(std::mt19937& rng, int max_n, int max_m, int max_walk);

/// Same quiver with vertices reordered by label.
ColouredQuiver by_label(const ColouredQuiver& q);

/// Vertex perm[k] of q becomes vertex k; labels move with their vertex.
ColouredQuiver permuted(const ColouredQuiver& q, const std::vector<Index>& perm);

// ---- polygon ----------------------------------------------------------------

/// Diagonals by the piece-size condition: both sides are (m t + 2)-gons.
std::vector<mcluster::MDiagonal> diagonals_by_piece_size(int m, int n);

/// Crossing by cyclic separation of endpoints.
bool separated(const mcluster::MDiagonal& a, const mcluster::MDiagonal& b);

/// Complements of a noncrossing set by trying every diagonal and checking
/// maximality directly.
std::vector<mcluster::MDiagonal> complements(int m, int n,
                                             const std::vector<mcluster::MDiagonal>& partial);

/// All maximal noncrossing sets by plain recursion over the sorted diagonal
/// list (include/exclude), for small polygons.
std::vector<std::vector<mcluster::MDiagonal>> maximal_sets(int m, int n);

/// Pieces of an angulation as vertex sets obtained by splitting the polygon
/// along each diagonal in turn; each set is ascending.
std::vector<std::vector<int>> pieces(int m, int n, const std::vector<mcluster::MDiagonal>& diags);

/// Coloured quiver read off the geometry: inside each (m+2)-gon piece with
/// clockwise edges e_0..e_{m+1}, two diagonals at edge positions p != q give
/// an arrow e_p -> e_q of colour (p - q - 1) mod (m + 2). Labels are the
/// diagonal strings in sorted diagonal order.
ColouredQuiver geometric_quiver(int m, int n, const std::vector<mcluster::MDiagonal>& diags);

}  // namespace oracle

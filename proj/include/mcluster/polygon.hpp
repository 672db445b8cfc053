#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mcluster/coloured_quiver.hpp"

namespace mcluster {

/// The (m*n + 2)-gon with vertices 1..N in clockwise order. Its m-diagonals
/// model the indecomposables of the m-cluster category of type A_{n-1}.
class Polygon {
 public:
  Polygon(int m, int n);

  int m() const { return m_; }
  int n() const { return n_; }
  int vertex_count() const { return m_ * n_ + 2; }
  int rank() const { return n_ - 1; }

  /// Maps any integer onto 1..N cyclically.
  int wrap(int vertex) const;

  friend bool operator==(const Polygon&, const Polygon&) = default;

 private:
  int m_;
  int n_;
};

/// Unordered pair of polygon vertices, stored smaller endpoint first.
class MDiagonal {
 public:
  MDiagonal() = default;
  MDiagonal(int a, int b) : first_(a < b ? a : b), second_(a < b ? b : a) {}

  int first() const { return first_; }
  int second() const { return second_; }
  bool has_endpoint(int v) const { return v == first_ || v == second_; }

  friend auto operator<=>(const MDiagonal&, const MDiagonal&) = default;

 private:
  int first_ = 0;
  int second_ = 0;
};

/// "(i,j)"
std::string to_string(const MDiagonal& d);
MDiagonal parse_diagonal(std::string_view text);

bool is_m_diagonal(const Polygon& p, int i, int j);
inline bool is_m_diagonal(const Polygon& p, const MDiagonal& d) {
  return is_m_diagonal(p, d.first(), d.second());
}

/// Sorted, duplicate-free.
std::vector<MDiagonal> all_m_diagonals(const Polygon& p);

/// Interior intersection; diagonals sharing an endpoint do not cross.
bool crosses(const Polygon& p, const MDiagonal& a, const MDiagonal& b);

/// A maximal set of pairwise noncrossing m-diagonals.
class Angulation {
 public:
  /// Throws InvalidQuiverError unless the set is a maximal noncrossing set of
  /// m-diagonals of p.
  Angulation(const Polygon& p, std::vector<MDiagonal> diagonals);

  const Polygon& polygon() const { return polygon_; }
  const std::vector<MDiagonal>& diagonals() const { return diagonals_; }
  std::size_t size() const { return diagonals_.size(); }
  bool contains(const MDiagonal& d) const;

  /// Same angulation with `removed` swapped for `added`.
  Angulation replaced(const MDiagonal& removed, const MDiagonal& added) const;

  friend bool operator==(const Angulation& a, const Angulation& b) {
    return a.polygon_ == b.polygon_ && a.diagonals_ == b.diagonals_;
  }
  friend bool operator<(const Angulation& a, const Angulation& b) {
    return a.diagonals_ < b.diagonals_;
  }

 private:
  Polygon polygon_;
  std::vector<MDiagonal> diagonals_;
};

/// True if the set is pairwise noncrossing and no m-diagonal can be added.
bool is_angulation(const Polygon& p, std::span<const MDiagonal> diagonals);

/// All m-diagonals d outside `partial` such that partial + {d} is an
/// angulation. Sorted.
std::vector<MDiagonal> completions(const Polygon& p, std::span<const MDiagonal> partial);

/// Boundary cycle (clockwise, starting at d.first()) of the region obtained
/// by deleting d from a.
std::vector<int> merged_region(const Angulation& a, const MDiagonal& d);

/// Successor of d in its exchange cycle: both endpoints step to their
/// clockwise predecessors on the boundary of merged_region(a, d).
MDiagonal next_complement(const Angulation& a, const MDiagonal& d);

/// The m replacements of d, in exchange order starting from next_complement.
std::vector<MDiagonal> flips(const Angulation& a, const MDiagonal& d);

/// Position (1..m) of `replacement` in the exchange order of d.
int exchange_distance(const Angulation& a, const MDiagonal& d, const MDiagonal& replacement);

// ---------------------------------------------------------------------------
// Stable translation quiver of m-diagonals.
// ---------------------------------------------------------------------------

/// Vertices are the m-diagonals; arrows (i,j) -> (i,j+m) and (i,j) -> (i+m,j)
/// whenever the target is an m-diagonal; tau(i,j) = (i-m, j-m).
struct TranslationQuiver {
  Polygon polygon;
  std::vector<MDiagonal> vertices;
  MultiplicityMatrix<int> arrows;
  std::vector<std::size_t> tau;

  std::size_t index_of(const MDiagonal& d) const;
  int arrow_count() const { return arrows.sum(); }
};

TranslationQuiver translation_quiver(const Polygon& p);

/// #arrows(x -> y) == #arrows(tau y -> x) for all x, y, and tau is a bijection.
bool satisfies_mesh(const TranslationQuiver& gamma);

/// tau-orbits, each listed from its smallest member, sorted.
std::vector<std::vector<std::size_t>> tau_orbits(const TranslationQuiver& gamma);

// ---------------------------------------------------------------------------
// Brute-force enumeration.
// ---------------------------------------------------------------------------

inline constexpr int kMaxEnumerationVertices = 20;

/// Visits every maximal noncrossing set of m-diagonals exactly once
/// (Bron-Kerbosch with pivoting on the compatibility graph). N <= 20.
void for_each_angulation(const Polygon& p,
                         const std::function<void(std::span<const MDiagonal>)>& visit);

std::vector<Angulation> all_angulations(const Polygon& p);

/// Exact count by enumeration; top-level branches may run on `threads` workers.
std::uint64_t count_angulations(const Polygon& p, unsigned threads = 1);

/// binom((m+1) n, n-1) / n
std::uint64_t fuss_catalan(int n, int m);

struct FacetReport {
  std::uint64_t facets = 0;
  std::size_t min_facet_size = 0;
  std::size_t max_facet_size = 0;
  /// Distinct sets obtained by removing one diagonal from a facet.
  std::uint64_t ridges = 0;
  std::size_t min_ridge_size = 0;
  std::size_t max_ridge_size = 0;
  /// Number of facets containing a ridge.
  std::uint64_t min_link = 0;
  std::uint64_t max_link = 0;
  std::size_t expected_facet_size = 0;  // n - 1
  std::uint64_t expected_link = 0;      // m + 1

  bool sizes_hold() const {
    return min_facet_size == expected_facet_size && max_facet_size == expected_facet_size;
  }
  bool links_hold() const { return min_link == expected_link && max_link == expected_link; }
};

FacetReport facet_checks(const Polygon& p);

}  // namespace mcluster

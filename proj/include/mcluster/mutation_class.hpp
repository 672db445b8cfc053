#pragma once

#include <cstddef>
#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include "mcluster/canonical.hpp"
#include "mcluster/coloured_quiver.hpp"

namespace mcluster {

struct EnumerationOptions {
  /// Budget in expansions (single-vertex mutation applications).
  std::size_t limit = 100000;
  unsigned threads = 1;
  /// Visit vertices n-1..0 instead of 0..n-1 when expanding.
  bool reverse_vertex_order = false;
  CanonicalOptions canonical{};
};

/// Quivers reachable from a seed by coloured mutation, up to isomorphism.
struct MutationClass {
  std::string seed;
  int m = 0;
  std::set<CanonicalKey> keys;
  /// Closed under mutation at every vertex of every member.
  bool complete = false;
  std::size_t explored = 0;
  std::size_t limit = 0;
  /// Mutations whose multiplicities overflowed; any such result leaves the class open.
  std::size_t unrepresentable = 0;
  /// Members whose expansions were cut off by the budget or by overflow.
  std::vector<CanonicalKey> frontier;

  std::size_t size() const { return keys.size(); }
};

MutationClass enumerate_class(const ColouredQuiver& seed, const EnumerationOptions& options);
MutationClass enumerate_class(const ColouredQuiver& seed, std::size_t limit);

/// Canonical keys of the colour-0 subquivers over a complete class.
std::set<CanonicalKey> gabriel_images(const MutationClass& cls);

/// Header line {"seed", "m", "complete", "explored", "limit"}, then one key
/// per line in sorted order.
void write_class(std::ostream& out, const MutationClass& cls);
MutationClass read_class(std::istream& in);

}  // namespace mcluster

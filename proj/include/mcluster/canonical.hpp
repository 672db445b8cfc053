#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>

#include "mcluster/coloured_quiver.hpp"

namespace mcluster {

/// Isomorphism-invariant fingerprint of a quiver: the serialized arrow list
/// under the vertex relabelling that makes it lexicographically smallest.
/// Colours are never permuted.
class CanonicalKey {
 public:
  CanonicalKey() = default;
  explicit CanonicalKey(std::string bytes) : bytes_(std::move(bytes)) {}

  const std::string& str() const { return bytes_; }

  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;

 private:
  std::string bytes_;
};

struct CanonicalOptions {
  Index max_vertices = 10;
};

CanonicalKey canonical_key(const ColouredQuiver& q, const CanonicalOptions& options = {});

/// Keys of plain quivers carry their own prefix and never collide with
/// coloured keys.
CanonicalKey canonical_key(const PlainQuiver& q, const CanonicalOptions& options = {});

/// Rebuilds the canonical representative; vertices are labelled "1".."n".
ColouredQuiver quiver_from_key(const CanonicalKey& key);
PlainQuiver plain_quiver_from_key(const CanonicalKey& key);

}  // namespace mcluster

template <>
struct std::hash<mcluster::CanonicalKey> {
  std::size_t operator()(const mcluster::CanonicalKey& key) const noexcept {
    return std::hash<std::string>{}(key.str());
  }
};

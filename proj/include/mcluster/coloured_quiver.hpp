#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <type_traits>
#include <unordered_set>
#include <utility>
#include <vector>

#include "mcluster/errors.hpp"

namespace mcluster {

using Eigen::Index;

/// Square matrix of arrow multiplicities; entry (i, j) counts arrows i -> j.
template <typename Scalar>
using MultiplicityMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

namespace detail {

inline void check_unique_labels(const std::vector<std::string>& labels) {
  std::unordered_set<std::string> seen;
  for (const auto& label : labels) {
    if (!seen.insert(label).second) {
      throw InvalidQuiverError("duplicate vertex label '" + label + "'");
    }
  }
}

inline Index find_label(const std::vector<std::string>& labels, const std::string& label) {
  const auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw UnknownVertexError("unknown vertex '" + label + "'");
  return static_cast<Index>(it - labels.begin());
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Plain quivers (no loops, no oriented 2-cycles).
// ---------------------------------------------------------------------------

template <typename Scalar>
class BasicPlainQuiver {
  static_assert(std::is_integral_v<Scalar> && std::is_signed_v<Scalar>,
                "multiplicities must be a signed integral type");

 public:
  using Matrix = MultiplicityMatrix<Scalar>;

  BasicPlainQuiver() = default;

  BasicPlainQuiver(std::vector<std::string> labels, Matrix arrows)
      : labels_(std::move(labels)), arrows_(std::move(arrows)) {
    const auto n = static_cast<Index>(labels_.size());
    if (arrows_.rows() != n || arrows_.cols() != n) {
      throw InvalidQuiverError("arrow matrix does not match vertex count");
    }
    detail::check_unique_labels(labels_);
    for (Index i = 0; i < n; ++i) {
      if (arrows_(i, i) != 0) throw InvalidQuiverError("loop at vertex '" + labels_[i] + "'");
      for (Index j = 0; j < n; ++j) {
        if (arrows_(i, j) < 0) throw InvalidQuiverError("negative multiplicity");
        if (arrows_(i, j) > 0 && arrows_(j, i) > 0) {
          throw InvalidQuiverError("oriented 2-cycle between '" + labels_[i] + "' and '" +
                                   labels_[j] + "'");
        }
      }
    }
  }

  /// Vertices 1..n labelled by their number; each pair (i, j) is one arrow.
  static BasicPlainQuiver numbered(Index n, std::span<const std::pair<Index, Index>> arrows) {
    std::vector<std::string> labels;
    for (Index i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    Matrix q = Matrix::Zero(n, n);
    for (const auto& [from, to] : arrows) {
      if (from < 1 || from > n || to < 1 || to > n) {
        throw UnknownVertexError("arrow endpoint out of range");
      }
      q(from - 1, to - 1) += 1;
    }
    return BasicPlainQuiver(std::move(labels), std::move(q));
  }

  static BasicPlainQuiver numbered(Index n, std::initializer_list<std::pair<Index, Index>> arrows) {
    return numbered(n, std::span<const std::pair<Index, Index>>(arrows.begin(), arrows.size()));
  }

  Index size() const { return static_cast<Index>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const Matrix& arrows() const { return arrows_; }
  Scalar operator()(Index i, Index j) const { return arrows_(i, j); }
  Index index_of(const std::string& label) const { return detail::find_label(labels_, label); }

  Scalar arrow_count() const { return arrows_.sum(); }

  bool is_acyclic() const {
    const Index n = size();
    std::vector<Index> indegree(static_cast<std::size_t>(n), 0);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j)
        if (arrows_(i, j) > 0) ++indegree[static_cast<std::size_t>(j)];
    std::vector<Index> ready;
    for (Index i = 0; i < n; ++i)
      if (indegree[static_cast<std::size_t>(i)] == 0) ready.push_back(i);
    Index removed = 0;
    while (!ready.empty()) {
      const Index i = ready.back();
      ready.pop_back();
      ++removed;
      for (Index j = 0; j < n; ++j)
        if (arrows_(i, j) > 0 && --indegree[static_cast<std::size_t>(j)] == 0) ready.push_back(j);
    }
    return removed == n;
  }

  bool is_connected() const {
    const Index n = size();
    if (n == 0) return false;
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<Index> stack{0};
    seen[0] = true;
    Index reached = 1;
    while (!stack.empty()) {
      const Index i = stack.back();
      stack.pop_back();
      for (Index j = 0; j < n; ++j) {
        if ((arrows_(i, j) > 0 || arrows_(j, i) > 0) && !seen[static_cast<std::size_t>(j)]) {
          seen[static_cast<std::size_t>(j)] = true;
          ++reached;
          stack.push_back(j);
        }
      }
    }
    return reached == n;
  }

  friend bool operator==(const BasicPlainQuiver& a, const BasicPlainQuiver& b) {
    return a.labels_ == b.labels_ && a.arrows_ == b.arrows_;
  }

 private:
  std::vector<std::string> labels_;
  Matrix arrows_;
};

// ---------------------------------------------------------------------------
// Coloured quivers.
// ---------------------------------------------------------------------------

template <typename Scalar>
struct BasicColouredArrow {
  std::string from;
  std::string to;
  int colour = 0;
  Scalar mult = 1;

  friend bool operator==(const BasicColouredArrow&, const BasicColouredArrow&) = default;
};

/// An m-coloured multi-quiver. Colours live in Z/(m+1); layer c holds the
/// multiplicities of colour-c arrows. Loops and out-of-range colours are
/// rejected at construction; the tilting-object properties (monochromatic,
/// symmetric) are checked separately by validate().
template <typename Scalar>
class BasicColouredQuiver {
  static_assert(std::is_integral_v<Scalar> && std::is_signed_v<Scalar>,
                "multiplicities must be a signed integral type");

 public:
  using Matrix = MultiplicityMatrix<Scalar>;
  using Arrow = BasicColouredArrow<Scalar>;

  BasicColouredQuiver() = default;

  /// Arrowless quiver.
  BasicColouredQuiver(int m, std::vector<std::string> labels)
      : m_(m), labels_(std::move(labels)) {
    if (m_ < 0) throw InvalidQuiverError("colour parameter m must be non-negative");
    detail::check_unique_labels(labels_);
    const auto n = size();
    layers_.assign(static_cast<std::size_t>(m_ + 1), Matrix::Zero(n, n));
  }

  BasicColouredQuiver(int m, std::vector<std::string> labels, std::vector<Matrix> layers)
      : m_(m), labels_(std::move(labels)), layers_(std::move(layers)) {
    if (m_ < 0) throw InvalidQuiverError("colour parameter m must be non-negative");
    detail::check_unique_labels(labels_);
    if (layers_.size() != static_cast<std::size_t>(m_ + 1)) {
      throw InvalidQuiverError("expected one layer per colour 0..m");
    }
    const auto n = size();
    for (const auto& layer : layers_) {
      if (layer.rows() != n || layer.cols() != n) {
        throw InvalidQuiverError("layer does not match vertex count");
      }
      if ((layer.array() < 0).any()) throw InvalidQuiverError("negative multiplicity");
      if ((layer.diagonal().array() != 0).any()) throw InvalidQuiverError("loops are not allowed");
    }
  }

  static BasicColouredQuiver from_arrows(int m, std::vector<std::string> labels,
                                         std::span<const Arrow> arrows) {
    BasicColouredQuiver q(m, std::move(labels));
    for (const auto& a : arrows) q.add_arrow(a.from, a.to, a.colour, a.mult);
    return q;
  }

  static BasicColouredQuiver from_arrows(int m, std::vector<std::string> labels,
                                         std::initializer_list<Arrow> arrows) {
    return from_arrows(m, std::move(labels), std::span<const Arrow>(arrows.begin(), arrows.size()));
  }

  void add_arrow(const std::string& from, const std::string& to, int colour, Scalar mult = 1) {
    add_arrow(index_of(from), index_of(to), colour, mult);
  }

  void add_arrow(Index from, Index to, int colour, Scalar mult = 1) {
    if (colour < 0 || colour > m_) {
      throw InvalidQuiverError("colour " + std::to_string(colour) + " outside 0.." +
                               std::to_string(m_));
    }
    if (from == to) throw InvalidQuiverError("loop at vertex '" + labels_[from] + "'");
    if (mult < 0) throw InvalidQuiverError("negative multiplicity");
    layers_[static_cast<std::size_t>(colour)](from, to) += mult;
  }

  int m() const { return m_; }
  int colour_count() const { return m_ + 1; }
  Index size() const { return static_cast<Index>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const Matrix& layer(int colour) const { return layers_[static_cast<std::size_t>(colour)]; }
  const std::vector<Matrix>& layers() const { return layers_; }

  /// q_ij^(c)
  Scalar operator()(int colour, Index i, Index j) const {
    return layers_[static_cast<std::size_t>(colour)](i, j);
  }

  Index index_of(const std::string& label) const { return detail::find_label(labels_, label); }

  std::optional<Index> find(const std::string& label) const {
    const auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<Index>(it - labels_.begin());
  }

  /// Arrows ordered by (source position, target position, colour).
  std::vector<Arrow> arrows() const {
    std::vector<Arrow> out;
    for (Index i = 0; i < size(); ++i)
      for (Index j = 0; j < size(); ++j)
        for (int c = 0; c <= m_; ++c)
          if (const Scalar k = (*this)(c, i, j); k > 0) out.push_back({labels_[i], labels_[j], c, k});
    return out;
  }

  Scalar arrow_count() const {
    Scalar total = 0;
    for (const auto& layer : layers_) total += layer.sum();
    return total;
  }

  Scalar max_multiplicity() const {
    Scalar best = 0;
    for (const auto& layer : layers_)
      if (layer.size() > 0) best = std::max(best, layer.maxCoeff());
    return best;
  }

  BasicColouredQuiver relabelled(Index vertex, std::string label) const {
    BasicColouredQuiver out = *this;
    out.labels_[static_cast<std::size_t>(vertex)] = std::move(label);
    detail::check_unique_labels(out.labels_);
    return out;
  }

  friend bool operator==(const BasicColouredQuiver& a, const BasicColouredQuiver& b) {
    return a.m_ == b.m_ && a.labels_ == b.labels_ && a.layers_ == b.layers_;
  }

 private:
  int m_ = 0;
  std::vector<std::string> labels_;
  std::vector<Matrix> layers_;
};

using Multiplicity = std::int64_t;
using PlainQuiver = BasicPlainQuiver<Multiplicity>;
using ColouredQuiver = BasicColouredQuiver<Multiplicity>;
using ColouredArrow = BasicColouredArrow<Multiplicity>;

// ---------------------------------------------------------------------------
// Validity of the coloured quiver of a tilting object.
// ---------------------------------------------------------------------------

template <typename Scalar>
struct BasicValidityReport {
  bool monochromatic = true;
  bool symmetric = true;
  bool loopless = true;
  std::vector<BasicColouredArrow<Scalar>> offending;

  bool ok() const { return monochromatic && symmetric && loopless; }
};

using ValidityReport = BasicValidityReport<Multiplicity>;

template <typename Scalar>
BasicValidityReport<Scalar> validate(const BasicColouredQuiver<Scalar>& q) {
  BasicValidityReport<Scalar> report;
  const int m = q.m();
  const Index n = q.size();
  const auto& labels = q.labels();
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      int colours_present = 0;
      for (int c = 0; c <= m; ++c) {
        const Scalar k = q(c, i, j);
        if (k == 0) continue;
        ++colours_present;
        if (i == j) {
          report.loopless = false;
          report.offending.push_back({labels[i], labels[j], c, k});
        }
        if (q(m - c, j, i) != k) {
          report.symmetric = false;
          report.offending.push_back({labels[i], labels[j], c, k});
        }
      }
      if (colours_present > 1) {
        report.monochromatic = false;
        for (int c = 0; c <= m; ++c)
          if (q(c, i, j) > 0) report.offending.push_back({labels[i], labels[j], c, q(c, i, j)});
      }
    }
  }
  return report;
}

/// Each arrow i -> j of an acyclic quiver becomes i -> j of colour 0 together
/// with j -> i of colour m.
template <typename Scalar>
BasicColouredQuiver<Scalar> seed_from_acyclic(const BasicPlainQuiver<Scalar>& q, int m) {
  if (m < 1) throw std::invalid_argument("seed_from_acyclic requires m >= 1");
  if (!q.is_acyclic()) throw InvalidQuiverError("seed quiver must be acyclic");
  std::vector<MultiplicityMatrix<Scalar>> layers(static_cast<std::size_t>(m + 1),
                                                 MultiplicityMatrix<Scalar>::Zero(q.size(), q.size()));
  layers.front() = q.arrows();
  layers.back() = q.arrows().transpose();
  return BasicColouredQuiver<Scalar>(m, q.labels(), std::move(layers));
}

/// Colour-0 subquiver.
template <typename Scalar>
BasicPlainQuiver<Scalar> gabriel_quiver(const BasicColouredQuiver<Scalar>& q) {
  return BasicPlainQuiver<Scalar>(q.labels(), q.layer(0));
}

}  // namespace mcluster

#pragma once

#include <cmath>
#include <limits>
#include <string>

#include "mcluster/coloured_quiver.hpp"

namespace mcluster {

namespace detail {

template <typename Scalar>
void require_mutable(const BasicColouredQuiver<Scalar>& q, Index v) {
  if (v < 0 || v >= q.size()) throw UnknownVertexError("vertex index out of range");
  if (!validate(q).ok()) {
    throw InvalidQuiverError("coloured mutation requires a loopless, monochromatic, symmetric quiver");
  }
}

// Products of column and row entries must stay representable.
template <typename Lhs, typename Rhs>
void check_product_range(const Eigen::MatrixBase<Lhs>& lhs, const Eigen::MatrixBase<Rhs>& rhs) {
  using Scalar = typename Lhs::Scalar;
  if (lhs.size() == 0 || rhs.size() == 0) return;
  const long double bound = static_cast<long double>(std::numeric_limits<Scalar>::max()) / 8.0L;
  const long double worst = static_cast<long double>(lhs.maxCoeff()) *
                            static_cast<long double>(rhs.maxCoeff()) *
                            static_cast<long double>(lhs.size());
  if (worst > bound) throw std::overflow_error("arrow multiplicities exceed the scalar range");
}

constexpr int wrap_colour(int c, int m) { return ((c % (m + 1)) + (m + 1)) % (m + 1); }

}  // namespace detail

/// Coloured mutation at vertex v by the three-step rule:
///  1. every pair i -(c)-> v -(0)-> j with i != j adds i -(c)-> j and j -(m-c)-> i;
///  2. while a pair (i, j) carries arrows of two or more colours, one arrow of
///     each present colour is removed;
///  3. arrows ending in v gain one colour, arrows starting in v lose one (mod m+1).
/// The vertex keeps its label.
template <typename Scalar>
BasicColouredQuiver<Scalar> mutate_procedural(const BasicColouredQuiver<Scalar>& q, Index v) {
  detail::require_mutable(q, v);
  using Matrix = MultiplicityMatrix<Scalar>;
  const int m = q.m();
  const Index n = q.size();
  std::vector<Matrix> layers = q.layers();

  const auto out_zero = q.layer(0).row(v);
  for (int c = 0; c <= m; ++c) {
    const auto in_c = q.layer(c).col(v);
    detail::check_product_range(in_c, out_zero.transpose());
    Matrix added = in_c * out_zero;
    added.diagonal().setZero();
    layers[static_cast<std::size_t>(c)] += added;
    layers[static_cast<std::size_t>(m - c)] += added.transpose();
  }

  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      for (;;) {
        int present = 0;
        Scalar smallest = std::numeric_limits<Scalar>::max();
        for (const auto& layer : layers) {
          if (layer(i, j) > 0) {
            ++present;
            smallest = std::min(smallest, layer(i, j));
          }
        }
        if (present < 2) break;
        for (auto& layer : layers)
          if (layer(i, j) > 0) layer(i, j) -= smallest;
      }
    }
  }

  std::vector<Matrix> shifted = layers;
  for (int c = 0; c <= m; ++c) {
    const auto up = static_cast<std::size_t>(detail::wrap_colour(c + 1, m));
    const auto down = static_cast<std::size_t>(detail::wrap_colour(c - 1, m));
    shifted[up].col(v) = layers[static_cast<std::size_t>(c)].col(v);
    shifted[down].row(v) = layers[static_cast<std::size_t>(c)].row(v);
  }
  return BasicColouredQuiver<Scalar>(m, q.labels(), std::move(shifted));
}

template <typename Scalar>
BasicColouredQuiver<Scalar> mutate_procedural(const BasicColouredQuiver<Scalar>& q,
                                              const std::string& vertex) {
  return mutate_procedural(q, q.index_of(vertex));
}

/// Coloured mutation at vertex v by the closed formula
///
///   q~_ij^(c) = q_ij^(c+1)                                   if v = i
///             = q_ij^(c-1)                                   if v = j
///             = max{0, q_ij^(c) - sum_{t != c} q_ij^(t)
///                      + (q_iv^(c) - q_iv^(c-1)) q_vj^(0)
///                      + q_iv^(m) (q_vj^(c) - q_vj^(c+1))}   otherwise,
///
/// colour indices taken mod m+1.
template <typename Scalar>
BasicColouredQuiver<Scalar> mutate_formula(const BasicColouredQuiver<Scalar>& q, Index v) {
  detail::require_mutable(q, v);
  using Matrix = MultiplicityMatrix<Scalar>;
  const int m = q.m();
  const Index n = q.size();
  const auto colour = [&](int c) -> const Matrix& { return q.layer(detail::wrap_colour(c, m)); };

  Matrix total = Matrix::Zero(n, n);
  for (const auto& layer : q.layers()) total += layer;

  const auto out_zero = q.layer(0).row(v);
  const auto in_top = q.layer(m).col(v);
  std::vector<Matrix> result;
  result.reserve(static_cast<std::size_t>(m + 1));
  for (int c = 0; c <= m; ++c) {
    detail::check_product_range(colour(c).col(v), out_zero.transpose());
    detail::check_product_range(in_top, colour(c).row(v).transpose());
    Matrix next = (colour(c) * 2 - total +
                   (colour(c).col(v) - colour(c - 1).col(v)) * out_zero +
                   in_top * (colour(c).row(v) - colour(c + 1).row(v)))
                      .cwiseMax(Scalar{0});
    next.row(v) = colour(c + 1).row(v);
    next.col(v) = colour(c - 1).col(v);
    next.diagonal().setZero();
    result.push_back(std::move(next));
  }
  return BasicColouredQuiver<Scalar>(m, q.labels(), std::move(result));
}

template <typename Scalar>
BasicColouredQuiver<Scalar> mutate_formula(const BasicColouredQuiver<Scalar>& q,
                                           const std::string& vertex) {
  return mutate_formula(q, q.index_of(vertex));
}

/// Fomin-Zelevinsky quiver mutation:
///   q~_ij = q_ji                                          if v in {i, j}
///         = max{0, q_ij - q_ji + q_iv q_vj - q_jv q_vi}   otherwise.
template <typename Scalar>
BasicPlainQuiver<Scalar> fz_mutate(const BasicPlainQuiver<Scalar>& q, Index v) {
  if (v < 0 || v >= q.size()) throw UnknownVertexError("vertex index out of range");
  using Matrix = MultiplicityMatrix<Scalar>;
  const Matrix& a = q.arrows();
  detail::check_product_range(a.col(v), a.row(v).transpose());
  const Matrix through = a.col(v) * a.row(v);
  Matrix next = (a - a.transpose() + through - through.transpose()).cwiseMax(Scalar{0});
  next.row(v) = a.col(v).transpose();
  next.col(v) = a.row(v).transpose();
  return BasicPlainQuiver<Scalar>(q.labels(), std::move(next));
}

template <typename Scalar>
BasicPlainQuiver<Scalar> fz_mutate(const BasicPlainQuiver<Scalar>& q, const std::string& vertex) {
  return fz_mutate(q, q.index_of(vertex));
}

}  // namespace mcluster

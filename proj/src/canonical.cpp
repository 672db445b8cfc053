#include "mcluster/canonical.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <map>
#include <sstream>
#include <tuple>
#include <vector>

namespace mcluster {

namespace {

// (source position, target position, colour, multiplicity)
using ArrowTuple = std::array<Multiplicity, 4>;

struct CanonicalForm {
  int m = 0;
  Index n = 0;
  std::vector<ArrowTuple> arrows;
};

// Vertex classes refined from incident arrow data. Class ids are ranks of
// sorted signatures, so they do not depend on the input vertex order.
std::vector<int> refine_classes(const ColouredQuiver& q) {
  const Index n = q.size();
  const int m = q.m();
  std::vector<int> cls(static_cast<std::size_t>(n), 0);
  using Signature = std::vector<std::array<Multiplicity, 5>>;
  for (int round = 0; round < 3; ++round) {
    std::vector<std::pair<int, Signature>> signatures(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) {
      Signature sig;
      for (Index j = 0; j < n; ++j) {
        for (int c = 0; c <= m; ++c) {
          if (const auto k = q(c, i, j); k > 0) sig.push_back({0, c, k, cls[j], 0});
          if (const auto k = q(c, j, i); k > 0) sig.push_back({1, c, k, cls[j], 0});
        }
      }
      std::sort(sig.begin(), sig.end());
      signatures[static_cast<std::size_t>(i)] = {cls[static_cast<std::size_t>(i)], std::move(sig)};
    }
    auto distinct = signatures;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<int> next(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) {
      next[static_cast<std::size_t>(i)] = static_cast<int>(
          std::lower_bound(distinct.begin(), distinct.end(), signatures[static_cast<std::size_t>(i)]) -
          distinct.begin());
    }
    if (next == cls) break;
    cls = std::move(next);
  }
  return cls;
}

CanonicalForm canonical_form(const ColouredQuiver& q, const CanonicalOptions& options) {
  const Index n = q.size();
  if (n > options.max_vertices) {
    throw SizeLimitError("canonical_key supports at most " + std::to_string(options.max_vertices) +
                         " vertices, got " + std::to_string(n));
  }
  const int m = q.m();
  const auto cls = refine_classes(q);

  // order[p] = vertex placed at position p; positions grouped by class id.
  std::vector<Index> order(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  std::sort(order.begin(), order.end(), [&](Index a, Index b) {
    return std::tie(cls[a], a) < std::tie(cls[b], b);
  });
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t start = 0; start < order.size();) {
    std::size_t end = start;
    while (end < order.size() && cls[order[end]] == cls[order[start]]) ++end;
    cells.emplace_back(start, end);
    start = end;
  }

  CanonicalForm best{m, n, {}};
  bool have_best = false;
  std::vector<ArrowTuple> candidate;
  // Builds the arrow list for the current order; returns false as soon as
  // the list is known to be larger than the best one.
  const auto build = [&]() {
    candidate.clear();
    bool tied = have_best;
    for (Index a = 0; a < n; ++a) {
      for (Index b = 0; b < n; ++b) {
        for (int c = 0; c <= m; ++c) {
          const auto k = q(c, order[a], order[b]);
          if (k == 0) continue;
          candidate.push_back({a, b, c, k});
          if (tied) {
            const auto& ref = best.arrows[candidate.size() - 1];
            if (ref < candidate.back()) return false;
            if (candidate.back() < ref) tied = false;
          }
        }
      }
    }
    return !tied || !have_best;
  };
  for (;;) {
    if (build()) best.arrows = candidate;
    have_best = true;

    // Odometer over the permutations of each cell.
    std::size_t cell = 0;
    for (; cell < cells.size(); ++cell) {
      auto first = order.begin() + static_cast<std::ptrdiff_t>(cells[cell].first);
      auto last = order.begin() + static_cast<std::ptrdiff_t>(cells[cell].second);
      if (std::next_permutation(first, last)) break;
    }
    if (cell == cells.size()) break;
  }
  return best;
}

std::string encode(std::string_view prefix, const CanonicalForm& form) {
  std::ostringstream out;
  out << prefix << "m=" << form.m << ";n=" << form.n << ";";
  bool first = true;
  for (const auto& [a, b, c, k] : form.arrows) {
    if (!first) out << ',';
    first = false;
    out << a + 1 << '>' << b + 1 << ':' << c << '*' << k;
  }
  return out.str();
}

Multiplicity take_number(std::string_view& s, const std::string& key) {
  Multiplicity value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr == s.data()) throw ParseError("malformed canonical key '" + key + "'");
  s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
  return value;
}

void expect(std::string_view& s, std::string_view token, const std::string& key) {
  if (s.substr(0, token.size()) != token) throw ParseError("malformed canonical key '" + key + "'");
  s.remove_prefix(token.size());
}

CanonicalForm decode(std::string_view prefix, const CanonicalKey& key) {
  std::string_view s = key.str();
  expect(s, prefix, key.str());
  expect(s, "m=", key.str());
  CanonicalForm form;
  form.m = static_cast<int>(take_number(s, key.str()));
  expect(s, ";n=", key.str());
  form.n = static_cast<Index>(take_number(s, key.str()));
  expect(s, ";", key.str());
  while (!s.empty()) {
    ArrowTuple t{};
    t[0] = take_number(s, key.str()) - 1;
    expect(s, ">", key.str());
    t[1] = take_number(s, key.str()) - 1;
    expect(s, ":", key.str());
    t[2] = take_number(s, key.str());
    expect(s, "*", key.str());
    t[3] = take_number(s, key.str());
    if (t[0] < 0 || t[0] >= form.n || t[1] < 0 || t[1] >= form.n || t[2] < 0 || t[2] > form.m ||
        t[3] <= 0) {
      throw ParseError("canonical key entry out of range in '" + key.str() + "'");
    }
    form.arrows.push_back(t);
    if (!s.empty()) expect(s, ",", key.str());
  }
  return form;
}

std::vector<std::string> numbered_labels(Index n) {
  std::vector<std::string> labels;
  for (Index i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return labels;
}

constexpr std::string_view kColouredPrefix = "";
constexpr std::string_view kPlainPrefix = "plain;";

}  // namespace

CanonicalKey canonical_key(const ColouredQuiver& q, const CanonicalOptions& options) {
  return CanonicalKey(encode(kColouredPrefix, canonical_form(q, options)));
}

CanonicalKey canonical_key(const PlainQuiver& q, const CanonicalOptions& options) {
  const ColouredQuiver view(0, q.labels(), {q.arrows()});
  return CanonicalKey(encode(kPlainPrefix, canonical_form(view, options)));
}

ColouredQuiver quiver_from_key(const CanonicalKey& key) {
  if (key.str().starts_with(kPlainPrefix)) throw ParseError("key describes a plain quiver");
  const auto form = decode(kColouredPrefix, key);
  ColouredQuiver q(form.m, numbered_labels(form.n));
  for (const auto& [a, b, c, k] : form.arrows) q.add_arrow(a, b, static_cast<int>(c), k);
  return q;
}

PlainQuiver plain_quiver_from_key(const CanonicalKey& key) {
  const auto form = decode(kPlainPrefix, key);
  PlainQuiver::Matrix arrows = PlainQuiver::Matrix::Zero(form.n, form.n);
  for (const auto& [a, b, c, k] : form.arrows) arrows(a, b) += k;
  return PlainQuiver(numbered_labels(form.n), std::move(arrows));
}

}  // namespace mcluster

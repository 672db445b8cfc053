#include "mcluster/mutation_class.hpp"

#include <algorithm>
#include <istream>
#include <nlohmann/json.hpp>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "mcluster/mutation.hpp"

namespace mcluster {

namespace {

struct Expansion {
  ColouredQuiver child;
  CanonicalKey key;
};

struct Task {
  std::size_t member;
  Index vertex;
};

Expansion expand(const ColouredQuiver& q, Index v, const CanonicalOptions& options) {
  auto child = mutate_procedural(q, v);
  auto key = canonical_key(child, options);
  return {std::move(child), std::move(key)};
}

// Children are computed concurrently; only their order in `out` matters.
void expand_all(const std::vector<ColouredQuiver>& level, std::span<const Task> tasks,
                const EnumerationOptions& options, std::vector<std::optional<Expansion>>& out) {
  out.assign(tasks.size(), std::nullopt);
  const unsigned workers =
      std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(tasks.size())));
  const auto run = [&](std::size_t begin, std::size_t end) {
    for (std::size_t t = begin; t < end; ++t) {
      try {
        out[t] = expand(level[tasks[t].member], tasks[t].vertex, options.canonical);
      } catch (const std::overflow_error&) {
        // Left empty: the child is not representable in the scalar type.
      }
    }
  };
  if (workers == 1) {
    run(0, tasks.size());
    return;
  }
  std::vector<std::jthread> pool;
  const std::size_t chunk = (tasks.size() + workers - 1) / workers;
  for (std::size_t begin = 0; begin < tasks.size(); begin += chunk) {
    pool.emplace_back(run, begin, std::min(tasks.size(), begin + chunk));
  }
}

}  // namespace

MutationClass enumerate_class(const ColouredQuiver& seed, const EnumerationOptions& options) {
  if (options.limit < 1) throw std::invalid_argument("enumeration limit must be at least 1");
  if (!validate(seed).ok()) throw InvalidQuiverError("seed quiver is not a valid coloured quiver");

  MutationClass cls;
  cls.m = seed.m();
  cls.limit = options.limit;

  std::vector<ColouredQuiver> level{seed};
  std::vector<CanonicalKey> level_keys{canonical_key(seed, options.canonical)};
  cls.keys.insert(level_keys.front());

  std::vector<std::optional<Expansion>> results;
  while (!level.empty()) {
    std::vector<Task> tasks;
    for (std::size_t i = 0; i < level.size(); ++i) {
      const Index n = level[i].size();
      for (Index k = 0; k < n; ++k) {
        tasks.push_back({i, options.reverse_vertex_order ? n - 1 - k : k});
      }
    }
    const std::size_t budget = std::min(tasks.size(), options.limit - cls.explored);
    expand_all(level, std::span<const Task>(tasks).first(budget), options, results);
    cls.explored += budget;

    std::vector<ColouredQuiver> next;
    std::vector<CanonicalKey> next_keys;
    for (std::size_t t = 0; t < results.size(); ++t) {
      auto& result = results[t];
      if (!result) {
        ++cls.unrepresentable;
        const auto& key = level_keys[tasks[t].member];
        if (cls.frontier.empty() || cls.frontier.back() != key) cls.frontier.push_back(key);
        continue;
      }
      if (cls.keys.insert(result->key).second) {
        next_keys.push_back(result->key);
        next.push_back(std::move(result->child));
      }
    }

    if (budget < tasks.size()) {
      // Members of this level with unfinished expansions stay on the frontier.
      for (std::size_t t = budget; t < tasks.size(); ++t) {
        const auto& key = level_keys[tasks[t].member];
        if (cls.frontier.empty() || cls.frontier.back() != key) cls.frontier.push_back(key);
      }
      cls.frontier.insert(cls.frontier.end(), next_keys.begin(), next_keys.end());
      cls.complete = false;
      return cls;
    }
    level = std::move(next);
    level_keys = std::move(next_keys);
  }
  cls.complete = cls.unrepresentable == 0;
  return cls;
}

MutationClass enumerate_class(const ColouredQuiver& seed, std::size_t limit) {
  EnumerationOptions options;
  options.limit = limit;
  return enumerate_class(seed, options);
}

std::set<CanonicalKey> gabriel_images(const MutationClass& cls) {
  if (!cls.complete) throw InvalidQuiverError("gabriel_images requires a complete mutation class");
  std::set<CanonicalKey> images;
  for (const auto& key : cls.keys) images.insert(canonical_key(gabriel_quiver(quiver_from_key(key))));
  return images;
}

void write_class(std::ostream& out, const MutationClass& cls) {
  nlohmann::ordered_json header;
  header["seed"] = cls.seed;
  header["m"] = cls.m;
  header["complete"] = cls.complete;
  header["explored"] = cls.explored;
  header["limit"] = cls.limit;
  out << header.dump() << '\n';
  for (const auto& key : cls.keys) out << key.str() << '\n';
}

MutationClass read_class(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty mutation class file");
  MutationClass cls;
  try {
    const auto header = nlohmann::json::parse(line);
    cls.seed = header.at("seed").get<std::string>();
    cls.m = header.at("m").get<int>();
    cls.complete = header.at("complete").get<bool>();
    cls.explored = header.value("explored", std::size_t{0});
    cls.limit = header.value("limit", std::size_t{0});
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad mutation class header: ") + e.what());
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    CanonicalKey key(line);
    const auto q = quiver_from_key(key);  // rejects malformed lines
    if (q.m() != cls.m) throw ParseError("key colour parameter does not match header");
    cls.keys.insert(std::move(key));
  }
  return cls;
}

}  // namespace mcluster

#pragma once

#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "mcluster/coloured_quiver.hpp"
#include "mcluster/polygon.hpp"

namespace httplib {
class Server;
}

namespace mcluster {

/// A mutation at a quiver vertex, or a flip of a diagonal to one of its
/// replacements.
struct Move {
  enum class Kind { kMutate, kFlip };

  Kind kind = Kind::kMutate;
  std::string vertex;
  MDiagonal diagonal;
  MDiagonal choice;

  nlohmann::ordered_json to_json() const;
  static Move from_json(const nlohmann::json& j);
};

/// Exploration state: a seed plus the moves applied to it. Sessions created
/// from an angulation keep the angulation and the quiver in lockstep, with
/// quiver vertices labelled by their diagonals.
class Session {
 public:
  /// Accepts {"seed": "A4" | <quiver>, "m": int}, or {"angulation": <angulation>}
  /// with an optional anchoring "quiver", plus an optional "history" to replay.
  static Session create(std::string id, const nlohmann::json& spec);

  const std::string& id() const { return id_; }
  const ColouredQuiver& quiver() const { return quiver_; }
  const std::optional<Angulation>& angulation() const { return angulation_; }
  const std::vector<Move>& history() const { return history_; }

  void apply(const Move& move);
  void undo();

  nlohmann::ordered_json state() const;
  /// {"seed": <creation spec>, "history": [...]}, accepted back by create().
  nlohmann::ordered_json export_json() const;

 private:
  Session() = default;
  void step(const Move& move);
  void reset_to_seed();

  std::string id_;
  nlohmann::json seed_spec_;
  ColouredQuiver seed_quiver_;
  std::optional<Angulation> seed_angulation_;
  ColouredQuiver quiver_;
  std::optional<Angulation> angulation_;
  std::vector<Move> history_;
};

/// In-memory session store behind the JSON-over-HTTP API:
///   POST /session                 create (body as Session::create)
///   GET  /session/{id}            state
///   POST /session/{id}/mutate     {"vertex": label}
///   POST /session/{id}/flip       {"diagonal": [i, j], "choice": [k, l]}
///   POST /session/{id}/undo
///   GET  /session/{id}/export
/// Unknown sessions give 404, illegal moves 409 (also while another move on
/// the same session is in flight), malformed bodies 400.
class SessionService {
 public:
  struct Response {
    int status = 200;
    std::string body;
  };

  SessionService();
  ~SessionService();

  Response handle(const std::string& method, const std::string& path, const std::string& body);

  /// Registers the routes on `server`.
  void mount(httplib::Server& server);

  /// Blocks until stop() is called.
  bool listen(const std::string& host, int port);
  void stop();

 private:
  struct Entry {
    std::mutex busy;
    Session session;
    explicit Entry(Session s) : session(std::move(s)) {}
  };

  std::shared_ptr<Entry> find(const std::string& id);
  Response create(const std::string& body);
  Response move(const std::string& id, const std::string& action, const std::string& body);

  std::mutex mutex_;
  std::map<std::string, std::shared_ptr<Entry>> sessions_;
  std::atomic<std::uint64_t> next_id_{1};
  std::unique_ptr<httplib::Server> server_;
};

}  // namespace mcluster

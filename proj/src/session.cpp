#include "mcluster/session.hpp"

#include <httplib.h>

#include <regex>

#include "mcluster/angulation_quiver.hpp"
#include "mcluster/graph_class.hpp"
#include "mcluster/io.hpp"
#include "mcluster/mutation.hpp"

namespace mcluster {

namespace {

MDiagonal diagonal_from_json(const nlohmann::json& j) {
  if (j.is_string()) return parse_diagonal(j.get<std::string>());
  if (j.is_array() && j.size() == 2 && j[0].is_number_integer() && j[1].is_number_integer()) {
    return MDiagonal(j[0].get<int>(), j[1].get<int>());
  }
  throw ParseError("diagonal must be [i, j] or \"(i,j)\"");
}

nlohmann::ordered_json diagonal_to_json(const MDiagonal& d) { return {d.first(), d.second()}; }

std::string error_body(const std::string& message) {
  nlohmann::ordered_json j;
  j["error"] = message;
  return j.dump();
}

nlohmann::json parse_body(const std::string& body) {
  if (body.empty()) return nlohmann::json::object();
  try {
    return nlohmann::json::parse(body);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

nlohmann::ordered_json Move::to_json() const {
  nlohmann::ordered_json j;
  if (kind == Kind::kMutate) {
    j["mutate"] = vertex;
  } else {
    j["flip"] = diagonal_to_json(diagonal);
    j["choice"] = diagonal_to_json(choice);
  }
  return j;
}

Move Move::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("move must be an object");
  Move move;
  if (j.contains("mutate")) {
    if (!j["mutate"].is_string()) throw ParseError("'mutate' must be a vertex label");
    move.vertex = j["mutate"].get<std::string>();
  } else if (j.contains("flip") && j.contains("choice")) {
    move.kind = Kind::kFlip;
    move.diagonal = diagonal_from_json(j["flip"]);
    move.choice = diagonal_from_json(j["choice"]);
  } else {
    throw ParseError("move needs 'mutate' or 'flip' and 'choice'");
  }
  return move;
}

// ---------------------------------------------------------------------------

Session Session::create(std::string id, const nlohmann::json& spec) {
  if (!spec.is_object()) throw ParseError("session spec must be an object");
  Session s;
  s.id_ = std::move(id);
  s.seed_spec_ = spec;
  s.seed_spec_.erase("history");

  if (spec.contains("angulation")) {
    auto a = angulation_from_json(spec["angulation"]);
    if (spec.contains("quiver")) {
      auto q = quiver_from_json(spec["quiver"]);
      auto labels = q.labels();
      auto expected = diagonal_labels(a);
      std::sort(labels.begin(), labels.end());
      std::sort(expected.begin(), expected.end());
      if (labels != expected || q.m() != a.polygon().m()) {
        throw ParseError("anchoring quiver must have m of the polygon and one vertex per diagonal");
      }
      if (!validate(q).ok()) throw ParseError("anchoring quiver is not a valid coloured quiver");
      s.seed_quiver_ = std::move(q);
    } else {
      s.seed_quiver_ = coloured_quiver_of_angulation(a);
    }
    s.seed_angulation_ = std::move(a);
  } else if (spec.contains("seed")) {
    const auto& seed = spec["seed"];
    if (seed.is_string()) {
      if (!spec.contains("m") || !spec["m"].is_number_integer()) throw ParseError("'m' is required");
      const int m = spec["m"].get<int>();
      if (m < 1) throw ParseError("'m' must be at least 1");
      s.seed_quiver_ = seed_from_acyclic(dynkin_quiver(seed.get<std::string>()), m);
    } else {
      auto q = quiver_from_json(seed);
      if (!validate(q).ok()) throw ParseError("seed quiver is not a valid coloured quiver");
      s.seed_quiver_ = std::move(q);
    }
  } else {
    throw ParseError("session spec needs 'seed' or 'angulation'");
  }

  s.reset_to_seed();
  if (spec.contains("history")) {
    if (!spec["history"].is_array()) throw ParseError("'history' must be an array");
    for (const auto& j : spec["history"]) s.apply(Move::from_json(j));
  }
  return s;
}

void Session::reset_to_seed() {
  quiver_ = seed_quiver_;
  angulation_ = seed_angulation_;
}

void Session::step(const Move& move) {
  if (move.kind == Move::Kind::kMutate) {
    const auto vertex = quiver_.find(move.vertex);
    if (!vertex) throw IllegalMoveError("unknown vertex '" + move.vertex + "'");
    if (angulation_) {
      const auto d = parse_diagonal(move.vertex);
      std::tie(*angulation_, quiver_) = exchange(*angulation_, quiver_, d);
    } else {
      quiver_ = mutate_procedural(quiver_, *vertex);
    }
    return;
  }
  if (!angulation_) throw IllegalMoveError("session has no angulation to flip");
  if (!angulation_->contains(move.diagonal)) {
    throw IllegalMoveError(to_string(move.diagonal) + " is not in the angulation");
  }
  // A flip to the k-th replacement in exchange order is k exchanges.
  const int steps = exchange_distance(*angulation_, move.diagonal, move.choice);
  MDiagonal at = move.diagonal;
  for (int k = 0; k < steps; ++k) {
    const MDiagonal next = next_complement(*angulation_, at);
    std::tie(*angulation_, quiver_) = exchange(*angulation_, quiver_, at);
    at = next;
  }
}

void Session::apply(const Move& move) {
  step(move);
  history_.push_back(move);
}

void Session::undo() {
  if (history_.empty()) throw IllegalMoveError("nothing to undo");
  history_.pop_back();
  reset_to_seed();
  for (const auto& move : history_) step(move);
}

nlohmann::ordered_json Session::state() const {
  nlohmann::ordered_json j;
  j["id"] = id_;
  j["m"] = quiver_.m();
  j["n"] = angulation_ ? angulation_->polygon().n() : static_cast<int>(quiver_.size());
  j["quiver"] = quiver_to_json(quiver_);
  j["angulation"] = angulation_ ? angulation_to_json(*angulation_) : nlohmann::ordered_json();
  nlohmann::ordered_json moves;
  moves["vertices"] = quiver_.labels();
  auto flip_moves = nlohmann::ordered_json::array();
  if (angulation_) {
    for (const auto& d : angulation_->diagonals()) {
      nlohmann::ordered_json entry;
      entry["diagonal"] = diagonal_to_json(d);
      auto candidates = nlohmann::ordered_json::array();
      for (const auto& c : flips(*angulation_, d)) candidates.push_back(diagonal_to_json(c));
      entry["candidates"] = std::move(candidates);
      flip_moves.push_back(std::move(entry));
    }
  }
  moves["flips"] = std::move(flip_moves);
  j["moves"] = std::move(moves);
  auto history = nlohmann::ordered_json::array();
  for (const auto& move : history_) history.push_back(move.to_json());
  j["history"] = std::move(history);
  return j;
}

nlohmann::ordered_json Session::export_json() const {
  nlohmann::ordered_json j;
  j["seed"] = seed_spec_;
  auto history = nlohmann::ordered_json::array();
  for (const auto& move : history_) history.push_back(move.to_json());
  j["history"] = std::move(history);
  return j;
}

// ---------------------------------------------------------------------------

SessionService::SessionService() = default;
SessionService::~SessionService() = default;

std::shared_ptr<SessionService::Entry> SessionService::find(const std::string& id) {
  std::lock_guard lock(mutex_);
  const auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

SessionService::Response SessionService::create(const std::string& body) {
  auto spec = parse_body(body);
  // Exported sessions nest the creation spec under "seed".
  if (spec.is_object() && spec.contains("seed") && spec["seed"].is_object() &&
      (spec["seed"].contains("seed") || spec["seed"].contains("angulation"))) {
    auto inner = spec["seed"];
    if (spec.contains("history")) inner["history"] = spec["history"];
    spec = std::move(inner);
  }
  const std::string id = "s" + std::to_string(next_id_++);
  auto entry = std::make_shared<Entry>(Session::create(id, spec));
  auto state = entry->session.state().dump();
  {
    std::lock_guard lock(mutex_);
    sessions_.emplace(id, std::move(entry));
  }
  return {201, std::move(state)};
}

SessionService::Response SessionService::move(const std::string& id, const std::string& action,
                                              const std::string& body) {
  auto entry = find(id);
  if (!entry) return {404, error_body("unknown session '" + id + "'")};
  std::unique_lock lock(entry->busy, std::try_to_lock);
  if (!lock.owns_lock()) return {409, error_body("another move on this session is in progress")};
  const auto j = parse_body(body);
  if (action == "mutate") {
    if (!j.contains("vertex") || !j["vertex"].is_string()) throw ParseError("'vertex' is required");
    Move m;
    m.vertex = j["vertex"].get<std::string>();
    entry->session.apply(m);
  } else if (action == "flip") {
    if (!j.contains("diagonal") || !j.contains("choice")) {
      throw ParseError("'diagonal' and 'choice' are required");
    }
    Move m;
    m.kind = Move::Kind::kFlip;
    m.diagonal = diagonal_from_json(j["diagonal"]);
    m.choice = diagonal_from_json(j["choice"]);
    entry->session.apply(m);
  } else {
    entry->session.undo();
  }
  return {200, entry->session.state().dump()};
}

SessionService::Response SessionService::handle(const std::string& method, const std::string& path,
                                                const std::string& body) {
  static const std::regex session_path(R"(^/session/([A-Za-z0-9_-]+)$)");
  static const std::regex action_path(R"(^/session/([A-Za-z0-9_-]+)/(mutate|flip|undo|export)$)");
  try {
    std::smatch match;
    if (path == "/session") {
      if (method != "POST") return {405, error_body("method not allowed")};
      return create(body);
    }
    if (std::regex_match(path, match, session_path)) {
      if (method != "GET") return {405, error_body("method not allowed")};
      auto entry = find(match[1]);
      if (!entry) return {404, error_body("unknown session '" + match[1].str() + "'")};
      std::lock_guard lock(entry->busy);
      return {200, entry->session.state().dump()};
    }
    if (std::regex_match(path, match, action_path)) {
      const std::string action = match[2];
      if (action == "export") {
        if (method != "GET") return {405, error_body("method not allowed")};
        auto entry = find(match[1]);
        if (!entry) return {404, error_body("unknown session '" + match[1].str() + "'")};
        std::lock_guard lock(entry->busy);
        return {200, entry->session.export_json().dump()};
      }
      if (method != "POST") return {405, error_body("method not allowed")};
      return move(match[1], action, body);
    }
    return {404, error_body("no route for " + path)};
  } catch (const ParseError& e) {
    return {400, error_body(e.what())};
  } catch (const IllegalMoveError& e) {
    return {409, error_body(e.what())};
  } catch (const UnknownVertexError& e) {
    return {409, error_body(e.what())};
  } catch (const InvalidQuiverError& e) {
    return {409, error_body(e.what())};
  } catch (const Error& e) {
    return {400, error_body(e.what())};
  } catch (const std::invalid_argument& e) {
    return {400, error_body(e.what())};
  }
}

void SessionService::mount(httplib::Server& server) {
  const auto forward = [this](const httplib::Request& req, httplib::Response& res) {
    const auto r = handle(req.method, req.path, req.body);
    res.status = r.status;
    res.set_content(r.body, "application/json");
  };
  server.Post("/session", forward);
  server.Get(R"(/session/([A-Za-z0-9_-]+))", forward);
  server.Get(R"(/session/([A-Za-z0-9_-]+)/export)", forward);
  server.Post(R"(/session/([A-Za-z0-9_-]+)/(mutate|flip|undo))", forward);
}

bool SessionService::listen(const std::string& host, int port) {
  server_ = std::make_unique<httplib::Server>();
  mount(*server_);
  return server_->listen(host, port);
}

void SessionService::stop() {
  if (server_) server_->stop();
}

}  // namespace mcluster

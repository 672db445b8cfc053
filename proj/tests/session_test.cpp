#include <gtest/gtest.h>

#include <random>
#include <thread>

#include "fixtures.hpp"
#include "mcluster/angulation_quiver.hpp"
#include "mcluster/io.hpp"
#include "mcluster/session.hpp"
#include "oracles.hpp"

// After Eigen: <resolv.h> defines a _res macro that clashes with Eigen internals.
#include <httplib.h>

namespace {

using namespace mcluster;
using nlohmann::json;

json triangle_seed_spec() {
  json spec;
  spec["seed"] = quiver_to_json(fixtures::q_t());
  return spec;
}

json linked_spec() {
  json spec;
  spec["angulation"] = angulation_to_json(fixtures::base_angulation());
  spec["quiver"] = quiver_to_json(fixtures::q_t_on_diagonals());
  return spec;
}

struct Service : ::testing::Test {
  SessionService service;

  json call(const std::string& method, const std::string& path, const json& body, int expected) {
    const auto r = service.handle(method, path, body.is_null() ? "" : body.dump());
    EXPECT_EQ(r.status, expected) << r.body;
    return json::parse(r.body);
  }
};

TEST_F(Service, MutateTriangleSeed) {
  const auto created = call("POST", "/session", triangle_seed_spec(), 201);
  const std::string id = created["id"];
  EXPECT_TRUE(created["angulation"].is_null());
  const auto state = call("POST", "/session/" + id + "/mutate", {{"vertex", "X"}}, 200);
  EXPECT_EQ(quiver_from_json(state["quiver"]), fixtures::q_t_prime());
  EXPECT_EQ(state["history"], json::parse(R"([{"mutate":"X"}])"));
}

TEST_F(Service, FlipInLinkedSession) {
  const auto created = call("POST", "/session", linked_spec(), 201);
  const std::string id = created["id"];
  const auto& flips = created["moves"]["flips"];
  ASSERT_EQ(flips.size(), 4u);
  for (const auto& entry : flips) {
    if (entry["diagonal"] == json::array({3, 8})) {
      EXPECT_EQ(entry["candidates"], json::parse("[[5,12],[4,9]]"));
    }
  }
  const auto state =
      call("POST", "/session/" + id + "/flip", {{"diagonal", {3, 8}}, {"choice", {5, 12}}}, 200);
  EXPECT_EQ(angulation_from_json(state["angulation"]),
            fixtures::base_angulation().replaced(fixtures::kX, fixtures::kP2Shift));
  const auto q = quiver_from_json(state["quiver"]);
  EXPECT_EQ(q.layers(), fixtures::q_t_prime().layers());
  EXPECT_EQ(q.labels().front(), "(5,12)");
}

TEST_F(Service, FlipToSecondCandidateIsTwoExchanges) {
  const std::string id = call("POST", "/session", linked_spec(), 201)["id"];
  const auto state =
      call("POST", "/session/" + id + "/flip", {{"diagonal", "(3,8)"}, {"choice", "(4,9)"}}, 200);
  EXPECT_EQ(quiver_from_json(state["quiver"]).layers(), fixtures::q_t_double_prime().layers());
}

TEST_F(Service, UndoRestoresBytes) {
  const auto created = service.handle("POST", "/session", linked_spec().dump());
  const std::string id = json::parse(created.body)["id"];
  const std::string path = "/session/" + id;
  call("POST", path + "/mutate", {{"vertex", "(3,8)"}}, 200);
  // (3,8) has just been exchanged away.
  call("POST", path + "/flip", {{"diagonal", {3, 8}}, {"choice", {5, 12}}}, 409);
  const auto flips = call("GET", path, json(), 200)["moves"]["flips"];
  const auto& first = flips.front();
  call("POST", path + "/flip", {{"diagonal", first["diagonal"]}, {"choice", first["candidates"][0]}}, 200);
  call("POST", path + "/undo", json(), 200);
  call("POST", path + "/undo", json(), 200);
  EXPECT_EQ(service.handle("GET", path, "").body, created.body);
  call("POST", path + "/undo", json(), 409);
}

TEST_F(Service, LockstepAfterEveryMove) {
  const Polygon p(2, 4);
  json spec;
  spec["angulation"] = angulation_to_json(fan_angulation(p));
  const std::string id = call("POST", "/session", spec, 201)["id"];
  std::mt19937 rng(17);
  for (int step = 0; step < 30; ++step) {
    const auto state = call("GET", "/session/" + id, json(), 200);
    const auto& flips = state["moves"]["flips"];
    const auto& entry = flips[std::uniform_int_distribution<std::size_t>(0, flips.size() - 1)(rng)];
    const auto& choice = entry["candidates"][std::uniform_int_distribution<std::size_t>(0, 1)(rng)];
    const auto next =
        call("POST", "/session/" + id + "/flip", {{"diagonal", entry["diagonal"]}, {"choice", choice}}, 200);
    const auto a = angulation_from_json(next["angulation"]);
    EXPECT_EQ(oracle::by_label(quiver_from_json(next["quiver"])),
              oracle::by_label(coloured_quiver_of_angulation(a)));
  }
}

TEST_F(Service, DynkinSeedAndExportImport) {
  const std::string id = call("POST", "/session", {{"seed", "A4"}, {"m", 2}}, 201)["id"];
  call("POST", "/session/" + id + "/mutate", {{"vertex", "2"}}, 200);
  call("POST", "/session/" + id + "/mutate", {{"vertex", "3"}}, 200);
  const auto exported = service.handle("GET", "/session/" + id + "/export", "");
  ASSERT_EQ(exported.status, 200);
  const auto imported = call("POST", "/session", json::parse(exported.body), 201);
  const auto original = call("GET", "/session/" + id, json(), 200);
  EXPECT_EQ(imported["quiver"], original["quiver"]);
  EXPECT_EQ(imported["history"], original["history"]);
  const std::string other = imported["id"];
  EXPECT_EQ(service.handle("GET", "/session/" + other + "/export", "").body, exported.body);
}

TEST_F(Service, ErrorCodes) {
  call("GET", "/session/nope", json(), 404);
  call("POST", "/session/nope/mutate", {{"vertex", "X"}}, 404);
  call("POST", "/session", json::parse(R"({"seed":"A4"})"), 400);
  call("POST", "/session", json::parse(R"({"seed":"Q4","m":1})"), 400);
  EXPECT_EQ(service.handle("POST", "/session", "{not json").status, 400);
  const std::string id = call("POST", "/session", triangle_seed_spec(), 201)["id"];
  call("POST", "/session/" + id + "/mutate", {{"vertex", "Z"}}, 409);
  call("POST", "/session/" + id + "/mutate", json::object(), 400);
  call("POST", "/session/" + id + "/flip", {{"diagonal", {3, 8}}, {"choice", {5, 12}}}, 409);
  EXPECT_EQ(service.handle("DELETE", "/session/" + id, "").status, 405);
  EXPECT_EQ(service.handle("GET", "/elsewhere", "").status, 404);
}

TEST(SessionServer, ServesOverHttp) {
  SessionService service;
  httplib::Server server;
  service.mount(server);
  const int port = server.bind_to_any_port("127.0.0.1");
  ASSERT_GT(port, 0);
  std::thread worker([&] { server.listen_after_bind(); });
  server.wait_until_ready();

  httplib::Client client("127.0.0.1", port);
  const auto created = client.Post("/session", triangle_seed_spec().dump(), "application/json");
  ASSERT_TRUE(created);
  EXPECT_EQ(created->status, 201);
  const std::string id = json::parse(created->body)["id"];
  const auto mutated = client.Post("/session/" + id + "/mutate", R"({"vertex":"X"})", "application/json");
  ASSERT_TRUE(mutated);
  EXPECT_EQ(mutated->status, 200);
  EXPECT_EQ(quiver_from_json(json::parse(mutated->body)["quiver"]), fixtures::q_t_prime());
  const auto missing = client.Get("/session/zzz");
  ASSERT_TRUE(missing);
  EXPECT_EQ(missing->status, 404);

  server.stop();
  worker.join();
}

}  // namespace

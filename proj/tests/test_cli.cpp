#include <doctest.h>

#include <array>
#include <cstdio>
#include <sys/wait.h>
#include <thread>

#include "httplib.h"
#include "platkit/api.hpp"
#include "platkit/service.hpp"

using namespace platkit;

namespace {

struct Run {
  int exit_code;
  std::string out;
};

Run cli(const std::string& args) {
  const std::string cmd = std::string(PLATKIT_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = ::pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("info on the 2 4 1 3 1 plat") {
  const Run r = cli("info \"2 4 1 3 1\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("strands: 6") != std::string::npos);
  CHECK(r.out.find("bridge index: 3") != std::string::npos);
  CHECK(r.out.find("components: 1") != std::string::npos);
  CHECK(r.out.find("exponent sum: 5") != std::string::npos);
}

TEST_CASE("equiv exit codes") {
  const Run found = cli("equiv \"\" \"1\" --json");
  CHECK(found.exit_code == 0);
  CHECK(Json::parse(found.out).at("trace_length") == 1);
  CHECK(cli("equiv \"strands=4;\" \"2 2 2\"").exit_code == 2);
  CHECK(cli("equiv \"strands=4; 2 1 3 2 2 1 3 2\" \"strands=4;\" --budget-nodes 3").exit_code == 3);
  CHECK(cli("equiv \"1\" \"strands=4;\"").exit_code == 1);
}

TEST_CASE("errors exit 1 with a machine-readable body under --json") {
  const Run r = cli("info \"1 x\" --json");
  CHECK(r.exit_code == 1);
  CHECK(Json::parse(r.out).at("error").at("code") == "parse");
  CHECK(cli("stabilize \"1\" --sign 3").exit_code == 1);
}

TEST_CASE("CLI and service emit byte-identical JSON") {
  Service service;
  const int port = service.bind_any_port("127.0.0.1");
  REQUIRE(port > 0);
  std::thread t([&] { service.listen_after_bind(); });
  httplib::Client client("127.0.0.1", port);
  client.set_read_timeout(60, 0);

  const Json ex{{"strands", 6}, {"word", {2, 4, 1, 3, 1}}, {"convention", "standard-cups"}};
  auto res = client.Post("/plat/validate", Json{{"plat", ex}}.dump(), "application/json");
  REQUIRE(res);
  CHECK(cli("info \"2 4 1 3 1\" --json").out == res->body);

  res = client.Post("/plat/invariants", Json{{"plat", ex}}.dump(), "application/json");
  REQUIRE(res);
  CHECK(cli("invariants \"2 4 1 3 1\" --json").out == res->body);

  const Json p1{{"strands", 2}, {"word", Json::array()}, {"convention", "standard-cups"}};
  const Json p2{{"strands", 2}, {"word", {1}}, {"convention", "standard-cups"}};
  res = client.Post("/search/equivalence", Json{{"p1", p1}, {"p2", p2}}.dump(), "application/json");
  REQUIRE(res);
  CHECK(cli("equiv \"\" \"1\" --json").out == res->body);

  res = client.Post("/graph/explore", Json{{"seed", p1}, {"max_level", 3}}.dump(), "application/json");
  REQUIRE(res);
  CHECK(cli("graph \"\" --max-level 3 --json").out == res->body);

  res = client.Post("/plat/render", Json{{"plat", ex}}.dump(), "application/json");
  REQUIRE(res);
  CHECK(cli("render \"2 4 1 3 1\"").out == res->body);

  service.stop();
  t.join();
}

TEST_CASE("corpus verify runs offline and reports every check") {
  const Run r = cli("corpus verify --json");
  const Json j = Json::parse(r.out);
  CHECK(j.at("checks").size() == 12);
  CHECK(r.exit_code == (j.at("passed").get<bool>() ? 0 : 4));
  const Run list = cli("corpus list");
  CHECK(list.out.find("last-page-b8") != std::string::npos);
}

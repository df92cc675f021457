#include "platkit/service.hpp"

#include <fstream>

#include "httplib.h"
#include "platkit/api.hpp"

namespace platkit {

JobTable::JobTable(std::optional<std::filesystem::path> state_dir) : state_dir_(std::move(state_dir)) {
  if (state_dir_) std::filesystem::create_directories(*state_dir_);
}

JobTable::~JobTable() { wait_all(); }

void JobTable::wait_all() {
  std::vector<std::thread> workers;
  {
    std::lock_guard lock(mu_);
    workers.swap(workers_);
  }
  for (auto& t : workers) t.join();
}

Json JobTable::describe(const std::string& id, const Job& job) const {
  Json out{{"id", id}, {"kind", job.kind}, {"state", job.state}};
  if (!job.result.is_null()) out["result"] = job.result;
  if (!job.error.is_null()) out["error"] = job.error;
  return out;
}

std::string JobTable::submit(std::string kind, std::function<Json()> work,
                             std::function<std::string(const Json&)> state_of) {
  std::lock_guard lock(mu_);
  const std::string id = "job-" + std::to_string(next_id_++);
  jobs_[id].kind = std::move(kind);
  workers_.emplace_back([this, id, work = std::move(work), state_of = std::move(state_of)] {
    Json result, error;
    std::string state;
    try {
      result = work();
      state = state_of(result);
    } catch (const Error& e) {
      error = api::error_body(e).at("error");
      state = "failed";
    } catch (const std::exception& e) {
      error = Json{{"code", "internal"}, {"message", e.what()}};
      state = "failed";
    }
    std::lock_guard inner(mu_);
    Job& job = jobs_.at(id);
    job.result = std::move(result);
    job.error = std::move(error);
    job.state = std::move(state);
    if (state_dir_) {
      std::ofstream(*state_dir_ / (id + ".json")) << api::dump(describe(id, job));
    }
  });
  return id;
}

std::optional<Json> JobTable::get(const std::string& id) const {
  std::lock_guard lock(mu_);
  auto it = jobs_.find(id);
  if (it == jobs_.end()) return std::nullopt;
  return describe(id, it->second);
}

struct Service::Impl {
  explicit Impl(const ServiceOptions& o) : jobs(o.state_dir) {}
  httplib::Server server;
  JobTable jobs;
};

namespace {

void send_json(httplib::Response& res, int status, const Json& body) {
  res.status = status;
  res.set_content(api::dump(body), "application/json");
}

Json parse_body(const httplib::Request& req) {
  try {
    return Json::parse(req.body);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error("parse", std::string("malformed JSON body: ") + e.what());
  }
}

// Runs `op` and maps platkit errors to the documented statuses.
template <class F>
httplib::Server::Handler guarded(F op) {
  return [op](const httplib::Request& req, httplib::Response& res) {
    try {
      op(req, res);
    } catch (const Error& e) {
      send_json(res, api::http_status(e), api::error_body(e));
    } catch (const nlohmann::json::exception& e) {
      send_json(res, 400, api::error_body(Error("parse", e.what())));
    } catch (const std::exception& e) {
      send_json(res, 500, Json{{"error", {{"code", "internal"}, {"message", e.what()}}}});
    }
  };
}

bool wants_async(const Json& body) {
  auto it = body.find("async");
  return it != body.end() && it->is_boolean() && it->get<bool>();
}

}  // namespace

Service::Service(ServiceOptions options) : impl_(std::make_unique<Impl>(options)) {
  auto& s = impl_->server;
  auto& jobs = impl_->jobs;
  auto sync = [](Json (*op)(const Json&)) {
    return guarded([op](const httplib::Request& req, httplib::Response& res) { send_json(res, 200, op(parse_body(req))); });
  };
  s.Post("/plat/validate", sync(&api::validate));
  s.Post("/plat/invariants", sync(&api::invariants));
  s.Post("/plat/move", sync(&api::move));
  s.Post("/plat/stabilize", sync(&api::stabilize));
  s.Post("/plat/destabilize", sync(&api::destabilize));
  s.Post("/plat/flip", sync(&api::flip));
  s.Post("/plat/pocket", sync(&api::pocket));
  s.Post("/plat/render", guarded([](const httplib::Request& req, httplib::Response& res) {
           res.set_content(api::render(parse_body(req)), "image/svg+xml");
         }));
  s.Get("/hilden/generators", guarded([](const httplib::Request& req, httplib::Response& res) {
          if (!req.has_param("n")) throw Error("parse", "missing query parameter 'n'");
          int n = 0;
          try {
            n = std::stoi(req.get_param_value("n"));
          } catch (const std::exception&) {
            throw Error("parse", "query parameter 'n' must be an integer");
          }
          send_json(res, 200, api::generators(n));
        }));

  auto async_or_sync = [&jobs](std::string kind, Json (*op)(const Json&), std::string (*state_of)(const Json&)) {
    return guarded([&jobs, kind, op, state_of](const httplib::Request& req, httplib::Response& res) {
      Json body = parse_body(req);
      if (!wants_async(body)) {
        send_json(res, 200, op(body));
        return;
      }
      const std::string id = jobs.submit(kind, [op, body] { return op(body); }, state_of);
      send_json(res, 202, *jobs.get(id));
    });
  };
  s.Post("/search/equivalence",
         async_or_sync("equivalence", &api::equivalence, [](const Json& r) { return r.at("status").get<std::string>(); }));
  s.Post("/graph/explore", async_or_sync("explore", &api::explore_graph, [](const Json&) { return std::string("done"); }));
  s.Get(R"(/search/jobs/([A-Za-z0-9\-]+))", guarded([&jobs](const httplib::Request& req, httplib::Response& res) {
          auto job = jobs.get(req.matches[1]);
          if (!job) throw Error("not_found", "no job " + std::string(req.matches[1]));
          send_json(res, 200, *job);
        }));
}

Service::~Service() {
  stop();
  impl_->jobs.wait_all();
}

bool Service::listen(const std::string& host, int port) { return impl_->server.listen(host, port); }
int Service::bind_any_port(const std::string& host) { return impl_->server.bind_to_any_port(host); }
bool Service::listen_after_bind() { return impl_->server.listen_after_bind(); }
void Service::stop() { impl_->server.stop(); }
JobTable& Service::jobs() { return impl_->jobs; }

}  // namespace platkit

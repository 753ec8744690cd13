#include "clothoid/service.hpp"

#include <regex>
#include <set>

#include <httplib.h>
#include <json.hpp>

#include "clothoid/error.hpp"
#include "clothoid/io.hpp"

namespace clothoid {

using nlohmann::json;

namespace {

HttpReply error_reply(int status, std::string_view code, const std::string& message,
                      std::optional<std::size_t> index = std::nullopt) {
  json err = {{"code", code}, {"message", message}};
  if (index) err["index"] = *index;
  return {status, json{{"error", err}}.dump(), "application/json"};
}

int status_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::ValidationError:
    case ErrorCode::WeightSum:
      return 400;
    case ErrorCode::ResourceLimit:
      return 413;
    default:
      return 422;
  }
}

SchemeSpec read_scheme(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ValidationError, "scheme: expected an object");
  for (const auto& item : j.items()) {
    if (item.key() != "kind" && item.key() != "n" && item.key() != "omega" &&
        item.key() != "outer") {
      throw Error(ErrorCode::ValidationError, "scheme." + item.key() + ": unknown field");
    }
  }
  const std::string kind = j.value("kind", std::string("lr"));
  if (kind == "lr") {
    const json n = j.value("n", json(1));
    if (!n.is_number_integer()) throw Error(ErrorCode::ValidationError, "scheme.n: expected an integer");
    return SchemeSpec::lane_riesenfeld(n.get<int>());
  }
  if (kind == "fourpoint") {
    const json omega = j.value("omega", json(-1.0 / 18.0));
    if (!omega.is_number()) throw Error(ErrorCode::ValidationError, "scheme.omega: expected a number");
    SchemeSpec spec = SchemeSpec::four_point(omega.get<double>());
    const std::string outer = j.value("outer", std::string("clothoid"));
    if (outer == "mean") {
      spec.outer = FourPointOuter::ComponentwiseMean;
    } else if (outer != "clothoid") {
      throw Error(ErrorCode::ValidationError, "scheme.outer: expected 'clothoid' or 'mean'");
    }
    return spec;
  }
  throw Error(ErrorCode::ValidationError, "scheme.kind: expected 'lr' or 'fourpoint'");
}

int read_int_field(const json& req, const char* key, int fallback) {
  if (!req.contains(key)) return fallback;
  if (!req[key].is_number_integer()) {
    throw Error(ErrorCode::ValidationError, std::string(key) + ": expected an integer");
  }
  return req[key].get<int>();
}

}  // namespace

bool is_local_origin(std::string_view origin) {
  static const std::regex pattern(R"(^http://(localhost|127\.0\.0\.1)(:[0-9]{1,5})?$)");
  return std::regex_match(origin.begin(), origin.end(), pattern);
}

HttpReply handle_health() {
  return {200, json{{"status", "ok"}, {"version", kVersion}}.dump(), "application/json"};
}

HttpReply handle_subdivide(std::string_view body) {
  json req;
  try {
    req = json::parse(body.begin(), body.end());
  } catch (const json::parse_error& e) {
    return error_reply(400, to_string(ErrorCode::ParseError), e.what());
  }

  try {
    if (!req.is_object()) throw Error(ErrorCode::ValidationError, "request: expected an object");
    for (const auto& item : req.items()) {
      static const std::set<std::string> allowed = {"input", "scheme", "levels", "newton_steps",
                                                    "want_curvature"};
      if (allowed.count(item.key()) == 0) {
        throw Error(ErrorCode::ValidationError, item.key() + ": unknown field");
      }
    }
    if (!req.contains("input")) throw Error(ErrorCode::ValidationError, "input: missing");
    const json& input = req["input"];
    if (input.is_object() && input.contains("couples") && input["couples"].is_array() &&
        input["couples"].size() > kServiceMaxCouples) {
      return error_reply(413, to_string(ErrorCode::ResourceLimit),
                         "at most " + std::to_string(kServiceMaxCouples) + " couples per request");
    }

    const int levels = read_int_field(req, "levels", 5);
    if (levels < 0 || levels > kServiceMaxLevels) {
      throw Error(ErrorCode::ValidationError,
                  "levels: must lie in [0, " + std::to_string(kServiceMaxLevels) + "]");
    }
    SchemeSpec scheme = req.contains("scheme") ? read_scheme(req["scheme"])
                                               : SchemeSpec::lane_riesenfeld(1);
    scheme.fit.newton_steps = read_int_field(req, "newton_steps", 0);
    bool want_curvature = true;
    if (req.contains("want_curvature")) {
      if (!req["want_curvature"].is_boolean()) {
        throw Error(ErrorCode::ValidationError, "want_curvature: expected a boolean");
      }
      want_curvature = req["want_curvature"].get<bool>();
    }
    scheme.validate();

    const InputDocument doc = input_from_json(input, ParseOptions{false});
    const RunReport report = run_subdivision(doc, scheme, levels, want_curvature);
    return {200, serialize_report(report), "application/json"};
  } catch (const Error& e) {
    return error_reply(status_for(e.code()), to_string(e.code()), e.what(), e.index());
  }
}

struct Service::Impl {
  ServiceConfig config;
  httplib::Server server;
  int port = -1;
};

Service::Service(ServiceConfig config) : impl_(std::make_unique<Impl>()) {
  impl_->config = std::move(config);
  auto& server = impl_->server;
  server.set_payload_max_length(4u << 20);

  server.set_post_routing_handler([](const httplib::Request& req, httplib::Response& res) {
    const std::string origin = req.get_header_value("Origin");
    if (!origin.empty() && is_local_origin(origin)) {
      res.set_header("Access-Control-Allow-Origin", origin);
      res.set_header("Vary", "Origin");
    }
  });

  server.Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) {
    res.status = 204;
    res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
  });

  server.Get("/api/health", [](const httplib::Request&, httplib::Response& res) {
    const HttpReply reply = handle_health();
    res.status = reply.status;
    res.set_content(reply.body, reply.content_type);
  });

  server.Post("/api/subdivide", [](const httplib::Request& req, httplib::Response& res) {
    const HttpReply reply = handle_subdivide(req.body);
    res.status = reply.status;
    res.set_content(reply.body, reply.content_type);
  });

  server.Get("/api/subdivide", [](const httplib::Request&, httplib::Response& res) {
    res.status = 405;
    res.set_header("Allow", "POST");
    const HttpReply reply = error_reply(405, "MethodNotAllowed", "use POST");
    res.set_content(reply.body, reply.content_type);
  });

  const auto& dir = impl_->config.static_dir;
  if (dir && std::filesystem::is_directory(*dir)) {
    server.set_mount_point("/", dir->string());
  } else {
    server.Get("/", [](const httplib::Request&, httplib::Response& res) {
      res.set_content(
          "<!DOCTYPE html><html><body><p>Editor bundle not installed. "
          "API: POST /api/subdivide, GET /api/health.</p></body></html>",
          "text/html");
    });
  }
}

Service::~Service() { stop(); }

int Service::bind() {
  auto& cfg = impl_->config;
  if (cfg.port == 0) {
    impl_->port = impl_->server.bind_to_any_port(cfg.bind_address);
  } else {
    impl_->port = impl_->server.bind_to_port(cfg.bind_address, cfg.port) ? cfg.port : -1;
  }
  return impl_->port;
}

bool Service::run() { return impl_->port > 0 && impl_->server.listen_after_bind(); }

void Service::stop() {
  if (impl_) impl_->server.stop();
}

void Service::wait_until_ready() const { impl_->server.wait_until_ready(); }

}  // namespace clothoid

#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

namespace clothoid {

inline constexpr int kServiceMaxLevels = 10;
inline constexpr std::size_t kServiceMaxCouples = 512;

struct HttpReply {
  int status = 200;
  std::string body;
  std::string content_type = "application/json";
};

/// POST /api/subdivide body -> RunReport JSON (200), or an error object
/// {"error": {"code", "message", "index"?}} with status 400, 413 or 422.
HttpReply handle_subdivide(std::string_view body);

/// GET /api/health body.
HttpReply handle_health();

/// True for origins of local development servers (http://localhost:PORT, 127.0.0.1).
bool is_local_origin(std::string_view origin);

struct ServiceConfig {
  std::string bind_address = "127.0.0.1";
  int port = 8080;  ///< 0 picks a free port
  std::optional<std::filesystem::path> static_dir;
};

/// HTTP facade over the library. Stateless; requests are served concurrently.
class Service {
 public:
  explicit Service(ServiceConfig config);
  ~Service();
  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  /// Binds the socket and returns the port, or -1 on failure.
  int bind();
  /// Blocks serving requests until stop(). Requires a successful bind().
  bool run();
  void stop();
  /// Blocks until the server accepts connections.
  void wait_until_ready() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace clothoid

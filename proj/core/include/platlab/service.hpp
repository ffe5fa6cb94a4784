#pragma once

// HTTP API used by the level editor.
//
//   POST /api/analyze   {"level": {...}, "parameters": {...}?}   -> analysis report
//   POST /api/paths     {"level": {...}, "parameters": {...}?, "metric": "..."?} -> path report
//   POST /api/validate  {"suite": {...}, "trials": "<csv>" | [...],
//                        "grid": {"noise": [...], "rt": [...], "ps": [...]}?,
//                        "parameters": {...}?}                     -> MAE grid
//   GET  /api/defaults                                             -> default parameters
//   GET  /healthz                                                  -> "ok"
//
// 400: malformed JSON or schema violations ({"error", "path"}).
// 422: level validation failures ({"error", "diagnostics"}).
//
// The handlers below are plain functions so they can be exercised without
// a socket; serve() only routes to them.

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "platlab/analysis.hpp"

namespace platlab::service {

struct Response {
    int status = 200;
    std::string content_type = "application/json";
    std::string body;
};

Response handle_analyze(std::string_view body, const AnalysisParameters& defaults, unsigned threads = 0);
Response handle_paths(std::string_view body, const AnalysisParameters& defaults, unsigned threads = 0);
Response handle_validate(std::string_view body, const AnalysisParameters& defaults);
Response handle_defaults(const AnalysisParameters& defaults);
Response handle_health();

struct ServerOptions {
    std::string host = "127.0.0.1";
    int port = 8080;
    std::optional<std::filesystem::path> static_dir;
    unsigned analysis_threads = 1;  // per request; requests run concurrently
};

class Server {
public:
    Server(ServerOptions options, AnalysisParameters defaults);
    ~Server();
    Server(const Server&) = delete;
    Server& operator=(const Server&) = delete;

    /// Binds the configured port (0 picks a free one). Returns the bound
    /// port, or -1 on failure.
    int bind();
    /// Serves until stop() is called from another thread.
    bool listen();
    void stop();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// bind() + listen(). Returns false if the port could not be bound.
bool serve(const ServerOptions& options, const AnalysisParameters& defaults);

}  // namespace platlab::service

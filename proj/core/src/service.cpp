#include "platlab/service.hpp"

#include <httplib.h>

#include "platlab/detail/json_reader.hpp"
#include "platlab/errors.hpp"
#include "platlab/level_io.hpp"
#include "platlab/validation.hpp"

namespace platlab::service {

namespace {

Response json_response(int status, const nlohmann::json& j) { return {status, "application/json", dump_report(j)}; }

Response error_response(int status, std::string_view message, std::string_view path = {}) {
    nlohmann::json j = {{"error", message}};
    if (!path.empty()) j["path"] = path;
    return json_response(status, j);
}

struct LevelRequest {
    Level level;
    AnalysisParameters params;
};

LevelRequest read_level_request(std::string_view body, const AnalysisParameters& defaults, bool allow_metric) {
    const auto doc = parse_json(body);
    detail::ObjectReader r(doc, "");
    LevelRequest req;
    req.level = level_from_json(r.raw("level"), "level");
    req.params = apply_parameter_overrides(defaults, r.optional_raw("parameters") ? r.raw("parameters") : nlohmann::json());
    if (allow_metric && r.has("metric")) {
        const auto s = r.string("metric");
        const auto metric = path_metric_from_string(s);
        if (!metric) throw SchemaError("metric", "expected \"difficulty\" or \"probability\"");
        req.params.metric = *metric;
    }
    r.finish();
    return req;
}

template <class F>
Response guarded(F&& f) {
    try {
        return f();
    } catch (const ParseError& e) {
        nlohmann::json j = {{"error", e.what()}, {"line", e.line()}, {"column", e.column()}};
        return json_response(400, j);
    } catch (const SchemaError& e) {
        return error_response(400, e.what(), e.path());
    } catch (const TrialFormatError& e) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& row : e.rows()) rows.push_back({{"row", row.row}, {"message", row.message}});
        return json_response(400, {{"error", "malformed trial rows"}, {"rows", rows}});
    } catch (const UnknownScreenError& e) {
        return json_response(400, {{"error", "unknown screen ids"}, {"ids", e.ids()}});
    } catch (const std::invalid_argument& e) {
        return error_response(400, e.what());
    }
}

Response invalid_level(const std::vector<Diagnostic>& diagnostics) {
    return json_response(422, {{"error", "level failed validation"}, {"diagnostics", diagnostics_to_json(diagnostics)}});
}

std::vector<double> number_list(const nlohmann::json& j, const std::string& path) {
    if (!j.is_array() || j.empty()) throw SchemaError(path, "expected a nonempty array of numbers");
    std::vector<double> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        out.push_back(detail::ObjectReader::as_number(j[i], path + "[" + std::to_string(i) + "]"));
    }
    return out;
}

}  // namespace

Response handle_analyze(std::string_view body, const AnalysisParameters& defaults, unsigned threads) {
    return guarded([&] {
        const auto req = read_level_request(body, defaults, false);
        const auto diagnostics = validate_level(req.level);
        if (!diagnostics.empty()) return invalid_level(diagnostics);
        return json_response(200, report_to_json(analyze(req.level, req.params, threads)));
    });
}

Response handle_paths(std::string_view body, const AnalysisParameters& defaults, unsigned threads) {
    return guarded([&] {
        const auto req = read_level_request(body, defaults, true);
        const auto diagnostics = validate_level(req.level);
        if (!diagnostics.empty()) return invalid_level(diagnostics);
        const auto a = analyze(req.level, req.params, threads);
        return json_response(200, path_report_to_json(a.graph, a.paths));
    });
}

Response handle_validate(std::string_view body, const AnalysisParameters& defaults) {
    return guarded([&] {
        const auto doc = parse_json(body);
        detail::ObjectReader r(doc, "");
        const auto suite = suite_from_json(r.raw("suite"));
        for (const auto& screen : suite.screens) {
            const auto diagnostics = validate_level(screen.level);
            if (!diagnostics.empty()) return invalid_level(diagnostics);
        }
        const auto& trials_json = r.raw("trials");
        const auto ids = suite.ids();
        TrialLog log;
        if (trials_json.is_string()) {
            log = parse_trials(trials_json.get<std::string>(), &ids);
        } else {
            log = parse_trials_json(trials_json.dump(), &ids);
        }
        if (log.records.empty()) throw SchemaError("trials", "no trial records");

        auto params = apply_parameter_overrides(defaults, r.optional_raw("parameters") ? r.raw("parameters") : nlohmann::json());
        std::vector<NoiseKind> kinds{params.noise.kind};
        std::vector<double> rts{params.noise.reaction_time};
        std::vector<double> pss{params.noise.player_skill};
        if (const auto* g = r.optional_raw("grid")) {
            detail::ObjectReader gr(*g, "grid");
            if (const auto* n = gr.optional_raw("noise")) {
                if (!n->is_array() || n->empty()) throw SchemaError("grid.noise", "expected a nonempty array");
                kinds.clear();
                for (std::size_t i = 0; i < n->size(); ++i) {
                    const std::string path = "grid.noise[" + std::to_string(i) + "]";
                    if (!(*n)[i].is_string()) throw SchemaError(path, "expected a string");
                    const auto kind = noise_kind_from_string((*n)[i].get<std::string>());
                    if (!kind) throw SchemaError(path, "unknown noise kind");
                    kinds.push_back(*kind);
                }
            }
            if (const auto* v = gr.optional_raw("rt")) rts = number_list(*v, "grid.rt");
            if (const auto* v = gr.optional_raw("ps")) pss = number_list(*v, "grid.ps");
            gr.finish();
        }
        r.finish();
        const auto grid = mae_grid(suite, summarize(log.records, suite), kinds, rts, pss, params.sampling, params.difficulty);
        return json_response(200, grid_to_json(grid));
    });
}

Response handle_defaults(const AnalysisParameters& defaults) { return json_response(200, parameters_to_json(defaults)); }

Response handle_health() { return {200, "text/plain", "ok"}; }

struct Server::Impl {
    ServerOptions options;
    AnalysisParameters defaults;
    httplib::Server http;
};

Server::Server(ServerOptions options, AnalysisParameters defaults) : impl_(std::make_unique<Impl>()) {
    impl_->options = std::move(options);
    impl_->defaults = std::move(defaults);
    auto& http = impl_->http;
    Impl* self = impl_.get();

    auto reply = [](httplib::Response& res, const Response& r) {
        res.status = r.status;
        res.set_content(r.body, r.content_type);
    };
    http.Post("/api/analyze", [self, reply](const httplib::Request& req, httplib::Response& res) {
        reply(res, handle_analyze(req.body, self->defaults, self->options.analysis_threads));
    });
    http.Post("/api/paths", [self, reply](const httplib::Request& req, httplib::Response& res) {
        reply(res, handle_paths(req.body, self->defaults, self->options.analysis_threads));
    });
    http.Post("/api/validate", [self, reply](const httplib::Request& req, httplib::Response& res) {
        reply(res, handle_validate(req.body, self->defaults));
    });
    http.Get("/api/defaults", [self, reply](const httplib::Request&, httplib::Response& res) {
        reply(res, handle_defaults(self->defaults));
    });
    http.Get("/healthz", [reply](const httplib::Request&, httplib::Response& res) { reply(res, handle_health()); });
    if (impl_->options.static_dir) http.set_mount_point("/", impl_->options.static_dir->string());
}

Server::~Server() = default;

int Server::bind() {
    auto& o = impl_->options;
    if (o.port == 0) return impl_->http.bind_to_any_port(o.host);
    return impl_->http.bind_to_port(o.host, o.port) ? o.port : -1;
}

bool Server::listen() { return impl_->http.listen_after_bind(); }

void Server::stop() { impl_->http.stop(); }

bool serve(const ServerOptions& options, const AnalysisParameters& defaults) {
    Server server(options, defaults);
    if (server.bind() < 0) return false;
    return server.listen();
}

}  // namespace platlab::service

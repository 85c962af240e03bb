// Copyright 2026 The stylemine Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "stylemine/cli/server.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <algorithm>
#include <fstream>
#include <mutex>
#include <sstream>

#include <httplib.h>
#include <json.hpp>
#include <spdlog/spdlog.h>

#include "stylemine/cli/annotate.hpp"
#include "stylemine/errors.hpp"

namespace stylemine::cli {
namespace {

namespace fs = std::filesystem;

void send_error(httplib::Response& res, int status, const std::string& message) {
  res.status = status;
  res.set_content(nlohmann::json{{"error", message}}.dump(), "application/json");
}

/// Exclusive advisory lock on a file, released on destruction.
class FileLock {
 public:
  explicit FileLock(const fs::path& path) {
    fd_ = ::open(path.c_str(), O_CREAT | O_RDWR, 0644);
    if (fd_ < 0 || ::flock(fd_, LOCK_EX) != 0) {
      if (fd_ >= 0) ::close(fd_);
      throw Error("cannot lock " + path.string());
    }
  }
  ~FileLock() {
    ::flock(fd_, LOCK_UN);
    ::close(fd_);
  }
  FileLock(const FileLock&) = delete;
  FileLock& operator=(const FileLock&) = delete;

 private:
  int fd_ = -1;
};

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<std::string> list_sources(const fs::path& root) {
  std::vector<std::string> out;
  for (const auto& entry : fs::recursive_directory_iterator(root)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".js") continue;
    const auto rel = fs::relative(entry.path(), root).generic_string();
    if (rel.rfind(".git/", 0) == 0) continue;
    out.push_back(rel);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

struct AnnotationServer::Impl {
  ModelFile model;
  ServerOptions options;
  fs::path config_path;
  fs::path lock_path;
  std::mutex write_mutex;
  httplib::Server http;
  std::set<std::uint32_t> known_hashes;

  RunConfig config() const { return resolve_config(load_config_file(config_path), {}); }

  void routes();
  void handle_annotate(const httplib::Request& req, httplib::Response& res);
  void handle_blacklist(const httplib::Request& req, httplib::Response& res);
};

AnnotationServer::AnnotationServer(ModelFile model, ServerOptions options)
    : impl_(std::make_unique<Impl>()) {
  impl_->model = std::move(model);
  impl_->options = std::move(options);
  impl_->config_path =
      impl_->options.config_path.value_or(impl_->options.corpus_root / kConfigFileName);
  impl_->lock_path = impl_->config_path;
  impl_->lock_path += ".lock";
  for (const auto& r : impl_->model.model.rules.rules) impl_->known_hashes.insert(r.hash);
  impl_->routes();
}

AnnotationServer::~AnnotationServer() { stop(); }

std::vector<std::string> AnnotationServer::files() const {
  return list_sources(impl_->options.corpus_root);
}

void AnnotationServer::Impl::routes() {
  if (!options.assets.empty()) http.set_mount_point("/", options.assets.string());

  http.Get("/files", [this](const httplib::Request&, httplib::Response& res) {
    res.set_content(nlohmann::json{{"files", list_sources(options.corpus_root)}}.dump(),
                    "application/json");
  });

  http.Get("/annotate", [this](const httplib::Request& req, httplib::Response& res) {
    handle_annotate(req, res);
  });

  http.Post("/blacklist", [this](const httplib::Request& req, httplib::Response& res) {
    handle_blacklist(req, res);
  });

  http.set_exception_handler(
      [](const httplib::Request&, httplib::Response& res, std::exception_ptr ep) {
        try {
          std::rethrow_exception(ep);
        } catch (const std::exception& e) {
          send_error(res, 500, e.what());
        } catch (...) {
          send_error(res, 500, "internal error");
        }
      });
  http.set_error_handler([](const httplib::Request&, httplib::Response& res) {
    if (res.body.empty()) {
      send_error(res, res.status, res.status == 404 ? "not found" : "request failed");
    }
  });
}

void AnnotationServer::Impl::handle_annotate(const httplib::Request& req,
                                             httplib::Response& res) {
  if (!req.has_param("path")) return send_error(res, 400, "missing path parameter");
  const auto rel = req.get_param_value("path");
  const fs::path relative(rel);
  const auto bad_part = std::any_of(relative.begin(), relative.end(),
                                    [](const fs::path& p) { return p == ".."; });
  if (rel.empty() || relative.is_absolute() || bad_part || relative.extension() != ".js") {
    return send_error(res, 404, "unknown file: " + rel);
  }
  const auto full = options.corpus_root / relative;
  if (!fs::is_regular_file(full)) return send_error(res, 404, "unknown file: " + rel);

  RunConfig cfg;
  try {
    cfg = config();
  } catch (const ConfigError& e) {
    return send_error(res, 500, e.what());
  }
  AnnotationOptions opts;
  opts.min_confidence = cfg.confidence_threshold;
  opts.min_support = cfg.min_support;
  opts.blacklist = cfg.blacklist;
  try {
    if (req.has_param("confidence")) {
      opts.min_confidence = std::stod(req.get_param_value("confidence"));
    }
    if (req.has_param("support")) {
      opts.min_support = std::stoull(req.get_param_value("support"));
    }
  } catch (const std::exception&) {
    return send_error(res, 400, "malformed threshold");
  }
  if (!(opts.min_confidence >= 0.0)) return send_error(res, 400, "malformed threshold");

  auto source = read_file(full);
  if (source.size() > apply::kAnalysisByteCap) {
    return send_error(res, 413, "file exceeds the analysis size cap");
  }
  try {
    const auto doc = annotate(model.model, rel, std::move(source), opts);
    res.set_content(to_json(doc), "application/json");
  } catch (const ParseError& e) {
    send_error(res, 422, e.what());
  } catch (const EncodingError& e) {
    send_error(res, 422, e.what());
  }
}

void AnnotationServer::Impl::handle_blacklist(const httplib::Request& req,
                                              httplib::Response& res) {
  std::uint32_t hash = 0;
  try {
    const auto body = nlohmann::json::parse(req.body);
    hash = rules::parse_hash(body.at("hash").get<std::string>());
  } catch (const std::exception&) {
    return send_error(res, 400, "expected {\"hash\": \"<8 hex digits>\"}");
  }
  std::set<std::uint32_t> blacklist;
  bool now_blacklisted = false;
  {
    const std::lock_guard guard(write_mutex);
    const FileLock lock(lock_path);
    try {
      blacklist = config().blacklist;
    } catch (const ConfigError& e) {
      return send_error(res, 500, e.what());
    }
    // Stale entries from an older model may still be removed.
    if (!known_hashes.count(hash) && !blacklist.count(hash)) {
      return send_error(res, 404, "unknown rule hash " + rules::hash_hex(hash));
    }
    now_blacklisted = blacklist.insert(hash).second;
    if (!now_blacklisted) blacklist.erase(hash);
    write_blacklist(config_path, blacklist);
  }
  spdlog::info("rule {} {}", rules::hash_hex(hash),
               now_blacklisted ? "blacklisted" : "re-enabled");
  nlohmann::json list = nlohmann::json::array();
  for (const auto h : blacklist) list.push_back(rules::hash_hex(h));
  res.set_content(nlohmann::json{{"hash", rules::hash_hex(hash)},
                                 {"blacklisted", now_blacklisted},
                                 {"blacklist", list}}
                      .dump(),
                  "application/json");
}

int AnnotationServer::bind() {
  auto& o = impl_->options;
  if (o.port == 0) {
    o.port = impl_->http.bind_to_any_port(o.host);
    if (o.port < 0) throw Error("cannot bind " + o.host);
  } else if (!impl_->http.bind_to_port(o.host, o.port)) {
    throw Error("cannot bind " + o.host + ":" + std::to_string(o.port));
  }
  return o.port;
}

void AnnotationServer::run() { impl_->http.listen_after_bind(); }

void AnnotationServer::stop() {
  if (impl_ && impl_->http.is_running()) impl_->http.stop();
}

}  // namespace stylemine::cli

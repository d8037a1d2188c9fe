#pragma once

#include <functional>
#include <iostream>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

namespace claimgraph::log {

enum class level { debug, info, warn, err };

using sink_fn = std::function<void(level, const std::string&)>;

namespace detail {
inline std::mutex& mutex() {
  static std::mutex m;
  return m;
}
inline sink_fn& sink() {
  static sink_fn s;
  return s;
}
inline const char* tag(level l) {
  switch (l) {
    case level::debug: return "debug";
    case level::info: return "info";
    case level::warn: return "warn";
    case level::err: return "error";
  }
  return "?";
}
}  // namespace detail

// Replaces the global sink; pass nullptr to restore stderr output.
// Tests use this to capture warnings.
inline void set_sink(sink_fn fn) {
  std::lock_guard<std::mutex> lock(detail::mutex());
  detail::sink() = std::move(fn);
}

inline void emit(level l, const std::string& message) {
  std::lock_guard<std::mutex> lock(detail::mutex());
  if (detail::sink()) {
    detail::sink()(l, message);
  } else {
    std::cerr << "[" << detail::tag(l) << "] " << message << "\n";
  }
}

inline void info(const std::string& m) { emit(level::info, m); }
inline void warn(const std::string& m) { emit(level::warn, m); }

// RAII capture of log lines, for asserting "warning logged" contracts.
class capture {
public:
  capture() {
    set_sink([this](level l, const std::string& m) {
      std::lock_guard<std::mutex> lock(lines_mutex_);
      lines_.emplace_back(l, m);
    });
  }
  ~capture() { set_sink(nullptr); }

  capture(const capture&) = delete;
  capture& operator=(const capture&) = delete;

  bool contains(const std::string& needle) const {
    std::lock_guard<std::mutex> lock(lines_mutex_);
    for (const auto& [l, m] : lines_) {
      if (m.find(needle) != std::string::npos) return true;
    }
    return false;
  }

  std::size_t count(level l) const {
    std::lock_guard<std::mutex> lock(lines_mutex_);
    std::size_t n = 0;
    for (const auto& [lv, m] : lines_) {
      if (lv == l) ++n;
    }
    return n;
  }

private:
  mutable std::mutex lines_mutex_;
  std::vector<std::pair<level, std::string>> lines_;
};

}  // namespace claimgraph::log

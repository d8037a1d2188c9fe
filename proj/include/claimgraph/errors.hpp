#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace claimgraph {

// Error categories; the CLI maps these onto process exit codes.
enum class errc {
  config,       // bad configuration file / key / value
  parse,        // malformed persisted artifact (graph file, corpus, script)
  not_found,    // unknown claim id, missing file
  argument,     // invalid in-process argument (empty list, bad range)
  transport,    // network exhaustion, unusable HTTP response
  script_miss,  // strict mock hit an unscripted fingerprint
  judge_parse,  // judge output unparseable after reprompt
  extraction,   // model output for a chunk unparseable after reprompt
  pipeline,     // a pipeline stage failed fatally
};

class error : public std::runtime_error {
public:
  error(errc kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}

  errc kind() const noexcept { return kind_; }

private:
  errc kind_;
};

inline error config_error(const std::string& m) { return {errc::config, m}; }
inline error parse_error(const std::string& m) { return {errc::parse, m}; }
inline error not_found_error(const std::string& m) { return {errc::not_found, m}; }
inline error argument_error(const std::string& m) { return {errc::argument, m}; }
inline error transport_error(const std::string& m) { return {errc::transport, m}; }
inline error script_miss_error(const std::string& m) { return {errc::script_miss, m}; }
inline error judge_parse_error(const std::string& m) { return {errc::judge_parse, m}; }
inline error extraction_error(const std::string& m) { return {errc::extraction, m}; }
inline error pipeline_error(const std::string& m) { return {errc::pipeline, m}; }

}  // namespace claimgraph

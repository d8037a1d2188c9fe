#pragma once

#include <atomic>
#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "claimgraph/errors.hpp"
#include "claimgraph/util.hpp"

namespace claimgraph {

struct GenerationRequest {
  std::string prompt;
  int max_tokens = 512;
  double temperature = 0.0;
  std::vector<std::string> stop_sequences;
};

struct EmbeddingVector {
  std::vector<double> values;
  std::size_t dimension() const { return values.size(); }
};

struct RerankScore {
  std::string query;
  std::string passage;
  double score = 0.0;  // model-specific units; only the ordering is meaningful
};

struct JudgeResult {
  bool verdict = false;
  std::string rationale;
};

// Request fingerprints: operation kind + SHA-256 of the canonicalized inputs
// (sorted-key compact JSON). Stable across runs and platforms; mock scripts
// and golden transcripts key on these.
namespace fingerprint {

inline std::string generate(const GenerationRequest& req) {
  nlohmann::json j{{"max_tokens", req.max_tokens},
                   {"prompt", req.prompt},
                   {"stop", req.stop_sequences},
                   {"temperature", req.temperature}};
  return "generate:" + util::sha256_hex(j.dump());
}

inline std::string embed(const std::string& text) {
  nlohmann::json j{{"text", text}};
  return "embed:" + util::sha256_hex(j.dump());
}

inline std::string rerank(const std::string& query, const std::string& passage) {
  nlohmann::json j{{"passage", passage}, {"query", query}};
  return "rerank:" + util::sha256_hex(j.dump());
}

}  // namespace fingerprint

// Per-kind call/item counters. Tests assert stage contracts against these
// (e.g. the baseline QA variant never touches embed or rerank).
struct CallLedger {
  std::atomic<std::size_t> generate_calls{0};
  std::atomic<std::size_t> embed_calls{0};
  std::atomic<std::size_t> embed_items{0};
  std::atomic<std::size_t> rerank_calls{0};
  std::atomic<std::size_t> rerank_items{0};
};

// Single abstraction over all model services. Implementations must be safe
// for concurrent callers; results are always in input order.
class ModelGateway {
public:
  virtual ~ModelGateway() = default;

  std::string generate(const GenerationRequest& request) {
    if (request.max_tokens <= 0) throw argument_error("max_tokens must be positive");
    if (request.temperature < 0.0) throw argument_error("temperature must be >= 0");
    ledger_.generate_calls.fetch_add(1);
    return do_generate(request);
  }

  std::vector<EmbeddingVector> embed(const std::vector<std::string>& texts) {
    if (texts.empty()) throw argument_error("embed requires a non-empty list");
    ledger_.embed_calls.fetch_add(1);
    ledger_.embed_items.fetch_add(texts.size());
    auto out = do_embed(texts);
    if (out.size() != texts.size()) {
      throw transport_error("embedder returned " + std::to_string(out.size()) +
                            " vectors for " + std::to_string(texts.size()) + " inputs");
    }
    return out;
  }

  std::vector<RerankScore> rerank(const std::string& query,
                                  const std::vector<std::string>& passages) {
    if (passages.empty()) throw argument_error("rerank requires a non-empty passage list");
    ledger_.rerank_calls.fetch_add(1);
    ledger_.rerank_items.fetch_add(passages.size());
    auto out = do_rerank(query, passages);
    if (out.size() != passages.size()) {
      throw transport_error("reranker returned " + std::to_string(out.size()) +
                            " scores for " + std::to_string(passages.size()) + " passages");
    }
    return out;
  }

  // Asks a yes/no question of the generator and parses the verdict. One
  // corrective reprompt on unparseable output, then a judge-parse error
  // carrying the raw output. The rationale is the raw model output.
  JudgeResult judge_bool(const std::string& instruction, const std::string& context) {
    const std::string prompt =
        context.empty() ? instruction : instruction + "\n\n" + context;
    GenerationRequest req{prompt, 128, 0.0, {}};
    std::string raw = generate(req);
    if (auto verdict = parse_yes_no(raw)) return {*verdict, raw};
    GenerationRequest retry{prompt + "\n\nAnswer with YES or NO only.", 128, 0.0, {}};
    raw = generate(retry);
    if (auto verdict = parse_yes_no(raw)) return {*verdict, raw};
    throw judge_parse_error("judge output unparseable after reprompt: " + raw);
  }

  const CallLedger& ledger() const { return ledger_; }

  // First alphabetic token decides; anything else is a parse failure.
  static std::optional<bool> parse_yes_no(const std::string& raw) {
    std::string token;
    for (char c : raw) {
      if (std::isalpha(static_cast<unsigned char>(c))) {
        token.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
      } else if (!token.empty()) {
        break;
      }
    }
    if (token == "yes") return true;
    if (token == "no") return false;
    return std::nullopt;
  }

protected:
  virtual std::string do_generate(const GenerationRequest& request) = 0;
  virtual std::vector<EmbeddingVector> do_embed(const std::vector<std::string>& texts) = 0;
  virtual std::vector<RerankScore> do_rerank(const std::string& query,
                                             const std::vector<std::string>& passages) = 0;

private:
  CallLedger ledger_;
};

}  // namespace claimgraph

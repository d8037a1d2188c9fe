#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "claimgraph/gateway.hpp"
#include "claimgraph/util.hpp"

namespace claimgraph {

enum class MockMissPolicy {
  strict,  // unmatched fingerprint -> script-miss error naming the fingerprint
  derive,  // unmatched fingerprint -> deterministic derived default
};

// Deterministic scripted gateway. A pure function of (script, tables,
// request): full pipeline runs under it are bit-reproducible across runs,
// platforms, and concurrency levels.
//
// Lookup order per request: scripted fingerprint, injected fixture table,
// then the miss policy. Derived defaults: embed = seeded hash projection of
// the text (equal strings, equal vectors); rerank = cosine of the mock
// embeddings of query and passage; generate = an "ECHO[...]" marker string.
class MockGateway : public ModelGateway {
public:
  explicit MockGateway(MockMissPolicy policy = MockMissPolicy::derive)
      : policy_(policy) {}

  void set_policy(MockMissPolicy policy) { policy_ = policy; }

  // Script file: JSONL of {"kind":..., "fingerprint":..., "response":...}.
  // As a convenience an entry may carry "inputs" instead of "fingerprint";
  // the fingerprint is then computed on load.
  void load_script(const std::filesystem::path& path) {
    const std::string body = util::read_file(path);
    std::size_t line_no = 0;
    for (const std::string& line : util::split_lines(body)) {
      ++line_no;
      if (util::trim(line).empty()) continue;
      nlohmann::json entry;
      try {
        entry = nlohmann::json::parse(line);
      } catch (const nlohmann::json::exception& e) {
        throw parse_error("mock script line " + std::to_string(line_no) + ": " + e.what());
      }
      add_script_entry(entry, line_no);
    }
  }

  void add_script_entry(const nlohmann::json& entry, std::size_t line_no = 0) {
    const std::string where = line_no ? "mock script line " + std::to_string(line_no)
                                      : "mock script entry";
    if (!entry.is_object() || !entry.contains("kind") || !entry.contains("response")) {
      throw parse_error(where + ": requires 'kind' and 'response'");
    }
    const std::string kind = entry.at("kind").get<std::string>();
    if (kind != "generate" && kind != "embed" && kind != "rerank") {
      throw parse_error(where + ": unknown kind '" + kind + "'");
    }
    std::string fp;
    if (entry.contains("fingerprint")) {
      fp = entry.at("fingerprint").get<std::string>();
    } else if (entry.contains("inputs")) {
      const auto& in = entry.at("inputs");
      if (kind == "generate") {
        GenerationRequest req;
        req.prompt = in.at("prompt").get<std::string>();
        req.max_tokens = in.value("max_tokens", 512);
        req.temperature = in.value("temperature", 0.0);
        if (in.contains("stop")) {
          req.stop_sequences = in.at("stop").get<std::vector<std::string>>();
        }
        fp = fingerprint::generate(req);
      } else if (kind == "embed") {
        fp = fingerprint::embed(in.at("text").get<std::string>());
      } else {
        fp = fingerprint::rerank(in.at("query").get<std::string>(),
                                 in.at("passage").get<std::string>());
      }
    } else {
      throw parse_error(where + ": requires 'fingerprint' or 'inputs'");
    }
    script_[fp] = entry.at("response");
  }

  // Fixture tables for tests: exact vectors per text, exact score per passage.
  void set_embedding(const std::string& text, std::vector<double> vec) {
    embed_table_[text] = std::move(vec);
  }
  void set_rerank_score(const std::string& passage, double score) {
    rerank_table_[passage] = score;
  }
  void script_generate(const GenerationRequest& req, const std::string& response) {
    script_[fingerprint::generate(req)] = response;
  }
  void script_generate_prompt(const std::string& prompt, const std::string& response,
                              int max_tokens = 512) {
    script_generate(GenerationRequest{prompt, max_tokens, 0.0, {}}, response);
  }

  std::size_t mock_dimension() const { return mock_dim_; }
  void set_mock_dimension(std::size_t dim) { mock_dim_ = dim; }

  // The derived embedding: bytes of repeated SHA-256 over the text mapped to
  // doubles in [-1, 1], then L2-normalized. Implemented from the digest
  // directly so values are identical on every platform.
  std::vector<double> derived_embedding(const std::string& text) const {
    std::vector<double> values;
    values.reserve(mock_dim_);
    std::size_t block = 0;
    while (values.size() < mock_dim_) {
      const std::string digest_hex =
          util::sha256_hex("mock-embed:" + std::to_string(block) + ":" + text);
      for (std::size_t i = 0; i + 16 <= digest_hex.size() && values.size() < mock_dim_;
           i += 16) {
        std::uint64_t v = 0;
        for (std::size_t j = 0; j < 16; ++j) {
          const char c = digest_hex[i + j];
          v = (v << 4) | static_cast<std::uint64_t>(c <= '9' ? c - '0' : c - 'a' + 10);
        }
        // map to [-1, 1)
        values.push_back(static_cast<double>(v) / 9223372036854775808.0 - 1.0);
      }
      ++block;
    }
    double norm = 0.0;
    for (double v : values) norm += v * v;
    norm = std::sqrt(norm);
    if (norm > 0.0) {
      for (double& v : values) v /= norm;
    }
    return values;
  }

protected:
  std::string do_generate(const GenerationRequest& request) override {
    const std::string fp = fingerprint::generate(request);
    if (auto it = script_.find(fp); it != script_.end()) {
      return it->second.get<std::string>();
    }
    if (policy_ == MockMissPolicy::strict) {
      throw script_miss_error("mock script miss: " + fp);
    }
    return "ECHO[" + util::sha256_hex(request.prompt).substr(0, 12) + "]";
  }

  std::vector<EmbeddingVector> do_embed(const std::vector<std::string>& texts) override {
    std::vector<EmbeddingVector> out;
    out.reserve(texts.size());
    for (const std::string& text : texts) out.push_back({embed_one(text)});
    return out;
  }

  std::vector<RerankScore> do_rerank(const std::string& query,
                                     const std::vector<std::string>& passages) override {
    std::vector<RerankScore> out;
    out.reserve(passages.size());
    for (const std::string& passage : passages) {
      const std::string fp = fingerprint::rerank(query, passage);
      double score = 0.0;
      if (auto it = script_.find(fp); it != script_.end()) {
        score = it->second.get<double>();
      } else if (auto jt = rerank_table_.find(passage); jt != rerank_table_.end()) {
        score = jt->second;
      } else if (policy_ == MockMissPolicy::strict) {
        throw script_miss_error("mock script miss: " + fp);
      } else {
        score = util::cosine(embed_one(query), embed_one(passage));
      }
      out.push_back({query, passage, score});
    }
    return out;
  }

private:
  std::vector<double> embed_one(const std::string& text) {
    const std::string fp = fingerprint::embed(text);
    if (auto it = script_.find(fp); it != script_.end()) {
      return it->second.get<std::vector<double>>();
    }
    if (auto jt = embed_table_.find(text); jt != embed_table_.end()) {
      return jt->second;
    }
    if (policy_ == MockMissPolicy::strict) {
      throw script_miss_error("mock script miss: " + fp);
    }
    return derived_embedding(text);
  }

  MockMissPolicy policy_;
  std::size_t mock_dim_ = 32;
  std::unordered_map<std::string, nlohmann::json> script_;
  std::map<std::string, std::vector<double>> embed_table_;
  std::map<std::string, double> rerank_table_;
};

}  // namespace claimgraph

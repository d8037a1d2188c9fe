#pragma once

#include <set>
#include <string>
#include <vector>

namespace claimgraph {

// One retrieval unit of a source document.
struct DocumentChunk {
  std::string chunk_id;       // unique within a run, "{doc_id}#{index}"
  std::string corpus_id;
  std::string text;
  std::string source_doc_id;
};

// An atomic, decontextualized statement with provenance to its chunk.
struct Claim {
  std::string claim_id;
  std::string text;
  std::string source_chunk_id;
  double relevance_score = 0.0;  // reranker units, unnormalized; ordinal use only
};

// The single RDF triple extracted from one claim.
struct Triple {
  std::string claim_id;
  std::string subject;
  std::string predicate;
  std::string object;
};

// Canonical entity plus every raw surface form mapped onto it.
struct EntityNode {
  std::string canonical_label;
  std::set<std::string> member_surface_forms;
};

// Output of one layerwise summarization pass.
struct Summary {
  std::string text;
  std::string focus_claim_id;
  std::set<std::string> contributing_claim_ids;
  std::set<std::string> contributing_chunk_ids;
  int rank = 0;  // 1-based, unique within one question's summary set
};

// A multiple-choice question; labels are sorted single letters ("A", "B", ...).
struct MCQuestion {
  std::string question_id;
  std::string question;
  std::vector<std::pair<std::string, std::string>> options;  // (label, text), label-sorted
  std::string gold_label;                                    // may be empty for ask-only use
};

}  // namespace claimgraph

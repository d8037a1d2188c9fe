#pragma once

#include <algorithm>
#include <deque>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "claimgraph/errors.hpp"
#include "claimgraph/types.hpp"
#include "claimgraph/util.hpp"

namespace claimgraph {

// Undirected multigraph of canonical entities. Claims live on edges; two
// claims are adjacent when their edges share an endpoint node. Mutable while
// a single writer builds it, then treated as immutable.
class ClaimGraph {
public:
  struct Edge {
    std::string a;
    std::string b;
    Claim claim;
  };

  explicit ClaimGraph(bool allow_self_loops = true)
      : allow_self_loops_(allow_self_loops) {}

  // Ensures a node exists and merges surface forms into it. The canonical
  // label is always a member surface form.
  void add_node(const std::string& label, const std::set<std::string>& forms = {}) {
    if (label.empty()) throw argument_error("node label must be non-empty");
    EntityNode& node = nodes_[label];
    node.canonical_label = label;
    node.member_surface_forms.insert(label);
    node.member_surface_forms.insert(forms.begin(), forms.end());
  }

  // Inserts one edge carrying the claim between the triple's (already
  // canonicalized) subject and object. Returns the edge index.
  std::size_t add_claim_edge(const Triple& triple, const Claim& claim) {
    if (triple.subject.empty() || triple.object.empty()) {
      throw argument_error("triple endpoints must be non-empty");
    }
    if (claim.text.empty()) throw argument_error("claim text must be non-empty");
    if (claim_index_.count(claim.claim_id) != 0) {
      throw argument_error("duplicate claim_id: " + claim.claim_id);
    }
    if (triple.subject == triple.object && !allow_self_loops_) {
      throw argument_error("self-loop rejected for claim " + claim.claim_id);
    }
    add_node(triple.subject);
    add_node(triple.object);
    const std::size_t idx = edges_.size();
    edges_.push_back(Edge{triple.subject, triple.object, claim});
    claim_index_[claim.claim_id] = idx;
    incident_[triple.subject].push_back(idx);
    if (triple.object != triple.subject) incident_[triple.object].push_back(idx);
    return idx;
  }

  bool has_claim(const std::string& claim_id) const {
    return claim_index_.count(claim_id) != 0;
  }

  const Edge& edge(const std::string& claim_id) const {
    auto it = claim_index_.find(claim_id);
    if (it == claim_index_.end()) throw not_found_error("unknown claim_id: " + claim_id);
    return edges_[it->second];
  }

  const std::vector<Edge>& edges() const { return edges_; }
  const std::map<std::string, EntityNode>& nodes() const { return nodes_; }

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }

  std::size_t degree(const std::string& label) const {
    auto it = incident_.find(label);
    return it == incident_.end() ? 0 : it->second.size();
  }

  const std::vector<std::size_t>& incident_edges(const std::string& label) const {
    static const std::vector<std::size_t> none;
    auto it = incident_.find(label);
    return it == incident_.end() ? none : it->second;
  }

  // Claims whose edge shares at least one endpoint with the given claim's
  // edge, excluding the claim itself. Parallel edges count as neighbors.
  std::set<std::string> claim_neighbors_1hop(const std::string& claim_id) const {
    const Edge& e = edge(claim_id);
    std::set<std::string> out;
    for (const std::string& endpoint : {e.a, e.b}) {
      for (std::size_t idx : incident_edges(endpoint)) {
        const std::string& other = edges_[idx].claim.claim_id;
        if (other != claim_id) out.insert(other);
      }
    }
    return out;
  }

  // All claims reachable through shared-endpoint adjacency, self included.
  std::set<std::string> connected_component_claims(const std::string& claim_id) const {
    const Edge& start = edge(claim_id);
    std::set<std::string> visited_nodes;
    std::deque<std::string> frontier;
    for (const std::string& endpoint : {start.a, start.b}) {
      if (visited_nodes.insert(endpoint).second) frontier.push_back(endpoint);
    }
    std::set<std::string> claims;
    while (!frontier.empty()) {
      const std::string node = frontier.front();
      frontier.pop_front();
      for (std::size_t idx : incident_edges(node)) {
        const Edge& e = edges_[idx];
        claims.insert(e.claim.claim_id);
        for (const std::string& endpoint : {e.a, e.b}) {
          if (visited_nodes.insert(endpoint).second) frontier.push_back(endpoint);
        }
      }
    }
    claims.insert(claim_id);  // isolated edge still forms its own component
    return claims;
  }

  // Node distances (BFS) from a source set of node labels. Unreachable nodes
  // are absent from the result.
  std::map<std::string, int> node_distances(const std::set<std::string>& sources) const {
    std::map<std::string, int> dist;
    std::deque<std::string> frontier;
    for (const auto& s : sources) {
      if (nodes_.count(s) != 0 && dist.emplace(s, 0).second) frontier.push_back(s);
    }
    while (!frontier.empty()) {
      const std::string node = frontier.front();
      frontier.pop_front();
      const int d = dist[node];
      for (std::size_t idx : incident_edges(node)) {
        const Edge& e = edges_[idx];
        for (const std::string& endpoint : {e.a, e.b}) {
          if (dist.emplace(endpoint, d + 1).second) frontier.push_back(endpoint);
        }
      }
    }
    return dist;
  }

  nlohmann::json to_json() const {
    nlohmann::json nodes = nlohmann::json::array();
    for (const auto& [label, node] : nodes_) {
      nodes.push_back({{"label", label},
                       {"surface_forms", std::vector<std::string>(
                                             node.member_surface_forms.begin(),
                                             node.member_surface_forms.end())}});
    }
    nlohmann::json edges = nlohmann::json::array();
    for (const Edge& e : edges_) {
      edges.push_back({{"a", e.a},
                       {"b", e.b},
                       {"claim_id", e.claim.claim_id},
                       {"text", e.claim.text},
                       {"score", e.claim.relevance_score},
                       {"chunk_id", e.claim.source_chunk_id}});
    }
    return {{"nodes", nodes}, {"edges", edges}};
  }

  static ClaimGraph from_json(const nlohmann::json& doc) {
    ClaimGraph g;
    if (!doc.is_object() || !doc.contains("nodes") || !doc.contains("edges")) {
      throw parse_error("graph document must contain 'nodes' and 'edges' arrays");
    }
    std::size_t i = 0;
    for (const auto& n : doc.at("nodes")) {
      try {
        if (!n.is_object() || !n.contains("label")) {
          throw parse_error("missing field 'label'");
        }
        std::set<std::string> forms;
        if (n.contains("surface_forms")) {
          for (const auto& f : n.at("surface_forms")) forms.insert(f.get<std::string>());
        }
        g.add_node(n.at("label").get<std::string>(), forms);
      } catch (const nlohmann::json::exception& e) {
        throw parse_error("nodes[" + std::to_string(i) + "]: " + e.what());
      } catch (const error& e) {
        throw parse_error("nodes[" + std::to_string(i) + "]: " + e.what());
      }
      ++i;
    }
    i = 0;
    for (const auto& e : doc.at("edges")) {
      try {
        auto field = [&](const char* name) -> const nlohmann::json& {
          if (!e.is_object() || !e.contains(name)) {
            throw parse_error("missing field '" + std::string(name) + "'");
          }
          return e.at(name);
        };
        const std::string a = field("a").get<std::string>();
        const std::string b = field("b").get<std::string>();
        if (g.nodes_.count(a) == 0 || g.nodes_.count(b) == 0) {
          throw parse_error("endpoint not in nodes");
        }
        Claim claim;
        claim.claim_id = field("claim_id").get<std::string>();
        claim.text = field("text").get<std::string>();
        if (!field("score").is_number()) throw parse_error("'score' must be a number");
        claim.relevance_score = field("score").get<double>();
        claim.source_chunk_id = field("chunk_id").get<std::string>();
        if (g.claim_index_.count(claim.claim_id) != 0) {
          throw parse_error("duplicate claim_id '" + claim.claim_id + "'");
        }
        g.add_claim_edge(Triple{claim.claim_id, a, "", b}, claim);
      } catch (const nlohmann::json::exception& ex) {
        throw parse_error("edges[" + std::to_string(i) + "]: " + ex.what());
      } catch (const error& ex) {
        throw parse_error("edges[" + std::to_string(i) + "]: " + ex.what());
      }
      ++i;
    }
    return g;
  }

  void save(const std::filesystem::path& path) const {
    util::write_file(path, to_json().dump(2) + "\n");
  }

  static ClaimGraph load(const std::filesystem::path& path) {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(util::read_file(path));
    } catch (const nlohmann::json::exception& e) {
      throw parse_error("cannot parse graph file " + path.string() + ": " + e.what());
    }
    return from_json(doc);
  }

  // Equality on node set (labels + surface forms) and the edge multiset,
  // ignoring edge order and endpoint orientation.
  bool structurally_equal(const ClaimGraph& other) const {
    if (nodes_.size() != other.nodes_.size()) return false;
    for (const auto& [label, node] : nodes_) {
      auto it = other.nodes_.find(label);
      if (it == other.nodes_.end()) return false;
      if (node.member_surface_forms != it->second.member_surface_forms) return false;
    }
    auto key = [](const Edge& e) {
      auto [lo, hi] = std::minmax(e.a, e.b);
      return std::tuple(lo, hi, e.claim.claim_id, e.claim.text, e.claim.relevance_score,
                        e.claim.source_chunk_id);
    };
    std::vector<decltype(key(edges_.front()))> mine, theirs;
    for (const Edge& e : edges_) mine.push_back(key(e));
    for (const Edge& e : other.edges_) theirs.push_back(key(e));
    std::sort(mine.begin(), mine.end());
    std::sort(theirs.begin(), theirs.end());
    return mine == theirs;
  }

private:
  bool allow_self_loops_ = true;
  std::map<std::string, EntityNode> nodes_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, std::size_t> claim_index_;
  std::unordered_map<std::string, std::vector<std::size_t>> incident_;
};

}  // namespace claimgraph

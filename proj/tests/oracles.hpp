#pragma once

// Brute-force reference implementations used as test oracles. Everything in
// this file is intentionally independent of the library's algorithms: no
// shared traversal code, no shared clustering code. Keep it slow and obvious.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "claimgraph/graph.hpp"

namespace oracles {

// --- claim adjacency ------------------------------------------------------

inline bool edges_share_endpoint(const claimgraph::ClaimGraph::Edge& x,
                                 const claimgraph::ClaimGraph::Edge& y) {
  return x.a == y.a || x.a == y.b || x.b == y.a || x.b == y.b;
}

// Neighbors by scanning every edge pair.
inline std::set<std::string> brute_neighbors(const claimgraph::ClaimGraph& g,
                                             const std::string& claim_id) {
  const auto& focus = g.edge(claim_id);
  std::set<std::string> out;
  for (const auto& e : g.edges()) {
    if (e.claim.claim_id == claim_id) continue;
    if (edges_share_endpoint(focus, e)) out.insert(e.claim.claim_id);
  }
  return out;
}

// --- connected components via union-find ----------------------------------

class UnionFind {
public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

private:
  std::vector<std::size_t> parent_;
};

// Component of a claim, via union-find over node labels.
inline std::set<std::string> union_find_component(const claimgraph::ClaimGraph& g,
                                                  const std::string& claim_id) {
  std::map<std::string, std::size_t> labels;
  for (const auto& [label, node] : g.nodes()) {
    labels.emplace(label, labels.size());
  }
  UnionFind uf(labels.size());
  for (const auto& e : g.edges()) uf.unite(labels.at(e.a), labels.at(e.b));
  const auto& focus = g.edge(claim_id);
  const std::size_t root = uf.find(labels.at(focus.a));
  std::set<std::string> out;
  for (const auto& e : g.edges()) {
    if (uf.find(labels.at(e.a)) == root) out.insert(e.claim.claim_id);
  }
  return out;
}

// --- layer assignment oracles ----------------------------------------------

// Node distances from the focus edge's endpoints, via Floyd-Warshall style
// all-pairs relaxation (deliberately not BFS). Edge layer = the BFS wave at
// which the edge is fully covered, i.e. the max of its endpoint distances.
inline std::map<std::string, int> allpairs_max_cover_layers(
    const claimgraph::ClaimGraph& g, const std::string& focus_claim_id) {
  std::vector<std::string> labels;
  for (const auto& [label, node] : g.nodes()) labels.push_back(label);
  const std::size_t n = labels.size();
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[labels[i]] = i;

  const int inf = 1 << 28;
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, inf));
  for (std::size_t i = 0; i < n; ++i) dist[i][i] = 0;
  for (const auto& e : g.edges()) {
    const std::size_t u = index.at(e.a);
    const std::size_t v = index.at(e.b);
    dist[u][v] = std::min(dist[u][v], 1);
    dist[v][u] = std::min(dist[v][u], 1);
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        dist[i][j] = std::min(dist[i][j], dist[i][k] + dist[k][j]);

  const auto& focus = g.edge(focus_claim_id);
  const std::size_t fa = index.at(focus.a);
  const std::size_t fb = index.at(focus.b);
  auto node_dist = [&](std::size_t i) { return std::min(dist[i][fa], dist[i][fb]); };

  std::map<std::string, int> layers;
  for (const auto& e : g.edges()) {
    const int da = node_dist(index.at(e.a));
    const int db = node_dist(index.at(e.b));
    if (da >= inf || db >= inf) continue;  // other component
    layers[e.claim.claim_id] = std::max(da, db);
  }
  return layers;
}

// Classic line-graph BFS: claims are vertices, adjacency = shared endpoint,
// distance counted in claim-to-claim hops from the focus claim.
inline std::map<std::string, int> line_graph_bfs(const claimgraph::ClaimGraph& g,
                                                 const std::string& focus_claim_id) {
  const auto& edges = g.edges();
  const std::size_t n = edges.size();
  std::size_t focus = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (edges[i].claim.claim_id == focus_claim_id) focus = i;
  }
  std::map<std::string, int> dist;
  std::vector<int> d(n, -1);
  std::vector<std::size_t> queue;
  d[focus] = 0;
  queue.push_back(focus);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t cur = queue[head];
    for (std::size_t j = 0; j < n; ++j) {
      if (d[j] < 0 && edges_share_endpoint(edges[cur], edges[j])) {
        d[j] = d[cur] + 1;
        queue.push_back(j);
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (d[i] >= 0) dist[edges[i].claim.claim_id] = d[i];
  }
  return dist;
}

// --- UPGMA reference --------------------------------------------------------

// Exhaustive average-linkage simulation. Every step recomputes every
// cross-cluster mean from the base similarity matrix. Ties broken by the
// lexicographically smallest (smallest member of A, smallest member of B)
// pair with A's smallest member < B's. Returns the final clusters as sets of
// item indices.
inline std::vector<std::set<std::size_t>> upgma_reference(
    const std::vector<std::string>& names,
    const std::vector<std::vector<double>>& sim, double threshold) {
  std::vector<std::set<std::size_t>> clusters;
  for (std::size_t i = 0; i < names.size(); ++i) clusters.push_back({i});

  auto smallest_name = [&](const std::set<std::size_t>& c) {
    std::string best;
    for (std::size_t i : c) {
      if (best.empty() || names[i] < best) best = names[i];
    }
    return best;
  };

  while (clusters.size() > 1) {
    double best_sim = -2.0;
    std::size_t best_a = 0, best_b = 0;
    std::string best_key_a, best_key_b;
    for (std::size_t a = 0; a < clusters.size(); ++a) {
      for (std::size_t b = a + 1; b < clusters.size(); ++b) {
        double sum = 0.0;
        for (std::size_t i : clusters[a])
          for (std::size_t j : clusters[b]) sum += sim[i][j];
        const double mean =
            sum / (static_cast<double>(clusters[a].size()) *
                   static_cast<double>(clusters[b].size()));
        std::string key_a = smallest_name(clusters[a]);
        std::string key_b = smallest_name(clusters[b]);
        if (key_b < key_a) std::swap(key_a, key_b);
        const bool better =
            mean > best_sim ||
            (mean == best_sim &&
             (key_a < best_key_a || (key_a == best_key_a && key_b < best_key_b)));
        if (better) {
          best_sim = mean;
          best_a = a;
          best_b = b;
          best_key_a = key_a;
          best_key_b = key_b;
        }
      }
    }
    if (best_sim < threshold) break;
    clusters[best_a].insert(clusters[best_b].begin(), clusters[best_b].end());
    clusters.erase(clusters.begin() + static_cast<std::ptrdiff_t>(best_b));
  }
  return clusters;
}

// --- retrieval --------------------------------------------------------------

// Full cosine ranking, ties by id ascending.
inline std::vector<std::string> brute_force_cosine_ranking(
    const std::vector<double>& query,
    const std::vector<std::pair<std::string, std::vector<double>>>& items) {
  std::vector<std::pair<double, std::string>> scored;
  for (const auto& [id, vec] : items) {
    scored.emplace_back(claimgraph::util::cosine(query, vec), id);
  }
  std::stable_sort(scored.begin(), scored.end(), [](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first > y.first;
    return x.second < y.second;
  });
  std::vector<std::string> out;
  for (const auto& [s, id] : scored) out.push_back(id);
  return out;
}

// --- deterministic PRNG for fixtures ----------------------------------------

// splitmix64: stable across platforms, unlike std distributions.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // uniform in [0, n)
  std::uint64_t below(std::uint64_t n) { return next() % n; }
  // uniform double in [-1, 1)
  double signed_unit() {
    return static_cast<double>(next() >> 11) / 4503599627370496.0 * 2.0 - 1.0;
  }

private:
  std::uint64_t state_;
};

}  // namespace oracles

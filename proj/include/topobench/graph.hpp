#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace topobench {

// Node identifiers are opaque non-negative integers. Street-network ids can
// be large and non-contiguous, so nothing may assume ids are dense; all
// variable indexing goes through a NodeOrder.
using NodeId = std::int64_t;

// Canonical undirected edge, stored with first < second.
using Edge = std::pair<NodeId, NodeId>;

// Sequence of node ids establishing the qubit-index mapping: position i in
// the order corresponds to binary variable / qubit i.
using NodeOrder = std::vector<NodeId>;

// Simple undirected graph: no self-loops, no duplicate edges, every edge
// endpoint present in the node list. Immutable after construction, so
// values are safe to share across workers.
class Graph {
  public:
    Graph() = default;

    // Throws std::invalid_argument on duplicate node ids, negative ids,
    // self-loops or edge endpoints missing from `nodes`. Duplicate edges
    // (in either orientation) are collapsed.
    Graph(std::vector<NodeId> nodes, const std::vector<Edge>& edges);

    int node_count() const { return static_cast<int>(nodes_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<NodeId>& nodes() const { return nodes_; }
    // Canonical (u < v), sorted ascending.
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_node(NodeId id) const { return index_.count(id) != 0; }
    bool has_edge(NodeId u, NodeId v) const;

    // Position of `id` in nodes(); throws if absent.
    int index_of(NodeId id) const;

    // Neighbor ids in ascending order.
    const std::vector<NodeId>& neighbors(NodeId id) const;

    int degree(NodeId id) const {
        return static_cast<int>(neighbors(id).size());
    }

    // Induced subgraph on `keep`; the result's node list preserves the
    // order given in `keep`.
    Graph induced(const std::vector<NodeId>& keep) const;

    bool operator==(const Graph& other) const {
        return nodes_ == other.nodes_ && edges_ == other.edges_;
    }

  private:
    std::vector<NodeId> nodes_;
    std::vector<Edge> edges_;
    std::unordered_map<NodeId, int> index_;
    std::vector<std::vector<NodeId>> adjacency_;  // by node index, ascending
};

// Parses "u v" integer pairs, one per line. Blank lines and lines starting
// with '#' are ignored. The node list is the sorted union of mentioned
// endpoints. Throws std::runtime_error with the offending line number on
// malformed input, and on self-loops.
Graph parse_edge_list(const std::string& text);

// Parses the JSON graph format {"nodes": [int...], "edges": [[int,int]...],
// "name": optional string}; declared node order is preserved. Throws
// std::runtime_error naming the offending field on schema violations.
Graph parse_graph_json(const std::string& text);

// Serializes a graph back to the JSON format (used by fixture files).
std::string graph_to_json(const Graph& g, const std::string& name);

// True iff one BFS from any node reaches all nodes. Throws on an empty graph.
bool is_connected(const Graph& g);

struct SubgraphSample {
    Graph graph;      // node list in BFS order
    NodeOrder order;  // same sequence; the qubit-index binding
};

// Induced subgraph on the first n_target nodes in BFS order from `start`,
// exploring neighbors in ascending id order. Returns std::nullopt when
// fewer than n_target nodes are reachable (the caller skips the sample).
// rng_seed is accepted for signature stability; BFS itself is deterministic
// and does not consume it (start-node sampling happens at the harness).
std::optional<SubgraphSample> bfs_subgraph(const Graph& g, NodeId start,
                                           int n_target,
                                           std::uint64_t rng_seed);

}  // namespace topobench

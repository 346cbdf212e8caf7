#include "topobench/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include <nlohmann/json.hpp>

namespace topobench {

Graph::Graph(std::vector<NodeId> nodes, const std::vector<Edge>& edges)
    : nodes_(std::move(nodes)) {
    index_.reserve(nodes_.size());
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        NodeId id = nodes_[i];
        if (id < 0)
            throw std::invalid_argument("negative node id " +
                                        std::to_string(id));
        if (!index_.emplace(id, static_cast<int>(i)).second)
            throw std::invalid_argument("duplicate node id " +
                                        std::to_string(id));
    }

    std::set<Edge> canonical;
    for (const auto& [u, v] : edges) {
        if (u == v)
            throw std::invalid_argument("self-loop on node " +
                                        std::to_string(u));
        if (index_.count(u) == 0)
            throw std::invalid_argument("edge endpoint " + std::to_string(u) +
                                        " not in node list");
        if (index_.count(v) == 0)
            throw std::invalid_argument("edge endpoint " + std::to_string(v) +
                                        " not in node list");
        canonical.emplace(std::min(u, v), std::max(u, v));
    }
    edges_.assign(canonical.begin(), canonical.end());

    adjacency_.assign(nodes_.size(), {});
    for (const auto& [u, v] : edges_) {
        adjacency_[static_cast<std::size_t>(index_.at(u))].push_back(v);
        adjacency_[static_cast<std::size_t>(index_.at(v))].push_back(u);
    }
    for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

bool Graph::has_edge(NodeId u, NodeId v) const {
    Edge e{std::min(u, v), std::max(u, v)};
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

int Graph::index_of(NodeId id) const {
    auto it = index_.find(id);
    if (it == index_.end())
        throw std::invalid_argument("node " + std::to_string(id) +
                                    " not in graph");
    return it->second;
}

const std::vector<NodeId>& Graph::neighbors(NodeId id) const {
    return adjacency_[static_cast<std::size_t>(index_of(id))];
}

Graph Graph::induced(const std::vector<NodeId>& keep) const {
    std::unordered_set<NodeId> kept(keep.begin(), keep.end());
    std::vector<Edge> sub_edges;
    for (const auto& [u, v] : edges_)
        if (kept.count(u) != 0 && kept.count(v) != 0)
            sub_edges.emplace_back(u, v);
    return Graph(keep, sub_edges);
}

Graph parse_edge_list(const std::string& text) {
    std::set<NodeId> ids;
    std::vector<Edge> edges;
    std::istringstream stream(text);
    std::string line;
    int line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::string first;
        if (!(fields >> first) || first[0] == '#') continue;

        long long u = 0, v = 0;
        std::string extra;
        std::istringstream uparse(first);
        if (!(uparse >> u) || !uparse.eof() || !(fields >> v) ||
            (fields >> extra) || u < 0 || v < 0)
            throw std::runtime_error("edge list line " +
                                     std::to_string(line_no) +
                                     ": expected two non-negative integers");
        if (u == v)
            throw std::runtime_error("edge list line " +
                                     std::to_string(line_no) + ": self-loop " +
                                     std::to_string(u));
        ids.insert(u);
        ids.insert(v);
        edges.emplace_back(u, v);
    }
    return Graph(std::vector<NodeId>(ids.begin(), ids.end()), edges);
}

Graph parse_graph_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error(std::string("graph JSON: ") + e.what());
    }
    if (!doc.is_object()) throw std::runtime_error("graph JSON: not an object");
    if (!doc.contains("nodes") || !doc["nodes"].is_array())
        throw std::runtime_error("graph JSON: \"nodes\" must be an array");
    if (!doc.contains("edges") || !doc["edges"].is_array())
        throw std::runtime_error("graph JSON: \"edges\" must be an array");
    if (doc.contains("name") && !doc["name"].is_string())
        throw std::runtime_error("graph JSON: \"name\" must be a string");

    std::vector<NodeId> nodes;
    for (std::size_t i = 0; i < doc["nodes"].size(); ++i) {
        const auto& entry = doc["nodes"][i];
        if (!entry.is_number_integer() || entry.get<long long>() < 0)
            throw std::runtime_error("graph JSON: nodes[" + std::to_string(i) +
                                     "] must be a non-negative integer");
        nodes.push_back(entry.get<NodeId>());
    }

    std::vector<Edge> edges;
    for (std::size_t i = 0; i < doc["edges"].size(); ++i) {
        const auto& entry = doc["edges"][i];
        if (!entry.is_array() || entry.size() != 2 ||
            !entry[0].is_number_integer() || !entry[1].is_number_integer())
            throw std::runtime_error("graph JSON: edges[" + std::to_string(i) +
                                     "] must be a pair of integers");
        edges.emplace_back(entry[0].get<NodeId>(), entry[1].get<NodeId>());
    }

    try {
        return Graph(std::move(nodes), edges);
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("graph JSON: ") + e.what());
    }
}

std::string graph_to_json(const Graph& g, const std::string& name) {
    nlohmann::ordered_json doc;
    if (!name.empty()) doc["name"] = name;
    doc["nodes"] = g.nodes();
    auto& edges = doc["edges"] = nlohmann::ordered_json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
    return doc.dump(2) + "\n";
}

namespace {

// BFS visit order from `start`, neighbors in ascending id order, stopping
// once `limit` nodes have been visited.
std::vector<NodeId> bfs_order(const Graph& g, NodeId start, std::size_t limit) {
    std::vector<NodeId> visited;
    std::unordered_set<NodeId> seen{start};
    std::deque<NodeId> queue{start};
    while (!queue.empty() && visited.size() < limit) {
        NodeId u = queue.front();
        queue.pop_front();
        visited.push_back(u);
        for (NodeId v : g.neighbors(u)) {
            if (seen.insert(v).second) queue.push_back(v);
        }
    }
    return visited;
}

}  // namespace

bool is_connected(const Graph& g) {
    if (g.node_count() == 0)
        throw std::invalid_argument("is_connected: empty graph");
    return bfs_order(g, g.nodes().front(), g.nodes().size()).size() ==
           g.nodes().size();
}

std::optional<SubgraphSample> bfs_subgraph(const Graph& g, NodeId start,
                                           int n_target,
                                           std::uint64_t /*rng_seed*/) {
    if (!g.has_node(start))
        throw std::invalid_argument("bfs_subgraph: start node " +
                                    std::to_string(start) + " not in graph");
    if (n_target < 1)
        throw std::invalid_argument("bfs_subgraph: n_target must be >= 1");

    std::vector<NodeId> order =
        bfs_order(g, start, static_cast<std::size_t>(n_target));
    if (order.size() < static_cast<std::size_t>(n_target)) return std::nullopt;
    return SubgraphSample{g.induced(order), std::move(order)};
}

}  // namespace topobench

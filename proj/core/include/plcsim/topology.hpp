#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace plcsim {

/// One cable segment between two couplers. Switch edges can be opened;
/// an open switch carries no signal and drops out of every connectivity
/// and distance computation.
struct PowerlineEdge {
    std::string id;
    std::string node_a;
    std::string node_b;
    double length_m = 0.0;
    bool is_switch = false;
    bool open = false;

    bool operator==(const PowerlineEdge&) const = default;
};

/// Weighted undirected coupler graph. Parallel edges and isolated nodes are
/// allowed; self-loops are not. Node and edge iteration order is sorted, so
/// everything derived from the graph is byte-stable across runs.
class PowerlineGraph {
  public:
    PowerlineGraph() = default;
    PowerlineGraph(std::string id, std::vector<std::string> nodes,
                   std::vector<PowerlineEdge> edges);

    const std::string& id() const { return id_; }
    const std::vector<std::string>& nodes() const { return nodes_; }
    const std::vector<PowerlineEdge>& edges() const { return edges_; }

    bool has_node(const std::string& node) const { return node_index_.count(node) > 0; }
    const PowerlineEdge* find_edge(const std::string& edge_id) const;

    /// Marks a switch edge open. Idempotent. Throws std::invalid_argument
    /// for unknown edges or edges that are not switches. Single-writer:
    /// callers mutate only from the event loop.
    void open_switch(const std::string& edge_id);

    /// Value-style variant of open_switch.
    PowerlineGraph with_switch_open(const std::string& edge_id) const;

  private:
    friend struct GraphAlgos;
    void rebuild_adjacency();

    std::string id_;
    std::vector<std::string> nodes_;  // sorted, unique
    std::vector<PowerlineEdge> edges_;
    std::map<std::string, std::size_t> node_index_;
    // adjacency over non-open edges: node index -> (neighbor index, length)
    std::vector<std::vector<std::pair<std::size_t, double>>> adjacency_;
};

/// Disjoint node sets covering the whole graph. Components are ordered by
/// their smallest member; members are sorted.
struct ComponentPartition {
    std::vector<std::vector<std::string>> components;
    std::map<std::string, int> component_of;
};

ComponentPartition connected_components(const PowerlineGraph& graph);

/// Dijkstra over non-open edges. std::nullopt when the endpoints lie in
/// different components; 0 for a == b. Unknown nodes throw.
std::optional<double> shortest_path_distance(const PowerlineGraph& graph,
                                             const std::string& a, const std::string& b);

/// Full single-source distance map (reachable nodes only, including the
/// source at distance 0).
std::map<std::string, double> shortest_path_distances_from(const PowerlineGraph& graph,
                                                           const std::string& source);

}  // namespace plcsim

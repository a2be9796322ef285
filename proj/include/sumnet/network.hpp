#ifndef SUMNET_NETWORK_HPP
#define SUMNET_NETWORK_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sumnet/errors.hpp"

namespace sumnet {

/// Directed acyclic sum-network: named vertices, indexed unit-capacity edges
/// (parallel edges allowed), ordered source and terminal lists. Immutable
/// after construction; construction validates all invariants.
class SumNetwork {
public:
    struct Edge {
        int tail = -1;
        int head = -1;
        bool operator==(const Edge&) const = default;
    };

    /// Validates: unique vertex names, known endpoints, acyclicity, disjoint
    /// non-empty source/terminal lists, every source with an out-edge and
    /// every terminal with an in-edge. Throws ValidationError / CycleDetected.
    static SumNetwork create(std::vector<std::string> vertices,
                             std::vector<std::pair<std::string, std::string>> edges,
                             std::vector<std::string> sources,
                             std::vector<std::string> terminals);

    std::size_t vertex_count() const { return names_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    std::size_t source_count() const { return sources_.size(); }
    std::size_t terminal_count() const { return terminals_.size(); }

    const std::vector<std::string>& vertex_names() const { return names_; }
    const std::string& name(int v) const { return names_[static_cast<std::size_t>(v)]; }
    int vertex_index(const std::string& name) const;  // -1 when absent

    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int e) const { return edges_[static_cast<std::size_t>(e)]; }

    const std::vector<int>& sources() const { return sources_; }      // vertex indices
    const std::vector<int>& terminals() const { return terminals_; }  // vertex indices

    const std::vector<int>& in_edges(int v) const { return in_edges_[static_cast<std::size_t>(v)]; }
    const std::vector<int>& out_edges(int v) const { return out_edges_[static_cast<std::size_t>(v)]; }

    bool is_source(int v) const { return source_pos_[static_cast<std::size_t>(v)] >= 0; }
    bool is_terminal(int v) const { return terminal_pos_[static_cast<std::size_t>(v)] >= 0; }
    int source_pos(int v) const { return source_pos_[static_cast<std::size_t>(v)]; }      // -1 if none
    int terminal_pos(int v) const { return terminal_pos_[static_cast<std::size_t>(v)]; }  // -1 if none

    bool operator==(const SumNetwork& other) const;

private:
    SumNetwork() = default;

    std::vector<std::string> names_;
    std::vector<Edge> edges_;
    std::vector<int> sources_, terminals_;
    std::vector<std::vector<int>> in_edges_, out_edges_;
    std::vector<int> source_pos_, terminal_pos_;
};

/// Simple directed path: consecutive vertices joined by the resolved edges
/// (edges.size() == vertices.size() - 1).
struct NetPath {
    std::vector<int> vertices;
    std::vector<int> edges;
    bool operator==(const NetPath&) const = default;
};

/// Vertices ordered so every edge goes earlier -> later. Deterministic:
/// sorted by longest-distance-from-the-source-layer, ties by vertex name.
std::vector<int> topological_order(const SumNetwork& net);

struct ConnectivityResult {
    bool connected = false;
    std::optional<std::pair<int, int>> witness;  // disconnected (source, terminal) vertex pair
};

/// True iff a directed path exists from every source to every terminal.
ConnectivityResult all_pairs_connected(const SumNetwork& net);

inline constexpr std::size_t kDefaultPathLimit = 1000000;

/// All simple directed paths from one vertex to another, lexicographic by
/// vertex-name sequence (parallel edges tie-broken by edge index). Throws
/// PathLimitExceeded past the cap.
std::vector<NetPath> enumerate_paths(const SumNetwork& net, int from, int to,
                                     std::size_t limit = kDefaultPathLimit);

/// Same vertices, every edge flipped in place (edge indices preserved),
/// sources and terminals exchanged.
SumNetwork reverse_network(const SumNetwork& net);

/// Canonical JSON form: {"vertices": [...], "edges": [{"tail":..,"head":..}],
/// "sources": [...], "terminals": [...]}, two-space indent, sorted keys,
/// trailing newline. Edge index == position in the "edges" array.
std::string network_to_json(const SumNetwork& net);
SumNetwork network_from_json(const std::string& text);

/// DOT digraph with sources drawn as boxes and terminals as double circles.
std::string network_to_dot(const SumNetwork& net, const std::string& graph_name = "sumnetwork");

}  // namespace sumnet

#endif

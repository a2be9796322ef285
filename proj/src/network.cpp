#include "sumnet/network.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "json.hpp"

namespace sumnet {

int SumNetwork::vertex_index(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<int>(i);
    return -1;
}

SumNetwork SumNetwork::create(std::vector<std::string> vertices,
                              std::vector<std::pair<std::string, std::string>> edges,
                              std::vector<std::string> sources,
                              std::vector<std::string> terminals) {
    SumNetwork net;
    std::map<std::string, int> index;
    for (const auto& v : vertices) {
        if (v.empty()) throw ValidationError("empty vertex name");
        if (!index.emplace(v, static_cast<int>(net.names_.size())).second)
            throw ValidationError("duplicate vertex '" + v + "'");
        net.names_.push_back(v);
    }
    const auto lookup = [&](const std::string& v, const std::string& where) {
        const auto it = index.find(v);
        if (it == index.end()) throw ValidationError(where + " references unknown vertex '" + v + "'");
        return it->second;
    };
    const std::size_t n = net.names_.size();
    net.in_edges_.resize(n);
    net.out_edges_.resize(n);
    net.source_pos_.assign(n, -1);
    net.terminal_pos_.assign(n, -1);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const int tail = lookup(edges[i].first, "edge " + std::to_string(i));
        const int head = lookup(edges[i].second, "edge " + std::to_string(i));
        net.edges_.push_back(Edge{tail, head});
        net.out_edges_[static_cast<std::size_t>(tail)].push_back(static_cast<int>(i));
        net.in_edges_[static_cast<std::size_t>(head)].push_back(static_cast<int>(i));
    }
    if (sources.empty()) throw ValidationError("empty source list");
    if (terminals.empty()) throw ValidationError("empty terminal list");
    for (std::size_t i = 0; i < sources.size(); ++i) {
        const int v = lookup(sources[i], "source " + std::to_string(i));
        if (net.source_pos_[static_cast<std::size_t>(v)] >= 0)
            throw ValidationError("duplicate source '" + sources[i] + "'");
        net.source_pos_[static_cast<std::size_t>(v)] = static_cast<int>(i);
        net.sources_.push_back(v);
    }
    for (std::size_t i = 0; i < terminals.size(); ++i) {
        const int v = lookup(terminals[i], "terminal " + std::to_string(i));
        if (net.source_pos_[static_cast<std::size_t>(v)] >= 0)
            throw ValidationError("vertex '" + terminals[i] + "' is both source and terminal");
        if (net.terminal_pos_[static_cast<std::size_t>(v)] >= 0)
            throw ValidationError("duplicate terminal '" + terminals[i] + "'");
        net.terminal_pos_[static_cast<std::size_t>(v)] = static_cast<int>(i);
        net.terminals_.push_back(v);
    }
    for (int s : net.sources_)
        if (net.out_edges_[static_cast<std::size_t>(s)].empty())
            throw ValidationError("source '" + net.names_[static_cast<std::size_t>(s)] + "' has no outgoing edge");
    for (int t : net.terminals_)
        if (net.in_edges_[static_cast<std::size_t>(t)].empty())
            throw ValidationError("terminal '" + net.names_[static_cast<std::size_t>(t)] + "' has no incoming edge");
    topological_order(net);  // throws CycleDetected on a cycle
    return net;
}

bool SumNetwork::operator==(const SumNetwork& other) const {
    return names_ == other.names_ && edges_ == other.edges_ && sources_ == other.sources_ &&
           terminals_ == other.terminals_;
}

std::vector<int> topological_order(const SumNetwork& net) {
    const std::size_t n = net.vertex_count();
    std::vector<int> indeg(n, 0), layer(n, 0);
    for (const auto& e : net.edges()) ++indeg[static_cast<std::size_t>(e.head)];
    std::vector<int> frontier;
    for (std::size_t v = 0; v < n; ++v)
        if (indeg[v] == 0) frontier.push_back(static_cast<int>(v));
    std::size_t seen = 0;
    std::vector<int> next;
    while (!frontier.empty()) {
        next.clear();
        for (int v : frontier) {
            ++seen;
            for (int e : net.out_edges(v)) {
                const int h = net.edge(e).head;
                layer[static_cast<std::size_t>(h)] =
                    std::max(layer[static_cast<std::size_t>(h)], layer[static_cast<std::size_t>(v)] + 1);
                if (--indeg[static_cast<std::size_t>(h)] == 0) next.push_back(h);
            }
        }
        frontier.swap(next);
    }
    if (seen != n) throw CycleDetected("network contains a directed cycle");
    std::vector<int> order(n);
    for (std::size_t v = 0; v < n; ++v) order[v] = static_cast<int>(v);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (layer[static_cast<std::size_t>(a)] != layer[static_cast<std::size_t>(b)])
            return layer[static_cast<std::size_t>(a)] < layer[static_cast<std::size_t>(b)];
        return net.name(a) < net.name(b);
    });
    return order;
}

ConnectivityResult all_pairs_connected(const SumNetwork& net) {
    for (int s : net.sources()) {
        std::vector<char> reach(net.vertex_count(), 0);
        std::vector<int> stack{s};
        reach[static_cast<std::size_t>(s)] = 1;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int e : net.out_edges(v)) {
                const int h = net.edge(e).head;
                if (!reach[static_cast<std::size_t>(h)]) {
                    reach[static_cast<std::size_t>(h)] = 1;
                    stack.push_back(h);
                }
            }
        }
        for (int t : net.terminals())
            if (!reach[static_cast<std::size_t>(t)]) return {false, std::make_pair(s, t)};
    }
    return {true, std::nullopt};
}

namespace {

void extend_paths(const SumNetwork& net, int at, int to, std::size_t limit, NetPath& partial,
                  std::vector<char>& visited, std::vector<NetPath>& out) {
    if (at == to) {
        if (out.size() >= limit)
            throw PathLimitExceeded("more than " + std::to_string(limit) + " paths");
        out.push_back(partial);
        return;
    }
    // lexicographic by vertex-name sequence, parallel edges by index
    std::vector<int> succ = net.out_edges(at);
    std::sort(succ.begin(), succ.end(), [&](int a, int b) {
        const std::string& na = net.name(net.edge(a).head);
        const std::string& nb = net.name(net.edge(b).head);
        if (na != nb) return na < nb;
        return a < b;
    });
    for (int e : succ) {
        const int h = net.edge(e).head;
        if (visited[static_cast<std::size_t>(h)]) continue;
        visited[static_cast<std::size_t>(h)] = 1;
        partial.vertices.push_back(h);
        partial.edges.push_back(e);
        extend_paths(net, h, to, limit, partial, visited, out);
        partial.vertices.pop_back();
        partial.edges.pop_back();
        visited[static_cast<std::size_t>(h)] = 0;
    }
}

}  // namespace

std::vector<NetPath> enumerate_paths(const SumNetwork& net, int from, int to, std::size_t limit) {
    if (from < 0 || to < 0 || static_cast<std::size_t>(from) >= net.vertex_count() ||
        static_cast<std::size_t>(to) >= net.vertex_count())
        throw InvalidParameter("path endpoints out of range");
    std::vector<NetPath> out;
    NetPath partial;
    partial.vertices.push_back(from);
    std::vector<char> visited(net.vertex_count(), 0);
    visited[static_cast<std::size_t>(from)] = 1;
    extend_paths(net, from, to, limit, partial, visited, out);
    return out;
}

SumNetwork reverse_network(const SumNetwork& net) {
    std::vector<std::pair<std::string, std::string>> redges;
    redges.reserve(net.edge_count());
    for (const auto& e : net.edges()) redges.emplace_back(net.name(e.head), net.name(e.tail));
    std::vector<std::string> srcs, tmns;
    for (int t : net.terminals()) srcs.push_back(net.name(t));
    for (int s : net.sources()) tmns.push_back(net.name(s));
    return SumNetwork::create(net.vertex_names(), std::move(redges), std::move(srcs), std::move(tmns));
}

std::string network_to_json(const SumNetwork& net) {
    nlohmann::json j;
    j["vertices"] = net.vertex_names();
    j["edges"] = nlohmann::json::array();
    for (const auto& e : net.edges())
        j["edges"].push_back({{"tail", net.name(e.tail)}, {"head", net.name(e.head)}});
    j["sources"] = nlohmann::json::array();
    for (int s : net.sources()) j["sources"].push_back(net.name(s));
    j["terminals"] = nlohmann::json::array();
    for (int t : net.terminals()) j["terminals"].push_back(net.name(t));
    return j.dump(2) + "\n";
}

SumNetwork network_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("network JSON: ") + e.what());
    }
    try {
        std::vector<std::string> vertices = j.at("vertices").get<std::vector<std::string>>();
        std::vector<std::pair<std::string, std::string>> edges;
        for (const auto& je : j.at("edges"))
            edges.emplace_back(je.at("tail").get<std::string>(), je.at("head").get<std::string>());
        std::vector<std::string> sources = j.at("sources").get<std::vector<std::string>>();
        std::vector<std::string> terminals = j.at("terminals").get<std::vector<std::string>>();
        return SumNetwork::create(std::move(vertices), std::move(edges), std::move(sources),
                                  std::move(terminals));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("network JSON: ") + e.what());
    }
}

std::string network_to_dot(const SumNetwork& net, const std::string& graph_name) {
    std::ostringstream os;
    os << "digraph " << graph_name << " {\n";
    os << "  rankdir=LR;\n";
    for (std::size_t v = 0; v < net.vertex_count(); ++v) {
        os << "  \"" << net.name(static_cast<int>(v)) << "\"";
        if (net.is_source(static_cast<int>(v)))
            os << " [shape=box]";
        else if (net.is_terminal(static_cast<int>(v)))
            os << " [shape=doublecircle]";
        else
            os << " [shape=circle]";
        os << ";\n";
    }
    for (const auto& e : net.edges())
        os << "  \"" << net.name(e.tail) << "\" -> \"" << net.name(e.head) << "\";\n";
    os << "}\n";
    return os.str();
}

}  // namespace sumnet

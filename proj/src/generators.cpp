#include "sumnet/generators.hpp"

#include <fstream>
#include <sstream>

namespace sumnet {

namespace {

std::string nm(const char* prefix, int i) { return prefix + std::to_string(i); }

}  // namespace

SumNetwork gen_smstar(int m) {
    if (m < 3) throw InvalidParameter("smstar requires m >= 3, got " + std::to_string(m));
    std::vector<std::string> vertices;
    for (int i = 1; i < m; ++i) vertices.push_back(nm("s", i));
    for (int i = 1; i < m; ++i) vertices.push_back(nm("u", i));
    for (int i = 1; i < m; ++i) vertices.push_back(nm("v", i));
    for (int i = 1; i <= m; ++i) vertices.push_back(nm("t", i));
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 1; i < m; ++i) {
        edges.emplace_back(nm("s", i), nm("t", i));
        edges.emplace_back(nm("u", i), nm("v", i));
        edges.emplace_back(nm("v", i), nm("t", i));
        edges.emplace_back(nm("v", i), nm("t", m));
    }
    for (int i = 1; i < m; ++i)
        for (int j = 1; j < m; ++j)
            if (i != j) edges.emplace_back(nm("s", i), nm("u", j));
    std::vector<std::string> sources, terminals;
    for (int i = 1; i < m; ++i) sources.push_back(nm("s", i));
    for (int i = 1; i <= m; ++i) terminals.push_back(nm("t", i));
    return SumNetwork::create(std::move(vertices), std::move(edges), std::move(sources),
                              std::move(terminals));
}

SumNetwork gen_g1() {
    std::vector<std::string> vertices;
    for (const char* p : {"s", "u", "v", "t"})
        for (int i = 1; i <= 3; ++i) vertices.push_back(nm(p, i));
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 1; i <= 3; ++i) edges.emplace_back(nm("u", i), nm("v", i));
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            if (i != j) edges.emplace_back(nm("s", i), nm("u", j));
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            if (i != j) edges.emplace_back(nm("v", i), nm("t", j));
    return SumNetwork::create(std::move(vertices), std::move(edges), {"s1", "s2", "s3"},
                              {"t1", "t2", "t3"});
}

SumNetwork load_network(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return network_from_json(buf.str());
}

SumNetwork load_network_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return load_network(in);
}

std::optional<int> recognize_smstar(const SumNetwork& net) {
    // |V| = 4m - 3
    const std::size_t v = net.vertex_count();
    if (v < 9 || (v + 3) % 4 != 0) return std::nullopt;
    const int m = static_cast<int>((v + 3) / 4);
    if (m < 3) return std::nullopt;
    if (net == gen_smstar(m)) return m;
    return std::nullopt;
}

bool recognize_g1(const SumNetwork& net) { return net == gen_g1(); }

std::string network_id(const SumNetwork& net) {
    if (recognize_g1(net)) return "g1";
    if (const auto m = recognize_smstar(net)) return "smstar-" + std::to_string(*m);
    return "network(|V|=" + std::to_string(net.vertex_count()) +
           ",|E|=" + std::to_string(net.edge_count()) + ")";
}

}  // namespace sumnet

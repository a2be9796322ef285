#include "sumnet/generators.hpp"

#include <sstream>

#include "doctest.h"

using namespace sumnet;

TEST_CASE("four-layer family counts match the closed forms") {
    const auto s3 = gen_smstar(3);
    CHECK(s3.vertex_count() == 9);
    CHECK(s3.edge_count() == 10);
    const auto s4 = gen_smstar(4);
    CHECK(s4.vertex_count() == 13);
    CHECK(s4.edge_count() == 18);
    for (int m = 3; m <= 12; ++m) {
        const auto net = gen_smstar(m);
        CHECK(net.vertex_count() == static_cast<std::size_t>(3 * (m - 1) + m));
        CHECK(net.edge_count() == static_cast<std::size_t>(4 * (m - 1) + (m - 1) * (m - 2)));
        CHECK(net.source_count() == static_cast<std::size_t>(m - 1));
        CHECK(net.terminal_count() == static_cast<std::size_t>(m));
        CHECK(all_pairs_connected(net).connected);
        // no s_i -> u_i edge, ever
        for (int i = 1; i < m; ++i) {
            const int si = net.vertex_index("s" + std::to_string(i));
            const int ui = net.vertex_index("u" + std::to_string(i));
            for (int e : net.out_edges(si)) CHECK(net.edge(e).head != ui);
        }
    }
    CHECK_THROWS_AS(gen_smstar(2), InvalidParameter);
}

TEST_CASE("four-layer family edge order is stable") {
    using NamePair = std::pair<std::string, std::string>;
    const auto s3 = gen_smstar(3);
    const auto edge_names = [&](int e) {
        return NamePair{s3.name(s3.edge(e).tail), s3.name(s3.edge(e).head)};
    };
    CHECK(edge_names(0) == NamePair{"s1", "t1"});
    CHECK(edge_names(1) == NamePair{"u1", "v1"});
    CHECK(edge_names(2) == NamePair{"v1", "t1"});
    CHECK(edge_names(3) == NamePair{"v1", "t3"});
    CHECK(edge_names(4) == NamePair{"s2", "t2"});
    CHECK(edge_names(8) == NamePair{"s1", "u2"});
    CHECK(edge_names(9) == NamePair{"s2", "u1"});
}

TEST_CASE("g1 structure") {
    const auto g1 = gen_g1();
    CHECK(g1.vertex_count() == 12);
    CHECK(g1.edge_count() == 15);
    CHECK(g1.source_count() == 3);
    CHECK(g1.terminal_count() == 3);
    CHECK(all_pairs_connected(g1).connected);
    // sources feed only the other two middle vertices
    for (int i = 1; i <= 3; ++i) {
        const int si = g1.vertex_index("s" + std::to_string(i));
        CHECK(g1.out_edges(si).size() == 2);
        for (int e : g1.out_edges(si)) {
            const std::string head = g1.name(g1.edge(e).head);
            CHECK(head[0] == 'u');
            CHECK(head != "u" + std::to_string(i));
        }
    }
    // one path between distinct pairs, two from s_i to t_i
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            const auto paths = enumerate_paths(g1, g1.vertex_index("s" + std::to_string(i)),
                                               g1.vertex_index("t" + std::to_string(j)));
            CHECK(paths.size() == (i == j ? 2u : 1u));
        }
}

TEST_CASE("loading matches generation") {
    const std::string text = network_to_json(gen_g1());
    std::istringstream in(text);
    CHECK(load_network(in) == gen_g1());
    CHECK_THROWS_AS(load_network_file("/nonexistent/zz.json"), ParseError);
}

TEST_CASE("recognition of the generated families") {
    CHECK(recognize_g1(gen_g1()));
    CHECK(!recognize_g1(gen_smstar(4)));
    CHECK(recognize_smstar(gen_smstar(3)) == 3);
    CHECK(recognize_smstar(gen_smstar(7)) == 7);
    CHECK(!recognize_smstar(gen_g1()).has_value());
    CHECK(network_id(gen_g1()) == "g1");
    CHECK(network_id(gen_smstar(5)) == "smstar-5");
    const auto other = SumNetwork::create({"s", "t"}, {{"s", "t"}}, {"s"}, {"t"});
    CHECK(network_id(other) == "network(|V|=2,|E|=1)");
}

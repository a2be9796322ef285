#include "sumnet/coding.hpp"

#include <algorithm>
#include <random>

#include "doctest.h"
#include "sumnet/generators.hpp"
#include "sumnet/solver.hpp"

using namespace sumnet;

namespace {

Matrix column(const FieldPtr& f, std::vector<FqElem> entries) {
    Matrix m(f, entries.size(), 1);
    for (std::size_t i = 0; i < entries.size(); ++i) m.set(i, 0, entries[i]);
    return m;
}

// oracle: a code solves iff every terminal recovers the sum for every
// concrete input tuple (complete enumeration, scalar codes)
bool solves_all_inputs(const SumNetwork& net, const LinearCode& code) {
    const FieldPtr& f = code.field;
    const std::size_t m = net.source_count();
    std::vector<FqElem> tuple(m, 0);
    while (true) {
        std::vector<Matrix> inputs;
        FqElem sum = f->zero();
        for (FqElem x : tuple) {
            inputs.push_back(column(f, {x}));
            sum = f->add(sum, x);
        }
        const auto state = propagate(net, code, inputs);
        for (const auto& r : state.recovered)
            if (r.at(0, 0) != sum) return false;
        std::size_t i = 0;
        while (i < m && ++tuple[i] == f->order()) tuple[i++] = 0;
        if (i == m) return true;
    }
}

// any other valid topological order: same layers, reversed name order inside
std::vector<int> alternate_topo_order(const SumNetwork& net) {
    std::vector<int> layer(net.vertex_count(), 0);
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& e : net.edges()) {
            if (layer[static_cast<std::size_t>(e.head)] < layer[static_cast<std::size_t>(e.tail)] + 1) {
                layer[static_cast<std::size_t>(e.head)] = layer[static_cast<std::size_t>(e.tail)] + 1;
                changed = true;
            }
        }
    }
    std::vector<int> order(net.vertex_count());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (layer[static_cast<std::size_t>(a)] != layer[static_cast<std::size_t>(b)])
            return layer[static_cast<std::size_t>(a)] < layer[static_cast<std::size_t>(b)];
        return net.name(a) > net.name(b);
    });
    return order;
}

}  // namespace

TEST_CASE("slot enumeration is canonical") {
    const auto g1 = gen_g1();
    const auto slots = code_slots(g1);
    CHECK(slots.size() == 24);  // 6 source + 12 local + 6 decode
    CHECK(code_slots(gen_smstar(4)).size() == 30);

    // kinds appear in blocks, keys strictly increasing within each block
    int kind_seen = -1;
    std::pair<int, int> prev{-1, -1};
    for (const auto& s : slots) {
        const int k = static_cast<int>(s.kind);
        if (k != kind_seen) {
            CHECK(k > kind_seen);
            kind_seen = k;
            prev = {-1, -1};
        }
        CHECK(std::pair(s.a, s.b) > prev);
        prev = {s.a, s.b};
    }
}

TEST_CASE("propagation basics") {
    const auto f3 = Fq::make(3);

    // single edge with identity source and decode coefficients relays the input
    const auto single = SumNetwork::create({"s", "t"}, {{"s", "t"}}, {"s"}, {"t"});
    LinearCode chain;
    chain.field = f3;
    chain.block_len = 1;
    chain.set_scalar(SlotKind::Source, 0, 0, 1);
    chain.set_scalar(SlotKind::Decode, 0, 0, 1);
    for (FqElem x : f3->elements()) {
        const auto state = propagate(single, chain, {column(f3, {x})});
        CHECK(state.recovered[0].at(0, 0) == x);
    }
    CHECK(is_solution(single, chain));

    // all-zero inputs stay zero everywhere
    const auto g1 = gen_g1();
    const LinearCode known = g1_code_from_triple(f3, 2, 2, 2);
    const auto zero_state = propagate(g1, known, {column(f3, {0}), column(f3, {0}), column(f3, {0})});
    for (const auto& msg : zero_state.edge_message) CHECK(msg.is_zero());
    for (const auto& r : zero_state.recovered) CHECK(r.is_zero());

    // inputs (1,1,1) sum to 0 over GF(3)
    const auto state = propagate(g1, known, {column(f3, {1}), column(f3, {1}), column(f3, {1})});
    for (const auto& r : state.recovered) CHECK(r.at(0, 0) == 0);
}

TEST_CASE("propagation validates shapes") {
    const auto single = SumNetwork::create({"s", "t"}, {{"s", "t"}}, {"s"}, {"t"});
    const auto f3 = Fq::make(3);
    LinearCode code;
    code.field = f3;
    code.block_len = 1;
    code.set_scalar(SlotKind::Source, 0, 0, 1);
    CHECK_THROWS_AS(propagate(single, code, {}), DimensionMismatch);
    CHECK_THROWS_AS(propagate(single, code, {column(f3, {0, 0})}), DimensionMismatch);
    CHECK_THROWS_AS(propagate(single, code, {column(Fq::make(2), {0})}), FieldMismatch);

    LinearCode bad = code;
    bad.set_scalar(SlotKind::Local, 0, 0, 1);  // no local slot on a single edge
    CHECK_THROWS_AS(propagate(single, bad, {column(f3, {0})}), MissingNetworkBinding);
    LinearCode bad2 = code;
    bad2.set(SlotKind::Decode, 0, 0, Matrix::zero(f3, 2, 2));
    CHECK_THROWS_AS(propagate(single, bad2, {column(f3, {0})}), DimensionMismatch);
}

TEST_CASE("solution checking") {
    const auto g1 = gen_g1();
    // over GF(2) the forced unit code does not solve
    LinearCode unit;
    unit.field = Fq::make(2);
    unit.block_len = 1;
    for (const auto& s : code_slots(g1)) unit.set_scalar(s.kind, s.a, s.b, 1);
    CHECK(!is_solution(g1, unit));

    const auto s4 = gen_smstar(4);
    const LinearCode structured = smstar_structured_code(4, Fq::make(3), 1);
    CHECK(is_solution(s4, structured));

    // zeroing one decode coefficient breaks exactly one transfer block
    LinearCode broken = structured;
    broken.set_scalar(SlotKind::Decode, 0, 0, 0);
    CHECK(!is_solution(s4, broken));
}

TEST_CASE("solution test agrees with complete input enumeration") {
    std::mt19937_64 rng(11);
    const struct {
        SumNetwork net;
        std::string field;
    } cases[] = {{gen_g1(), "2"}, {gen_g1(), "3"}, {gen_smstar(3), "2"}, {gen_smstar(3), "5"}};
    for (const auto& [net, spec] : cases) {
        const auto f = Fq::parse(spec);
        CAPTURE(spec);
        int solving = 0;
        for (int trial = 0; trial < 40; ++trial) {
            const LinearCode code = random_code(net, f, 1, rng);
            CHECK(is_solution(net, code) == solves_all_inputs(net, code));
        }
        // and on known-good codes
        if (spec != "2") {
            const LinearCode good = recognize_g1(net) ? g1_structured_code(f, 2)
                                                      : smstar_structured_code(3, f, 1);
            CHECK(is_solution(net, good));
            CHECK(solves_all_inputs(net, good));
            ++solving;
        }
        (void)solving;
    }
}

TEST_CASE("propagation is linear") {
    std::mt19937_64 rng(23);
    const SumNetwork nets[] = {gen_g1(), gen_smstar(3), gen_smstar(4), gen_smstar(5)};
    for (const auto& net : nets) {
        for (const std::string spec : {"2", "3", "5"}) {
            const auto f = Fq::parse(spec);
            std::uniform_int_distribution<FqElem> pick(0, f->order() - 1);
            for (int trial = 0; trial < 34; ++trial) {
                const LinearCode code = random_code(net, f, 1, rng);
                const FqElem a = pick(rng), b = pick(rng);
                std::vector<Matrix> x, y, combo;
                for (std::size_t j = 0; j < net.source_count(); ++j) {
                    x.push_back(column(f, {pick(rng)}));
                    y.push_back(column(f, {pick(rng)}));
                    combo.push_back(x.back().scaled(a) + y.back().scaled(b));
                }
                const auto sx = propagate(net, code, x);
                const auto sy = propagate(net, code, y);
                const auto sc = propagate(net, code, combo);
                for (std::size_t e = 0; e < net.edge_count(); ++e)
                    CHECK(sc.edge_message[e] == sx.edge_message[e].scaled(a) + sy.edge_message[e].scaled(b));
                for (std::size_t t = 0; t < net.terminal_count(); ++t)
                    CHECK(sc.recovered[t] == sx.recovered[t].scaled(a) + sy.recovered[t].scaled(b));
            }
        }
    }
}

TEST_CASE("propagation is independent of the topological order used") {
    std::mt19937_64 rng(31);
    for (const auto& net : {gen_g1(), gen_smstar(4)}) {
        const auto f = Fq::make(3);
        std::uniform_int_distribution<FqElem> pick(0, 2);
        const auto alt = alternate_topo_order(net);
        CHECK(alt != topological_order(net));
        for (int trial = 0; trial < 20; ++trial) {
            const LinearCode code = random_code(net, f, 1, rng);
            std::vector<Matrix> inputs;
            for (std::size_t j = 0; j < net.source_count(); ++j) inputs.push_back(column(f, {pick(rng)}));
            const auto a = propagate(net, code, inputs);
            const auto b = propagate_in_order(net, code, inputs, alt);
            CHECK(a.edge_message == b.edge_message);
            CHECK(a.recovered == b.recovered);
        }
    }
}

TEST_CASE("assignment packing is a bijection") {
    std::mt19937_64 rng(5);
    const auto net = gen_g1();
    for (const std::string spec : {"2", "3", "2^2"}) {
        const auto f = Fq::parse(spec);
        for (int trial = 0; trial < 10; ++trial) {
            const LinearCode code = random_code(net, f, 1, rng);
            CHECK(code_from_assignment(net, f, 1, assignment_from_code(net, code)) == code);
        }
    }
    // all-identity assignment on a single-path network solves it
    const auto chainnet = SumNetwork::create({"s", "x", "t"}, {{"s", "x"}, {"x", "t"}}, {"s"}, {"t"});
    const auto f5 = Fq::make(5);
    const auto slots = code_slots(chainnet);
    const std::vector<Matrix> ident(slots.size(), Matrix::identity(f5, 1));
    CHECK(is_solution(chainnet, code_from_assignment(chainnet, f5, 1, ident)));

    CHECK_THROWS_AS(code_from_assignment(net, f5, 1, {}), LengthMismatch);
}

TEST_CASE("code JSON round trip") {
    std::mt19937_64 rng(17);
    const auto g1 = gen_g1();
    for (const std::string spec : {"3", "2^2"}) {
        const auto f = Fq::parse(spec);
        for (int n : {1, 2}) {
            const LinearCode code = random_code(g1, f, n, rng);
            const LinearCode back = code_from_json(code_to_json(code));
            CHECK(back == code);
            CHECK(code_to_json(back) == code_to_json(code));
        }
    }
    const LinearCode lifted = lift_scalar_to_vector(g1, g1_structured_code(Fq::make(2, 2), 2));
    CHECK(code_from_json(code_to_json(lifted)) == lifted);
    CHECK_THROWS_AS(code_from_json("{}"), ParseError);
    CHECK_THROWS_AS(code_from_json("{\"field\":\"3\",\"N\":0}"), ParseError);
}

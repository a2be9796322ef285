#include "sumnet/coding.hpp"

#include <algorithm>

#include "json.hpp"

namespace sumnet {

std::vector<Slot> code_slots(const SumNetwork& net) {
    std::vector<Slot> slots;
    for (std::size_t j = 0; j < net.source_count(); ++j)
        for (int e : net.out_edges(net.sources()[j]))
            slots.push_back({SlotKind::Source, static_cast<int>(j), e});
    std::vector<Slot> local;
    for (std::size_t v = 0; v < net.vertex_count(); ++v) {
        if (net.is_source(static_cast<int>(v))) continue;
        for (int ein : net.in_edges(static_cast<int>(v)))
            for (int eout : net.out_edges(static_cast<int>(v))) local.push_back({SlotKind::Local, ein, eout});
    }
    std::sort(local.begin(), local.end(),
              [](const Slot& x, const Slot& y) { return std::pair(x.a, x.b) < std::pair(y.a, y.b); });
    slots.insert(slots.end(), local.begin(), local.end());
    for (std::size_t i = 0; i < net.terminal_count(); ++i)
        for (int e : net.in_edges(net.terminals()[i]))
            slots.push_back({SlotKind::Decode, static_cast<int>(i), e});
    return slots;
}

Matrix LinearCode::coeff(SlotKind kind, int a, int b) const {
    const auto& m = kind == SlotKind::Source ? source : kind == SlotKind::Local ? local : decode;
    const auto it = m.find({a, b});
    if (it != m.end()) return it->second;
    return Matrix::zero(field, static_cast<std::size_t>(block_len), static_cast<std::size_t>(block_len));
}

LinearCode& LinearCode::set(SlotKind kind, int a, int b, Matrix m) {
    auto& dst = kind == SlotKind::Source ? source : kind == SlotKind::Local ? local : decode;
    dst.insert_or_assign({a, b}, std::move(m));
    return *this;
}

LinearCode& LinearCode::set_scalar(SlotKind kind, int a, int b, FqElem v) {
    return set(kind, a, b, Matrix::from_element(field, v));
}

namespace {

bool maps_equal(const std::map<std::pair<int, int>, Matrix>& a,
                const std::map<std::pair<int, int>, Matrix>& b) {
    for (const auto& [k, v] : a) {
        const auto it = b.find(k);
        if (it == b.end() ? !v.is_zero() : it->second != v) return false;
    }
    for (const auto& [k, v] : b)
        if (a.find(k) == a.end() && !v.is_zero()) return false;
    return true;
}

}  // namespace

bool operator==(const LinearCode& a, const LinearCode& b) {
    if (!same_field(a.field, b.field) || a.block_len != b.block_len) return false;
    return maps_equal(a.source, b.source) && maps_equal(a.local, b.local) &&
           maps_equal(a.decode, b.decode);
}

void validate_code(const SumNetwork& net, const LinearCode& code) {
    const std::size_t n = static_cast<std::size_t>(code.block_len);
    const auto check_matrix = [&](const Matrix& m, const std::string& where) {
        if (!same_field(m.field(), code.field)) throw FieldMismatch("coefficient field mismatch at " + where);
        if (m.rows() != n || m.cols() != n)
            throw DimensionMismatch("coefficient at " + where + " is not " + std::to_string(n) + "x" +
                                    std::to_string(n));
    };
    for (const auto& [k, v] : code.source) {
        const auto [j, e] = k;
        if (j < 0 || static_cast<std::size_t>(j) >= net.source_count() || e < 0 ||
            static_cast<std::size_t>(e) >= net.edge_count() || net.edge(e).tail != net.sources()[static_cast<std::size_t>(j)])
            throw MissingNetworkBinding("source coefficient (" + std::to_string(j) + "," + std::to_string(e) +
                                        ") does not fit this network");
        check_matrix(v, "source(" + std::to_string(j) + "," + std::to_string(e) + ")");
    }
    for (const auto& [k, v] : code.local) {
        const auto [ein, eout] = k;
        if (ein < 0 || eout < 0 || static_cast<std::size_t>(ein) >= net.edge_count() ||
            static_cast<std::size_t>(eout) >= net.edge_count() || net.edge(ein).head != net.edge(eout).tail ||
            net.is_source(net.edge(eout).tail))
            throw MissingNetworkBinding("local coefficient (" + std::to_string(ein) + "," +
                                        std::to_string(eout) + ") does not fit this network");
        check_matrix(v, "local(" + std::to_string(ein) + "," + std::to_string(eout) + ")");
    }
    for (const auto& [k, v] : code.decode) {
        const auto [i, e] = k;
        if (i < 0 || static_cast<std::size_t>(i) >= net.terminal_count() || e < 0 ||
            static_cast<std::size_t>(e) >= net.edge_count() ||
            net.edge(e).head != net.terminals()[static_cast<std::size_t>(i)])
            throw MissingNetworkBinding("decode coefficient (" + std::to_string(i) + "," + std::to_string(e) +
                                        ") does not fit this network");
        check_matrix(v, "decode(" + std::to_string(i) + "," + std::to_string(e) + ")");
    }
}

MessageState propagate_in_order(const SumNetwork& net, const LinearCode& code,
                                const std::vector<Matrix>& inputs, const std::vector<int>& vertex_order) {
    validate_code(net, code);
    const std::size_t n = static_cast<std::size_t>(code.block_len);
    if (inputs.size() != net.source_count())
        throw DimensionMismatch("expected " + std::to_string(net.source_count()) + " source inputs");
    for (const auto& x : inputs) {
        if (!same_field(x.field(), code.field)) throw FieldMismatch("input field mismatch");
        if (x.rows() != n || x.cols() != 1) throw DimensionMismatch("inputs must be N x 1 columns");
    }
    if (vertex_order.size() != net.vertex_count()) throw InvalidParameter("bad vertex order");

    MessageState state;
    state.edge_message.assign(net.edge_count(), Matrix::zero(code.field, n, 1));
    for (int v : vertex_order) {
        for (int e : net.out_edges(v)) {
            if (net.is_source(v)) {
                state.edge_message[static_cast<std::size_t>(e)] =
                    code.coeff(SlotKind::Source, net.source_pos(v), e) *
                    inputs[static_cast<std::size_t>(net.source_pos(v))];
            } else {
                Matrix acc = Matrix::zero(code.field, n, 1);
                for (int ein : net.in_edges(v))
                    acc = acc + code.coeff(SlotKind::Local, ein, e) * state.edge_message[static_cast<std::size_t>(ein)];
                state.edge_message[static_cast<std::size_t>(e)] = std::move(acc);
            }
        }
    }
    state.recovered.reserve(net.terminal_count());
    for (std::size_t i = 0; i < net.terminal_count(); ++i) {
        Matrix acc = Matrix::zero(code.field, n, 1);
        for (int e : net.in_edges(net.terminals()[i]))
            acc = acc + code.coeff(SlotKind::Decode, static_cast<int>(i), e) *
                            state.edge_message[static_cast<std::size_t>(e)];
        state.recovered.push_back(std::move(acc));
    }
    return state;
}

MessageState propagate(const SumNetwork& net, const LinearCode& code, const std::vector<Matrix>& inputs) {
    return propagate_in_order(net, code, inputs, topological_order(net));
}

bool is_solution(const SumNetwork& net, const LinearCode& code) {
    validate_code(net, code);
    const std::size_t n = static_cast<std::size_t>(code.block_len);
    const auto order = topological_order(net);
    for (std::size_t j = 0; j < net.source_count(); ++j) {
        for (std::size_t b = 0; b < n; ++b) {
            std::vector<Matrix> inputs(net.source_count(), Matrix::zero(code.field, n, 1));
            inputs[j].set(b, 0, code.field->one());
            const auto state = propagate_in_order(net, code, inputs, order);
            for (const auto& r : state.recovered)
                if (r != inputs[j]) return false;
        }
    }
    return true;
}

LinearCode code_from_assignment(const SumNetwork& net, FieldPtr field, int block_len,
                                const std::vector<Matrix>& assignment) {
    const auto slots = code_slots(net);
    if (assignment.size() != slots.size())
        throw LengthMismatch("assignment has " + std::to_string(assignment.size()) + " matrices, network has " +
                             std::to_string(slots.size()) + " slots");
    LinearCode code;
    code.field = std::move(field);
    code.block_len = block_len;
    for (std::size_t i = 0; i < slots.size(); ++i) {
        if (assignment[i].is_zero()) continue;  // absent key == zero
        code.set(slots[i].kind, slots[i].a, slots[i].b, assignment[i]);
    }
    validate_code(net, code);
    return code;
}

std::vector<Matrix> assignment_from_code(const SumNetwork& net, const LinearCode& code) {
    validate_code(net, code);
    std::vector<Matrix> out;
    for (const Slot& s : code_slots(net)) out.push_back(code.coeff(s.kind, s.a, s.b));
    return out;
}

LinearCode random_code(const SumNetwork& net, FieldPtr field, int block_len, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> pick(0, field->order() - 1);
    const std::size_t n = static_cast<std::size_t>(block_len);
    std::vector<Matrix> assignment;
    for (std::size_t i = 0; i < code_slots(net).size(); ++i) {
        Matrix m(field, n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) m.set(r, c, pick(rng));
        assignment.push_back(std::move(m));
    }
    return code_from_assignment(net, field, block_len, assignment);
}

namespace {

nlohmann::json matrix_to_json(const Matrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.field()->coeffs(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const FieldPtr& field, int block_len, const nlohmann::json& j) {
    const std::size_t n = static_cast<std::size_t>(block_len);
    if (!j.is_array() || j.size() != n) throw ParseError("matrix rows != N");
    Matrix m(field, n, n);
    for (std::size_t r = 0; r < n; ++r) {
        if (!j[r].is_array() || j[r].size() != n) throw ParseError("matrix cols != N");
        for (std::size_t c = 0; c < n; ++c)
            m.set(r, c, field->element(j[r][c].get<std::vector<std::uint32_t>>()));
    }
    return m;
}

}  // namespace

std::string code_to_json(const LinearCode& code) {
    nlohmann::json j;
    j["field"] = code.field->spec_string();
    j["N"] = code.block_len;
    j["source"] = nlohmann::json::array();
    for (const auto& [k, v] : code.source)
        j["source"].push_back({{"source", k.first}, {"edge", k.second}, {"matrix", matrix_to_json(v)}});
    j["local"] = nlohmann::json::array();
    for (const auto& [k, v] : code.local)
        j["local"].push_back({{"in", k.first}, {"out", k.second}, {"matrix", matrix_to_json(v)}});
    j["decode"] = nlohmann::json::array();
    for (const auto& [k, v] : code.decode)
        j["decode"].push_back({{"terminal", k.first}, {"edge", k.second}, {"matrix", matrix_to_json(v)}});
    return j.dump(2) + "\n";
}

LinearCode code_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("code JSON: ") + e.what());
    }
    try {
        LinearCode code;
        code.field = Fq::parse(j.at("field").get<std::string>());
        code.block_len = j.at("N").get<int>();
        if (code.block_len < 1) throw ParseError("code JSON: N must be >= 1");
        for (const auto& e : j.value("source", nlohmann::json::array()))
            code.set(SlotKind::Source, e.at("source").get<int>(), e.at("edge").get<int>(),
                     matrix_from_json(code.field, code.block_len, e.at("matrix")));
        for (const auto& e : j.value("local", nlohmann::json::array()))
            code.set(SlotKind::Local, e.at("in").get<int>(), e.at("out").get<int>(),
                     matrix_from_json(code.field, code.block_len, e.at("matrix")));
        for (const auto& e : j.value("decode", nlohmann::json::array()))
            code.set(SlotKind::Decode, e.at("terminal").get<int>(), e.at("edge").get<int>(),
                     matrix_from_json(code.field, code.block_len, e.at("matrix")));
        return code;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("code JSON: ") + e.what());
    }
}

}  // namespace sumnet

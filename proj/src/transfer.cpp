#include "sumnet/transfer.hpp"

namespace sumnet {

bool TransferMatrix::all_identity() const {
    for (const auto& b : blocks)
        if (!b.is_identity()) return false;
    return true;
}

bool operator==(const TransferMatrix& a, const TransferMatrix& b) {
    return same_field(a.field, b.field) && a.block_len == b.block_len &&
           a.source_count == b.source_count && a.terminal_count == b.terminal_count &&
           a.blocks == b.blocks;
}

TransferMatrix transfer_matrix(const SumNetwork& net, const LinearCode& code) {
    validate_code(net, code);
    const std::size_t n = static_cast<std::size_t>(code.block_len);
    TransferMatrix t;
    t.field = code.field;
    t.block_len = code.block_len;
    t.source_count = net.source_count();
    t.terminal_count = net.terminal_count();
    t.blocks.assign(t.source_count * t.terminal_count, Matrix::zero(code.field, n, n));
    const auto order = topological_order(net);
    for (std::size_t j = 0; j < net.source_count(); ++j) {
        std::vector<Matrix> msg(net.edge_count(), Matrix::zero(code.field, n, n));
        for (int v : order) {
            for (int e : net.out_edges(v)) {
                if (net.is_source(v)) {
                    if (net.source_pos(v) == static_cast<int>(j))
                        msg[static_cast<std::size_t>(e)] = code.coeff(SlotKind::Source, net.source_pos(v), e);
                } else {
                    Matrix acc = Matrix::zero(code.field, n, n);
                    for (int ein : net.in_edges(v))
                        acc = acc + code.coeff(SlotKind::Local, ein, e) * msg[static_cast<std::size_t>(ein)];
                    msg[static_cast<std::size_t>(e)] = std::move(acc);
                }
            }
        }
        for (std::size_t i = 0; i < net.terminal_count(); ++i) {
            Matrix acc = Matrix::zero(code.field, n, n);
            for (int e : net.in_edges(net.terminals()[i]))
                acc = acc + code.coeff(SlotKind::Decode, static_cast<int>(i), e) * msg[static_cast<std::size_t>(e)];
            t.block(j, i) = std::move(acc);
        }
    }
    return t;
}

Matrix path_gain(const SumNetwork& net, const NetPath& path, const LinearCode& code) {
    if (path.vertices.size() < 2 || path.edges.size() + 1 != path.vertices.size())
        throw PathInvalid("malformed path");
    for (std::size_t i = 0; i < path.edges.size(); ++i) {
        const int e = path.edges[i];
        if (e < 0 || static_cast<std::size_t>(e) >= net.edge_count())
            throw PathInvalid("path references unknown edge");
        if (net.edge(e).tail != path.vertices[i] || net.edge(e).head != path.vertices[i + 1])
            throw PathInvalid("path edge does not join its vertices");
    }
    for (std::size_t i = 1; i + 1 < path.vertices.size(); ++i)
        if (net.is_source(path.vertices[i]))
            throw PathInvalid("interior vertex '" + net.name(path.vertices[i]) + "' is a source");
    Matrix gain = Matrix::identity(code.field, static_cast<std::size_t>(code.block_len));
    for (std::size_t i = 0; i + 1 < path.edges.size(); ++i)
        gain = code.coeff(SlotKind::Local, path.edges[i], path.edges[i + 1]) * gain;
    return gain;
}

TransferMatrix transfer_via_paths(const SumNetwork& net, const LinearCode& code, std::size_t path_limit) {
    validate_code(net, code);
    const std::size_t n = static_cast<std::size_t>(code.block_len);
    TransferMatrix t;
    t.field = code.field;
    t.block_len = code.block_len;
    t.source_count = net.source_count();
    t.terminal_count = net.terminal_count();
    t.blocks.assign(t.source_count * t.terminal_count, Matrix::zero(code.field, n, n));
    for (std::size_t i = 0; i < net.source_count(); ++i) {
        for (std::size_t j = 0; j < net.terminal_count(); ++j) {
            Matrix acc = Matrix::zero(code.field, n, n);
            for (const auto& path : enumerate_paths(net, net.sources()[i], net.terminals()[j], path_limit)) {
                bool through_source = false;
                for (std::size_t v = 1; v + 1 < path.vertices.size(); ++v)
                    if (net.is_source(path.vertices[v])) through_source = true;
                if (through_source) continue;  // source nodes emit only their own symbol
                const Matrix gain = path_gain(net, path, code);
                acc = acc + code.coeff(SlotKind::Decode, static_cast<int>(j), path.edges.back()) * gain *
                                code.coeff(SlotKind::Source, static_cast<int>(i), path.edges.front());
            }
            t.block(i, j) = std::move(acc);
        }
    }
    return t;
}

LinearCode reverse_code(const SumNetwork& net, const LinearCode& code) {
    validate_code(net, code);
    LinearCode rcode;
    rcode.field = code.field;
    rcode.block_len = code.block_len;
    for (const auto& [k, v] : code.local) {
        const int shared = net.edge(k.second).tail;
        if (net.is_terminal(shared)) {
            // the slot has no counterpart once the shared vertex becomes a source
            if (!v.is_zero())
                throw ValidationError("cannot reverse a local coefficient at terminal '" + net.name(shared) +
                                      "', which becomes a source");
            continue;
        }
        rcode.local.emplace(std::make_pair(k.second, k.first), v);
    }
    rcode.source = code.decode;
    rcode.decode = code.source;
    validate_code(reverse_network(net), rcode);
    return rcode;
}

TransferMatrix blockwise_transpose(const TransferMatrix& t) {
    TransferMatrix r;
    r.field = t.field;
    r.block_len = t.block_len;
    r.source_count = t.terminal_count;
    r.terminal_count = t.source_count;
    r.blocks.assign(r.source_count * r.terminal_count,
                    Matrix::zero(t.field, static_cast<std::size_t>(t.block_len), static_cast<std::size_t>(t.block_len)));
    for (std::size_t i = 0; i < t.source_count; ++i)
        for (std::size_t j = 0; j < t.terminal_count; ++j) r.block(j, i) = t.block(i, j);
    return r;
}

}  // namespace sumnet

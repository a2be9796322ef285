#ifndef SUMNET_TRANSFER_HPP
#define SUMNET_TRANSFER_HPP

#include "sumnet/coding.hpp"

namespace sumnet {

/// Source-cut to terminal-cut transfer: an m x n grid of N x N blocks, block
/// (i,j) being the composite linear map from source block X_i to the value
/// recovered at terminal j. A code solves the network iff every block is the
/// identity.
struct TransferMatrix {
    FieldPtr field;
    int block_len = 1;
    std::size_t source_count = 0;
    std::size_t terminal_count = 0;
    std::vector<Matrix> blocks;  // row-major, source-major

    const Matrix& block(std::size_t i, std::size_t j) const { return blocks[i * terminal_count + j]; }
    Matrix& block(std::size_t i, std::size_t j) { return blocks[i * terminal_count + j]; }
    bool all_identity() const;
};

bool operator==(const TransferMatrix& a, const TransferMatrix& b);
inline bool operator!=(const TransferMatrix& a, const TransferMatrix& b) { return !(a == b); }

/// Blocks via symbolic propagation of an N x N identity injected at each
/// source in turn.
TransferMatrix transfer_matrix(const SumNetwork& net, const LinearCode& code);

/// Ordered product of the local coefficients along the path; messages are
/// columns and coefficients multiply on the left, so later hops compose on
/// the left. A single-edge path has gain I (empty product). Throws
/// PathInvalid when the path is malformed or passes through a source.
Matrix path_gain(const SumNetwork& net, const NetPath& path, const LinearCode& code);

/// Independent route to the same blocks: block (i,j) as the sum over all
/// s_i -> t_j paths of decode * interior gain * source coefficient.
TransferMatrix transfer_via_paths(const SumNetwork& net, const LinearCode& code,
                                  std::size_t path_limit = kDefaultPathLimit);

/// Code for reverse_network(net) reusing the coefficients of `code`: each
/// local coefficient keyed (in, out) moves to the reversed adjacent pair
/// (out, in), decode coefficients become source coefficients and vice versa
/// (edge indices are preserved by reversal). Involutive.
LinearCode reverse_code(const SumNetwork& net, const LinearCode& code);

/// n x m grid with block (j,i) = block (i,j); blocks themselves unchanged.
TransferMatrix blockwise_transpose(const TransferMatrix& t);

}  // namespace sumnet

#endif

#ifndef SUMNET_CODING_HPP
#define SUMNET_CODING_HPP

#include <map>
#include <random>
#include <utility>
#include <vector>

#include "sumnet/matrix.hpp"
#include "sumnet/network.hpp"

namespace sumnet {

/// Coefficient slot of a network at block length N. Source: (source position,
/// out-edge); Local: (in-edge, out-edge) at a non-source vertex; Decode:
/// (terminal position, in-edge).
enum class SlotKind { Source, Local, Decode };

struct Slot {
    SlotKind kind;
    int a = -1;
    int b = -1;
    bool operator==(const Slot&) const = default;
};

/// Every coefficient slot of the network, in canonical order: all source
/// slots, then all local slots, then all decode slots, each group sorted
/// lexicographically by key.
std::vector<Slot> code_slots(const SumNetwork& net);

/// Block-length-N linear network code over a field: N x N coefficient
/// matrices keyed by slot. Absent keys mean the zero matrix.
struct LinearCode {
    FieldPtr field;
    int block_len = 1;
    std::map<std::pair<int, int>, Matrix> source;  // (source position, edge)
    std::map<std::pair<int, int>, Matrix> local;   // (in-edge, out-edge)
    std::map<std::pair<int, int>, Matrix> decode;  // (terminal position, edge)

    Matrix coeff(SlotKind kind, int a, int b) const;  // zero when absent

    LinearCode& set(SlotKind kind, int a, int b, Matrix m);
    LinearCode& set_scalar(SlotKind kind, int a, int b, FqElem v);  // block_len 1
};

/// Structural equality treating absent keys as zero matrices.
bool operator==(const LinearCode& a, const LinearCode& b);
inline bool operator!=(const LinearCode& a, const LinearCode& b) { return !(a == b); }

/// Throws MissingNetworkBinding when any key does not fit the network, and
/// DimensionMismatch / FieldMismatch on malformed coefficient matrices.
void validate_code(const SumNetwork& net, const LinearCode& code);

/// Per-edge messages and per-terminal recovered values, as N x 1 columns.
struct MessageState {
    std::vector<Matrix> edge_message;  // indexed by edge
    std::vector<Matrix> recovered;     // indexed by terminal position
};

/// Propagates source columns through the network: edges leaving source j
/// carry source_coeff * X_j, edges leaving any other vertex carry the
/// coefficient-weighted sum of the incoming messages, and each terminal
/// combines its incoming messages with its decode coefficients.
MessageState propagate(const SumNetwork& net, const LinearCode& code,
                       const std::vector<Matrix>& inputs);

/// Same, processing vertices in the given topological order (used to check
/// order independence).
MessageState propagate_in_order(const SumNetwork& net, const LinearCode& code,
                                const std::vector<Matrix>& inputs,
                                const std::vector<int>& vertex_order);

/// True iff every terminal recovers the sum of all source blocks, for all
/// inputs: checked symbolically by propagating each basis column of each
/// source and requiring the composite map onto every terminal to be the
/// identity.
bool is_solution(const SumNetwork& net, const LinearCode& code);

/// Packs/unpacks a code as a flat matrix sequence in canonical slot order.
LinearCode code_from_assignment(const SumNetwork& net, FieldPtr field, int block_len,
                                const std::vector<Matrix>& assignment);
std::vector<Matrix> assignment_from_code(const SumNetwork& net, const LinearCode& code);

/// Uniformly random coefficient on every slot; deterministic in the rng.
LinearCode random_code(const SumNetwork& net, FieldPtr field, int block_len, std::mt19937_64& rng);

std::string code_to_json(const LinearCode& code);
LinearCode code_from_json(const std::string& text);

}  // namespace sumnet

#endif

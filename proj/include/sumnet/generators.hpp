#ifndef SUMNET_GENERATORS_HPP
#define SUMNET_GENERATORS_HPP

#include <iosfwd>
#include <optional>

#include "sumnet/network.hpp"

namespace sumnet {

/// Four-layer network with m-1 sources s_i, relay layers u_i, v_i and m
/// terminals t_i. Edges, in stable order: per i the quadruple (s_i,t_i),
/// (u_i,v_i), (v_i,t_i), (v_i,t_m), then the cross edges (s_i,u_j), i != j,
/// in (i,j)-lexicographic order. Requires m >= 3.
SumNetwork gen_smstar(int m);

/// Twelve-vertex, fifteen-edge network on s_i, u_i, v_i, t_i (i = 1..3):
/// edges (u_i,v_i), then (s_i,u_j) for i != j, then (v_i,t_j) for i != j,
/// each group in (i,j)-lexicographic order.
SumNetwork gen_g1();

/// Parses and validates the JSON network format.
SumNetwork load_network(std::istream& in);
SumNetwork load_network_file(const std::string& path);

/// Structural recognition of generated families (used to pick structured
/// solving routes). Matching is exact against the generator output.
std::optional<int> recognize_smstar(const SumNetwork& net);
bool recognize_g1(const SumNetwork& net);

/// "smstar-m", "g1", or "network(|V|=..,|E|=..)" for reports.
std::string network_id(const SumNetwork& net);

}  // namespace sumnet

#endif

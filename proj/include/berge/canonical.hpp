#pragma once

#include <berge/hypergraph.hpp>

#include <string>

namespace berge {

inline constexpr int default_iso_cap = 8;

/// Byte string that is equal for two hypergraphs iff they are isomorphic. The
/// minimum sorted edge encoding over all relabelings consistent with an
/// iterated degree refinement. Throws CapExceeded when n > max_n.
std::string canonical_form(const LinearHypergraph & h, int max_n = default_iso_cap);

/// The hypergraph relabelled by `permutation` (old id -> new id).
LinearHypergraph relabel(const LinearHypergraph & h, const std::vector<VertexId> & permutation);

} // namespace berge

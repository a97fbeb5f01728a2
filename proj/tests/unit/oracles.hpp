#pragma once

// Slow reference computations for tests. Nothing here calls the library's
// search, enumeration or isomorphism code.

#include <berge/hypergraph.hpp>

#include <optional>
#include <vector>

namespace oracle {

using Edges = std::vector<std::vector<int>>;

Edges edges_of(const berge::LinearHypergraph & h);

// cover[u][v] = number of edges containing both u and v.
std::vector<std::vector<int>> pair_counts(int n, const Edges & edges);
bool every_pair_once(int n, const Edges & edges);
bool is_linear(int n, const Edges & edges);

// All 2-subsets (mixed) and 3-subsets, unordered.
Edges all_candidates(int n, bool mixed);

// Every linear hypergraph on n vertices by filtering all 2^c subsets.
std::vector<Edges> all_linear(int n, bool mixed);

// Longest Berge path by growing vertex sequences with a matching check.
int longest_path(int n, const Edges & edges);
std::optional<int> circumference(int n, const Edges & edges);

// Brute force over all n! relabellings.
bool isomorphic(int n, const Edges & a, const Edges & b);

} // namespace oracle

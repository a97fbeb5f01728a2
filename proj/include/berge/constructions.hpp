#pragma once

#include <berge/hypergraph.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace berge {

/// The Fano plane: triples {i, i+1, i+3} mod 7.
LinearHypergraph fano();

/// Bose construction of a Steiner triple system; n ≡ 3 (mod 6). Throws BadResidue.
LinearHypergraph sts_bose(int n);

/// Skolem construction of a Steiner triple system; n ≡ 1 (mod 6), n >= 7. Throws BadResidue.
LinearHypergraph sts_skolem(int n);

/// Whichever of the two constructions applies to n.
LinearHypergraph steiner_triple_system(int n);

/// `copies` disjoint copies of an STS(k): n = k*copies vertices, (k-1)n/6 triples,
/// and no Berge path of length k.
LinearHypergraph extremal_disjoint_sts(int k, int copies);

/// (n-1)/2 triples through vertex 0; n odd, n >= 3. Throws BadParity.
LinearHypergraph star_k3(int n);

/// n/3 disjoint triples; n ≡ 0 (mod 3). Throws BadResidue.
LinearHypergraph matching_k2(int n);

/// All C(n,2) pairs as 2-edges; n >= 1.
LinearHypergraph two_edge_clique(int n);

/// Family parameters as accepted by the CLI.
struct ConstructionSpec {
    std::string family;
    int n = 0;
    int k = 0;
    int copies = 1;
};

const std::vector<std::string_view> & construction_families();

/// Dispatch on `spec.family`; throws InvalidArgument for an unknown family.
LinearHypergraph construct(const ConstructionSpec & spec);

} // namespace berge

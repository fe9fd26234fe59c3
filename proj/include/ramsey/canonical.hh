#ifndef RAMSEY_CANONICAL_HH
#define RAMSEY_CANONICAL_HH

#include <ramsey/graph.hh>

#include <cstdint>
#include <span>
#include <vector>

namespace ramsey
{
    constexpr int canonical_max_order = 64;

    /**
     * Canonical labelling by individualisation and refinement. Partitions are
     * refined to equitability (cells split by neighbour count into each other
     * cell, smaller counts first); the search individualises vertices of the
     * first non-singleton cell and keeps the leaf whose relabelled adjacency
     * rows are lexicographically greatest. Automorphisms found by comparing
     * leaves prune the search tree.
     *
     * An optional colouring gives the initial partition, with cells in
     * ascending colour order; colour-preserving isomorphisms are then the
     * ones respected.
     */
    struct CanonicalLabelling
    {
        std::vector<int> order;                    // order[i]: vertex placed at position i
        std::vector<std::uint64_t> form;           // form[i] bit j: order[i] ~ order[j]
        std::vector<std::vector<int>> generators;  // automorphisms found, as images
    };

    auto canonical_labelling(const Graph & g, std::span<const int> colours = {}) -> CanonicalLabelling;

    /// The graph relabelled by its canonical labelling.
    auto canonical_form(const Graph & g) -> Graph;

    auto are_isomorphic(const Graph & a, const Graph & b) -> bool;

    /// Orbits of the group generated by the given permutations: orbit[v] is
    /// the smallest vertex in v's orbit.
    auto orbits_of(int n, const std::vector<std::vector<int>> & generators) -> std::vector<int>;
}

#endif

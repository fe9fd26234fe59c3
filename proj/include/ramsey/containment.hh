#ifndef RAMSEY_CONTAINMENT_HH
#define RAMSEY_CONTAINMENT_HH

#include <ramsey/families.hh>
#include <ramsey/graph.hh>

#include <optional>
#include <string>
#include <vector>

namespace ramsey
{
    /// Injective map from pattern vertices to host vertices: image[p] is the
    /// host vertex carrying pattern vertex p. Pattern vertex numbering follows
    /// build_tree / build_named.
    struct Embedding
    {
        std::vector<int> image;

        friend auto operator== (const Embedding &, const Embedding &) -> bool = default;
    };

    /// Ordinary (non-induced) subgraph containment throughout: host may carry
    /// extra edges among the image vertices.
    auto is_valid_embedding(const Graph & host, const Graph & pattern, const Embedding & e) -> bool;

    /**
     * Exact tree containment. Stars reduce to a degree test and S_n(l) to a
     * leaf-counting test over adjacent centre pairs; spiders S_n(l,m) fix the
     * centre and backtrack over the l subdivided legs, with the leaf demand
     * tracked as a budget on centre-neighbours the legs may consume.
     * nullopt is a proof of absence.
     */
    auto contains_tree(const Graph & host, const TreeSpec & spec) -> std::optional<Embedding>;

    /// image[0] is the hub, image[1..m] the rim in cycle order.
    auto contains_wheel(const Graph & host, int m) -> std::optional<Embedding>;

    /// image lists the cycle's vertices in order.
    auto contains_cycle(const Graph & host, int k) -> std::optional<Embedding>;

    /// Cycle of length exactly k inside host[allowed]; vertices in cycle order.
    auto find_cycle_within(const Graph & host, const VertexSet & allowed, int k) -> std::optional<std::vector<int>>;

    constexpr int subgraph_iso_max_pattern = 16;

    /// Generic backtracking oracle for desk-scale cross-checks.
    auto subgraph_iso(const Graph & host, const Graph & pattern) -> std::optional<Embedding>;

    auto to_string(const Embedding & e) -> std::string;
}

#endif

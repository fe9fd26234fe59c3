#ifndef RAMSEY_ENUMERATION_HH
#define RAMSEY_ENUMERATION_HH

#include <ramsey/graph.hh>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace ramsey
{
    using GraphPredicate = std::function<auto (const Graph &) -> bool>;
    using GraphSink = std::function<auto (const Graph &) -> void>;

    struct EnumFilter
    {
        int order = 0;
        std::optional<int> min_degree;
        std::optional<int> max_degree;

        /// Must be hereditary (closed under deleting a vertex): it is applied
        /// to every intermediate graph during augmentation and prunes the
        /// subtree when false. With min_degree set, generation runs on
        /// complements, so the predicate is then applied to final graphs only.
        GraphPredicate predicate;
    };

    /// Largest order accepted without degree constraints, and with a degree
    /// constraint that keeps either the graph or its complement at maximum
    /// degree 3.
    constexpr int enumerate_max_order = 10;
    constexpr int enumerate_max_order_sparse = 12;

    /**
     * One graph per isomorphism class satisfying the filter, streamed to
     * the sink in a deterministic order. Generation is by canonical
     * augmentation: a child of G is G plus one new vertex, kept only if the
     * new vertex is equivalent to the canonically chosen last vertex of the
     * child. Returns the number of graphs emitted.
     */
    auto enumerate_graphs(const EnumFilter & filter, const GraphSink & sink) -> long;

    /// Disjoint unions of paths (orders >= 1) and cycles (orders >= 3) on
    /// n vertices, one per multiset of parts: exactly the graphs with
    /// maximum degree at most 2.
    auto enumerate_union_paths_cycles(int n, const GraphSink & sink) -> long;

    /// Number of multisets enumerated above, from the generating function
    /// prod_{k>=1} 1/(1-x^k) * prod_{k>=3} 1/(1-x^k).
    auto count_union_paths_cycles(int n) -> long;

    struct AugmentationOptions
    {
        int order = 0;
        std::optional<int> max_degree;
        GraphPredicate predicate;                 // hereditary
        std::optional<std::uint64_t> seed;        // permutes child order when set
        std::optional<long> budget_nodes;         // children examined
    };

    enum class AugmentationEnd { completed, stopped, budget_exceeded };

    struct AugmentationResult
    {
        AugmentationEnd end = AugmentationEnd::completed;
        long nodes = 0;
    };

    /// The depth-first engine behind enumerate_graphs; the visitor sees
    /// each graph of the target order and returns false to stop. Orders up
    /// to canonical_max_order.
    auto augment(const AugmentationOptions & options, const std::function<auto (const Graph &) -> bool> & visit) -> AugmentationResult;
}

#endif

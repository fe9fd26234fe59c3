#ifndef RAMSEY_FAMILIES_HH
#define RAMSEY_FAMILIES_HH

#include <ramsey/graph.hh>

#include <optional>
#include <string>
#include <variant>

namespace ramsey
{
    /// Star S_n: centre plus n-1 leaves.
    struct Star
    {
        int n;
        friend auto operator== (const Star &, const Star &) -> bool = default;
    };

    /// S_n(l,m): the star S_{n-ml} with l of its edges each subdivided m times.
    struct Spider
    {
        int n, l, m;
        friend auto operator== (const Spider &, const Spider &) -> bool = default;
    };

    /// S_n(l): stars S_l and S_{n-l} with their centres joined by an edge.
    struct JoinedStars
    {
        int n, l;
        friend auto operator== (const JoinedStars &, const JoinedStars &) -> bool = default;
    };

    using TreeSpec = std::variant<Star, Spider, JoinedStars>;

    struct Complete { int n; friend auto operator== (const Complete &, const Complete &) -> bool = default; };
    struct Cycle { int n; friend auto operator== (const Cycle &, const Cycle &) -> bool = default; };
    struct Path { int n; friend auto operator== (const Path &, const Path &) -> bool = default; };
    struct CompleteBipartite { int a, b; friend auto operator== (const CompleteBipartite &, const CompleteBipartite &) -> bool = default; };
    struct Wheel { int m; friend auto operator== (const Wheel &, const Wheel &) -> bool = default; };
    struct Empty { int n; friend auto operator== (const Empty &, const Empty &) -> bool = default; };

    using NamedGraphSpec = std::variant<Complete, Cycle, Path, CompleteBipartite, Wheel, Empty>;

    /// Throws ParameterError naming the violated constraint.
    auto validate(const TreeSpec & spec) -> void;
    auto validate(const NamedGraphSpec & spec) -> void;

    auto tree_order(const TreeSpec & spec) -> int;

    /**
     * Builds the tree with a fixed layout: vertex 0 is the (maximum degree)
     * centre, its leaves follow, then the subdivided paths in order, each
     * listed outward from the centre. For JoinedStars the secondary centre
     * comes after the primary leaves, followed by its own leaves.
     */
    auto build_tree(const TreeSpec & spec) -> Graph;

    /// Wheel(m) puts the hub at vertex 0 and the rim 1..m in cycle order;
    /// CompleteBipartite(a,b) puts the a-side first.
    auto build_named(const NamedGraphSpec & spec) -> Graph;

    /// Maximum degree of build_tree(spec), computed from the parameters.
    auto spec_max_degree(const TreeSpec & spec) -> int;

    /**
     * Names a tree of maximum degree at least order-3 as one of S_n,
     * S_n(1,1), S_n(1,2), S_n(2,1), S_n(3). Where small orders make two of
     * these isomorphic the earlier name in that list is returned. Returns
     * nullopt for trees below the degree threshold (and the one-vertex tree).
     * Throws GraphError for non-trees.
     */
    auto classify_tree(const Graph & g) -> std::optional<TreeSpec>;

    /// Isomorphism-invariant encoding of a tree (centre-rooted AHU string).
    auto tree_canonical_string(const Graph & tree) -> std::string;

    /// Mathematical names, e.g. "S_9(2,1)", "W_8", "K_{3,3}".
    auto to_string(const TreeSpec & spec) -> std::string;
    auto to_string(const NamedGraphSpec & spec) -> std::string;

    /// CLI syntax, e.g. "S(9;2,1)", "W(8)", "K(3,3)".
    auto to_syntax(const TreeSpec & spec) -> std::string;
    auto to_syntax(const NamedGraphSpec & spec) -> std::string;
}

#endif

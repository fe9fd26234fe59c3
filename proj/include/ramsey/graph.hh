#ifndef RAMSEY_GRAPH_HH
#define RAMSEY_GRAPH_HH

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace ramsey
{
    /**
     * A subset of 0..capacity-1, stored as packed 64-bit words. Used for
     * neighbourhoods, induced-subgraph selections and search frontiers.
     */
    class VertexSet
    {
        private:
            int _capacity = 0;
            std::vector<std::uint64_t> _words;

        public:
            VertexSet() = default;
            explicit VertexSet(int capacity);
            VertexSet(int capacity, std::initializer_list<int> members);

            static auto full(int capacity) -> VertexSet;
            static auto from_words(int capacity, std::span<const std::uint64_t> words) -> VertexSet;

            auto capacity() const -> int { return _capacity; }
            auto words() const -> std::span<const std::uint64_t> { return _words; }

            auto contains(int v) const -> bool
            {
                return (_words[v >> 6] >> (v & 63)) & 1u;
            }

            auto insert(int v) -> void { _words[v >> 6] |= std::uint64_t{1} << (v & 63); }
            auto erase(int v) -> void { _words[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

            auto count() const -> int;
            auto empty() const -> bool;
            auto first() const -> int;   // -1 when empty
            auto members() const -> std::vector<int>;

            auto operator&= (const VertexSet & other) -> VertexSet &;
            auto operator|= (const VertexSet & other) -> VertexSet &;
            auto operator-= (const VertexSet & other) -> VertexSet &;

            friend auto operator== (const VertexSet &, const VertexSet &) -> bool = default;

            template <typename F>
            auto for_each(F && f) const -> void
            {
                for (std::size_t w = 0 ; w < _words.size() ; ++w)
                    for (auto bits = _words[w] ; bits ; bits &= bits - 1)
                        f(static_cast<int>(w * 64 + std::countr_zero(bits)));
            }
    };

    auto operator& (VertexSet a, const VertexSet & b) -> VertexSet;
    auto operator| (VertexSet a, const VertexSet & b) -> VertexSet;
    auto operator- (VertexSet a, const VertexSet & b) -> VertexSet;

    class GraphBuilder;

    /**
     * Finite simple undirected graph on vertices 0..order-1, with packed
     * adjacency rows. Immutable once built; use GraphBuilder to construct or
     * derive modified copies.
     */
    class Graph
    {
        friend class GraphBuilder;

        private:
            int _order = 0;
            int _words = 0;
            std::vector<std::uint64_t> _rows;

        public:
            static constexpr int max_order = 512;

            Graph() = default;
            explicit Graph(int order);

            auto order() const -> int { return _order; }
            auto words_per_row() const -> int { return _words; }

            auto adjacent(int u, int v) const -> bool
            {
                return (_rows[std::size_t(u) * _words + (v >> 6)] >> (v & 63)) & 1u;
            }

            auto row(int v) const -> std::span<const std::uint64_t>
            {
                return { _rows.data() + std::size_t(v) * _words, std::size_t(_words) };
            }

            auto neighbours(int v) const -> VertexSet;
            auto degree(int v) const -> int;
            auto edge_count() const -> long;
            auto edges() const -> std::vector<std::pair<int, int>>;

            friend auto operator== (const Graph &, const Graph &) -> bool = default;
    };

    class GraphBuilder
    {
        private:
            Graph _graph;

            auto check(int u, int v) const -> void;

        public:
            explicit GraphBuilder(int order);
            explicit GraphBuilder(Graph graph);

            auto order() const -> int { return _graph._order; }
            auto has_edge(int u, int v) const -> bool;
            auto add_edge(int u, int v) -> GraphBuilder &;
            auto remove_edge(int u, int v) -> GraphBuilder &;
            auto toggle_edge(int u, int v) -> GraphBuilder &;

            auto build() && -> Graph;
            auto build() const & -> Graph;
    };

    auto graph_from_edges(int order, std::span<const std::pair<int, int>> edges) -> Graph;

    auto complement(const Graph & g) -> Graph;
    auto disjoint_union(const Graph & a, const Graph & b) -> Graph;
    auto induced(const Graph & g, const VertexSet & s) -> Graph;

    struct DegreeProfile
    {
        int min_degree;
        int max_degree;
        std::vector<int> sequence;   // descending

        friend auto operator== (const DegreeProfile &, const DegreeProfile &) -> bool = default;
    };

    auto degree_profile(const Graph & g) -> DegreeProfile;

    /// Vertex sets of the connected components, ordered by smallest member.
    auto connected_components(const Graph & g) -> std::vector<VertexSet>;
    auto is_connected(const Graph & g) -> bool;
    auto is_tree(const Graph & g) -> bool;

    /// Number of vertex pairs whose adjacency differs; both graphs must have
    /// the same order.
    auto edge_difference(const Graph & a, const Graph & b) -> long;
}

#endif

#include <ramsey/graph.hh>
#include <ramsey/errors.hh>

#include <algorithm>
#include <functional>
#include <string>

using std::size_t;
using std::string;
using std::uint64_t;
using std::vector;

namespace ramsey
{
    using std::to_string;

    namespace
    {
        auto words_for(int capacity) -> int
        {
            return (capacity + 63) / 64;
        }
    }

    VertexSet::VertexSet(int capacity) :
        _capacity(capacity),
        _words(size_t(words_for(capacity)), 0)
    {
    }

    VertexSet::VertexSet(int capacity, std::initializer_list<int> members) :
        VertexSet(capacity)
    {
        for (int v : members) {
            if (v < 0 || v >= capacity)
                throw GraphError("vertex " + to_string(v) + " outside 0.." + to_string(capacity - 1));
            insert(v);
        }
    }

    auto VertexSet::full(int capacity) -> VertexSet
    {
        VertexSet s(capacity);
        for (int v = 0 ; v < capacity ; ++v)
            s.insert(v);
        return s;
    }

    auto VertexSet::from_words(int capacity, std::span<const uint64_t> words) -> VertexSet
    {
        VertexSet s(capacity);
        std::copy(words.begin(), words.begin() + std::min(words.size(), s._words.size()), s._words.begin());
        return s;
    }

    auto VertexSet::count() const -> int
    {
        int c = 0;
        for (auto w : _words)
            c += std::popcount(w);
        return c;
    }

    auto VertexSet::empty() const -> bool
    {
        return std::all_of(_words.begin(), _words.end(), [] (uint64_t w) { return w == 0; });
    }

    auto VertexSet::first() const -> int
    {
        for (size_t w = 0 ; w < _words.size() ; ++w)
            if (_words[w])
                return int(w * 64) + std::countr_zero(_words[w]);
        return -1;
    }

    auto VertexSet::members() const -> vector<int>
    {
        vector<int> result;
        for_each([&] (int v) { result.push_back(v); });
        return result;
    }

    auto VertexSet::operator&= (const VertexSet & other) -> VertexSet &
    {
        for (size_t w = 0 ; w < _words.size() ; ++w)
            _words[w] &= other._words[w];
        return *this;
    }

    auto VertexSet::operator|= (const VertexSet & other) -> VertexSet &
    {
        for (size_t w = 0 ; w < _words.size() ; ++w)
            _words[w] |= other._words[w];
        return *this;
    }

    auto VertexSet::operator-= (const VertexSet & other) -> VertexSet &
    {
        for (size_t w = 0 ; w < _words.size() ; ++w)
            _words[w] &= ~other._words[w];
        return *this;
    }

    auto operator& (VertexSet a, const VertexSet & b) -> VertexSet { return a &= b; }
    auto operator| (VertexSet a, const VertexSet & b) -> VertexSet { return a |= b; }
    auto operator- (VertexSet a, const VertexSet & b) -> VertexSet { return a -= b; }

    Graph::Graph(int order)
    {
        if (order < 0 || order > max_order)
            throw GraphError("order " + to_string(order) + " outside supported range 0.." + to_string(max_order));
        _order = order;
        _words = words_for(order);
        _rows.assign(size_t(order) * size_t(_words), 0);
    }

    auto Graph::neighbours(int v) const -> VertexSet
    {
        return VertexSet::from_words(_order, row(v));
    }

    auto Graph::degree(int v) const -> int
    {
        int d = 0;
        for (auto w : row(v))
            d += std::popcount(w);
        return d;
    }

    auto Graph::edge_count() const -> long
    {
        long total = 0;
        for (int v = 0 ; v < _order ; ++v)
            total += degree(v);
        return total / 2;
    }

    auto Graph::edges() const -> vector<std::pair<int, int>>
    {
        vector<std::pair<int, int>> result;
        for (int u = 0 ; u < _order ; ++u)
            for (int v = u + 1 ; v < _order ; ++v)
                if (adjacent(u, v))
                    result.emplace_back(u, v);
        return result;
    }

    GraphBuilder::GraphBuilder(int order) :
        _graph(order)
    {
    }

    GraphBuilder::GraphBuilder(Graph graph) :
        _graph(std::move(graph))
    {
    }

    auto GraphBuilder::check(int u, int v) const -> void
    {
        if (u < 0 || v < 0 || u >= _graph._order || v >= _graph._order)
            throw GraphError("edge (" + to_string(u) + "," + to_string(v) + ") outside order " + to_string(_graph._order));
        if (u == v)
            throw GraphError("loop at vertex " + to_string(u) + " not allowed in a simple graph");
    }

    auto GraphBuilder::has_edge(int u, int v) const -> bool
    {
        check(u, v);
        return _graph.adjacent(u, v);
    }

    auto GraphBuilder::add_edge(int u, int v) -> GraphBuilder &
    {
        check(u, v);
        auto w = size_t(_graph._words);
        _graph._rows[size_t(u) * w + size_t(v >> 6)] |= uint64_t{1} << (v & 63);
        _graph._rows[size_t(v) * w + size_t(u >> 6)] |= uint64_t{1} << (u & 63);
        return *this;
    }

    auto GraphBuilder::remove_edge(int u, int v) -> GraphBuilder &
    {
        check(u, v);
        auto w = size_t(_graph._words);
        _graph._rows[size_t(u) * w + size_t(v >> 6)] &= ~(uint64_t{1} << (v & 63));
        _graph._rows[size_t(v) * w + size_t(u >> 6)] &= ~(uint64_t{1} << (u & 63));
        return *this;
    }

    auto GraphBuilder::toggle_edge(int u, int v) -> GraphBuilder &
    {
        return has_edge(u, v) ? remove_edge(u, v) : add_edge(u, v);
    }

    auto GraphBuilder::build() && -> Graph
    {
        return std::move(_graph);
    }

    auto GraphBuilder::build() const & -> Graph
    {
        return _graph;
    }

    auto graph_from_edges(int order, std::span<const std::pair<int, int>> edges) -> Graph
    {
        GraphBuilder b(order);
        for (auto [u, v] : edges)
            b.add_edge(u, v);
        return std::move(b).build();
    }

    auto complement(const Graph & g) -> Graph
    {
        int n = g.order();
        GraphBuilder b(n);
        for (int u = 0 ; u < n ; ++u)
            for (int v = u + 1 ; v < n ; ++v)
                if (! g.adjacent(u, v))
                    b.add_edge(u, v);
        return std::move(b).build();
    }

    auto disjoint_union(const Graph & a, const Graph & b) -> Graph
    {
        if (a.order() + b.order() > Graph::max_order)
            throw GraphError("disjoint union of orders " + to_string(a.order()) + " and " + to_string(b.order())
                    + " exceeds capacity " + to_string(Graph::max_order));
        GraphBuilder result(a.order() + b.order());
        for (auto [u, v] : a.edges())
            result.add_edge(u, v);
        for (auto [u, v] : b.edges())
            result.add_edge(a.order() + u, a.order() + v);
        return std::move(result).build();
    }

    auto induced(const Graph & g, const VertexSet & s) -> Graph
    {
        if (s.capacity() > g.order()) {
            int last = -1;
            s.for_each([&] (int v) { last = v; });
            if (last >= g.order())
                throw GraphError("vertex " + to_string(last) + " outside graph of order " + to_string(g.order()));
        }
        auto members = s.members();
        GraphBuilder b(int(members.size()));
        for (size_t i = 0 ; i < members.size() ; ++i)
            for (size_t j = i + 1 ; j < members.size() ; ++j)
                if (g.adjacent(members[i], members[j]))
                    b.add_edge(int(i), int(j));
        return std::move(b).build();
    }

    auto degree_profile(const Graph & g) -> DegreeProfile
    {
        if (g.order() == 0)
            throw GraphError("degree profile of the empty graph is undefined");
        DegreeProfile p{ g.order(), 0, {} };
        for (int v = 0 ; v < g.order() ; ++v) {
            int d = g.degree(v);
            p.sequence.push_back(d);
            p.min_degree = std::min(p.min_degree, d);
            p.max_degree = std::max(p.max_degree, d);
        }
        std::sort(p.sequence.begin(), p.sequence.end(), std::greater<>());
        return p;
    }

    auto connected_components(const Graph & g) -> vector<VertexSet>
    {
        vector<VertexSet> result;
        VertexSet unseen = VertexSet::full(g.order());
        while (! unseen.empty()) {
            VertexSet component(g.order());
            VertexSet frontier(g.order());
            frontier.insert(unseen.first());
            while (! frontier.empty()) {
                component |= frontier;
                unseen -= frontier;
                VertexSet next(g.order());
                frontier.for_each([&] (int v) { next |= g.neighbours(v); });
                next &= unseen;
                frontier = std::move(next);
            }
            result.push_back(std::move(component));
        }
        return result;
    }

    auto is_connected(const Graph & g) -> bool
    {
        return g.order() == 0 || connected_components(g).size() == 1;
    }

    auto is_tree(const Graph & g) -> bool
    {
        return g.order() >= 1 && g.edge_count() == g.order() - 1 && is_connected(g);
    }

    auto edge_difference(const Graph & a, const Graph & b) -> long
    {
        if (a.order() != b.order())
            throw GraphError("edge difference needs graphs of equal order");
        long diff = 0;
        for (int v = 0 ; v < a.order() ; ++v) {
            auto ra = a.row(v), rb = b.row(v);
            for (size_t w = 0 ; w < ra.size() ; ++w)
                diff += std::popcount(ra[w] ^ rb[w]);
        }
        return diff / 2;
    }
}

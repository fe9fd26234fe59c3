#include <ramsey/families.hh>
#include <ramsey/errors.hh>
#include "overload.hh"

#include <algorithm>
#include <functional>

using std::nullopt;
using std::optional;
using std::string;
using std::vector;

namespace ramsey
{
    using std::to_string;

    namespace
    {
        using detail::Overload;

        auto require(bool condition, const string & what) -> void
        {
            if (! condition)
                throw ParameterError(what);
        }

        auto subscript(int value) -> string
        {
            return value >= 0 && value <= 9 ? to_string(value) : "{" + to_string(value) + "}";
        }

        auto ahu(const vector<vector<int>> & adj, int v, int parent) -> string
        {
            vector<string> children;
            for (int w : adj[v])
                if (w != parent)
                    children.push_back(ahu(adj, w, v));
            std::sort(children.begin(), children.end());
            string s = "(";
            for (auto & c : children)
                s += c;
            return s + ")";
        }
    }

    auto validate(const TreeSpec & spec) -> void
    {
        std::visit(Overload{
            [] (const Star & s) {
                require(s.n >= 2, "Star requires n >= 2 (got n=" + to_string(s.n) + ")");
                require(s.n <= Graph::max_order, "Star order exceeds " + to_string(Graph::max_order));
            },
            [] (const Spider & s) {
                require(s.l >= 1, "Spider requires l >= 1 (got l=" + to_string(s.l) + ")");
                require(s.m >= 1, "Spider requires m >= 1 (got m=" + to_string(s.m) + ")");
                require(s.n - s.m * s.l >= s.l + 1, "Spider requires n - m*l >= l + 1 (got n=" + to_string(s.n)
                        + ", l=" + to_string(s.l) + ", m=" + to_string(s.m) + ")");
                require(s.n <= Graph::max_order, "Spider order exceeds " + to_string(Graph::max_order));
            },
            [] (const JoinedStars & s) {
                require(s.l >= 2 && s.l <= s.n - 2, "JoinedStars requires 2 <= l <= n - 2 (got n=" + to_string(s.n)
                        + ", l=" + to_string(s.l) + ")");
                require(s.n <= Graph::max_order, "JoinedStars order exceeds " + to_string(Graph::max_order));
            }
        }, spec);
    }

    auto validate(const NamedGraphSpec & spec) -> void
    {
        auto capacity = [] (long order) {
            require(order <= Graph::max_order, "order " + to_string(order) + " exceeds " + to_string(Graph::max_order));
        };
        std::visit(Overload{
            [&] (const Complete & s) { require(s.n >= 0, "Complete requires n >= 0"); capacity(s.n); },
            [&] (const Empty & s) { require(s.n >= 0, "Empty requires n >= 0"); capacity(s.n); },
            [&] (const Path & s) { require(s.n >= 1, "Path requires n >= 1"); capacity(s.n); },
            [&] (const Cycle & s) { require(s.n >= 3, "Cycle requires n >= 3 (got n=" + to_string(s.n) + ")"); capacity(s.n); },
            [&] (const CompleteBipartite & s) {
                require(s.a >= 0 && s.b >= 0, "CompleteBipartite requires a, b >= 0");
                capacity(long(s.a) + s.b);
            },
            [&] (const Wheel & s) { require(s.m >= 3, "Wheel requires m >= 3 (got m=" + to_string(s.m) + ")"); capacity(long(s.m) + 1); }
        }, spec);
    }

    auto tree_order(const TreeSpec & spec) -> int
    {
        return std::visit([] (const auto & s) { return s.n; }, spec);
    }

    auto build_tree(const TreeSpec & spec) -> Graph
    {
        validate(spec);
        return std::visit(Overload{
            [] (const Star & s) {
                GraphBuilder b(s.n);
                for (int v = 1 ; v < s.n ; ++v)
                    b.add_edge(0, v);
                return std::move(b).build();
            },
            [] (const Spider & s) {
                GraphBuilder b(s.n);
                int leaves = s.n - s.m * s.l - 1 - s.l;
                int next = 1;
                for ( ; next <= leaves ; ++next)
                    b.add_edge(0, next);
                for (int leg = 0 ; leg < s.l ; ++leg) {
                    int previous = 0;
                    for (int k = 0 ; k <= s.m ; ++k) {
                        b.add_edge(previous, next);
                        previous = next++;
                    }
                }
                return std::move(b).build();
            },
            [] (const JoinedStars & s) {
                GraphBuilder b(s.n);
                int primary_leaves = std::max(s.l, s.n - s.l) - 1;
                for (int v = 1 ; v <= primary_leaves ; ++v)
                    b.add_edge(0, v);
                int secondary = primary_leaves + 1;
                b.add_edge(0, secondary);
                for (int v = secondary + 1 ; v < s.n ; ++v)
                    b.add_edge(secondary, v);
                return std::move(b).build();
            }
        }, spec);
    }

    auto build_named(const NamedGraphSpec & spec) -> Graph
    {
        validate(spec);
        return std::visit(Overload{
            [] (const Complete & s) {
                GraphBuilder b(s.n);
                for (int u = 0 ; u < s.n ; ++u)
                    for (int v = u + 1 ; v < s.n ; ++v)
                        b.add_edge(u, v);
                return std::move(b).build();
            },
            [] (const Empty & s) { return Graph(s.n); },
            [] (const Path & s) {
                GraphBuilder b(s.n);
                for (int v = 0 ; v + 1 < s.n ; ++v)
                    b.add_edge(v, v + 1);
                return std::move(b).build();
            },
            [] (const Cycle & s) {
                GraphBuilder b(s.n);
                for (int v = 0 ; v < s.n ; ++v)
                    b.add_edge(v, (v + 1) % s.n);
                return std::move(b).build();
            },
            [] (const CompleteBipartite & s) {
                GraphBuilder b(s.a + s.b);
                for (int u = 0 ; u < s.a ; ++u)
                    for (int v = 0 ; v < s.b ; ++v)
                        b.add_edge(u, s.a + v);
                return std::move(b).build();
            },
            [] (const Wheel & s) {
                GraphBuilder b(s.m + 1);
                for (int v = 1 ; v <= s.m ; ++v) {
                    b.add_edge(0, v);
                    b.add_edge(v, v % s.m + 1);
                }
                return std::move(b).build();
            }
        }, spec);
    }

    auto spec_max_degree(const TreeSpec & spec) -> int
    {
        validate(spec);
        return std::visit(Overload{
            [] (const Star & s) { return s.n - 1; },
            [] (const Spider & s) { return std::max(s.n - s.m * s.l - 1, 2); },
            [] (const JoinedStars & s) { return std::max(s.n - s.l, s.l); }
        }, spec);
    }

    auto tree_canonical_string(const Graph & tree) -> string
    {
        if (! is_tree(tree))
            throw GraphError("canonical tree string requested for a non-tree");
        int n = tree.order();
        vector<vector<int>> adj(n);
        vector<int> degree(n);
        for (int v = 0 ; v < n ; ++v) {
            adj[v] = tree.neighbours(v).members();
            degree[v] = int(adj[v].size());
        }

        // peel leaves until one or two centres remain
        vector<int> layer;
        for (int v = 0 ; v < n ; ++v)
            if (degree[v] <= 1)
                layer.push_back(v);
        int remaining = n;
        while (remaining > 2) {
            remaining -= int(layer.size());
            vector<int> next;
            for (int v : layer)
                for (int w : adj[v])
                    if (--degree[w] == 1)
                        next.push_back(w);
            layer = std::move(next);
        }

        string best;
        for (int centre : layer) {
            auto s = ahu(adj, centre, -1);
            if (best.empty() || s < best)
                best = s;
        }
        return best;
    }

    auto classify_tree(const Graph & g) -> optional<TreeSpec>
    {
        if (! is_tree(g))
            throw GraphError("classify_tree requires a tree (connected, order-1 edges)");
        int n = g.order();
        if (n < 2 || degree_profile(g).max_degree < n - 3)
            return nullopt;

        auto target = tree_canonical_string(g);
        const TreeSpec candidates[] = { Star{ n }, Spider{ n, 1, 1 }, Spider{ n, 1, 2 }, Spider{ n, 2, 1 }, JoinedStars{ n, 3 } };
        for (auto & candidate : candidates) {
            try {
                validate(candidate);
            }
            catch (const ParameterError &) {
                continue;
            }
            if (tree_canonical_string(build_tree(candidate)) == target)
                return candidate;
        }
        return nullopt;
    }

    auto to_string(const TreeSpec & spec) -> string
    {
        return std::visit(Overload{
            [] (const Star & s) { return "S_" + subscript(s.n); },
            [] (const Spider & s) { return "S_" + subscript(s.n) + "(" + to_string(s.l) + "," + to_string(s.m) + ")"; },
            [] (const JoinedStars & s) { return "S_" + subscript(s.n) + "(" + to_string(s.l) + ")"; }
        }, spec);
    }

    auto to_string(const NamedGraphSpec & spec) -> string
    {
        return std::visit(Overload{
            [] (const Complete & s) { return "K_" + subscript(s.n); },
            [] (const Empty & s) { return "E_" + subscript(s.n); },
            [] (const Path & s) { return "P_" + subscript(s.n); },
            [] (const Cycle & s) { return "C_" + subscript(s.n); },
            [] (const CompleteBipartite & s) { return "K_{" + to_string(s.a) + "," + to_string(s.b) + "}"; },
            [] (const Wheel & s) { return "W_" + subscript(s.m); }
        }, spec);
    }

    auto to_syntax(const TreeSpec & spec) -> string
    {
        return std::visit(Overload{
            [] (const Star & s) { return "S(" + to_string(s.n) + ")"; },
            [] (const Spider & s) { return "S(" + to_string(s.n) + ";" + to_string(s.l) + "," + to_string(s.m) + ")"; },
            [] (const JoinedStars & s) { return "S(" + to_string(s.n) + ";" + to_string(s.l) + ")"; }
        }, spec);
    }

    auto to_syntax(const NamedGraphSpec & spec) -> string
    {
        return std::visit(Overload{
            [] (const Complete & s) { return "K(" + to_string(s.n) + ")"; },
            [] (const Empty & s) { return "E(" + to_string(s.n) + ")"; },
            [] (const Path & s) { return "P(" + to_string(s.n) + ")"; },
            [] (const Cycle & s) { return "C(" + to_string(s.n) + ")"; },
            [] (const CompleteBipartite & s) { return "K(" + to_string(s.a) + "," + to_string(s.b) + ")"; },
            [] (const Wheel & s) { return "W(" + to_string(s.m) + ")"; }
        }, spec);
    }
}

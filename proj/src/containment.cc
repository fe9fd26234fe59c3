#include <ramsey/containment.hh>
#include <ramsey/errors.hh>
#include "fixed_bits.hh"
#include "overload.hh"

#include <algorithm>
#include <functional>
#include <numeric>

using std::nullopt;
using std::optional;
using std::string;
using std::vector;

namespace ramsey
{
    using std::to_string;

    using detail::FixedBits;
    using detail::Overload;
    using detail::all_bits;
    using detail::and_bits;
    using detail::andnot_bits;
    using detail::row_bits;
    using detail::row_and_count;

    namespace
    {
        auto components_within(const Graph & g, const FixedBits & s, int words) -> vector<FixedBits>
        {
            vector<FixedBits> result;
            FixedBits unseen = s;
            while (unseen.any(words)) {
                FixedBits component, frontier;
                frontier.set(unseen.first(words));
                while (frontier.any(words)) {
                    for (int i = 0 ; i < words ; ++i)
                        component.w[i] |= frontier.w[i];
                    unseen = andnot_bits(unseen, frontier, words);
                    FixedBits next;
                    frontier.for_each(words, [&] (int v) {
                        auto r = g.row(v);
                        for (int i = 0 ; i < words ; ++i)
                            next.w[i] |= r[i];
                    });
                    frontier = and_bits(next, unseen, words);
                }
                result.push_back(component);
            }
            return result;
        }

        /// Greedy (minimum-degree-first) independent set of host[s].
        auto greedy_independent_size(const Graph & g, FixedBits s, int words) -> int
        {
            int size = 0;
            while (s.any(words)) {
                int best = -1, best_degree = 0;
                s.for_each(words, [&] (int v) {
                    int d = row_and_count(g, v, s);
                    if (best == -1 || d < best_degree) {
                        best = v;
                        best_degree = d;
                    }
                });
                ++size;
                s.reset(best);
                s = andnot_bits(s, row_bits(g, best), words);
            }
            return size;
        }

        /// A cycle of length k has independence number floor(k/2), so it needs
        /// at least ceil(k/2) vertices outside any independent set.
        auto independence_allows_cycle(const Graph & g, const FixedBits & s, int words, int k) -> bool
        {
            return s.count(words) - greedy_independent_size(g, s, words) >= (k + 1) / 2;
        }

        class CycleSearch
        {
            private:
                const Graph & _g;
                int _words;
                int _k;
                int _anchor = 0;
                FixedBits _allowed;
                FixedBits _used;
                vector<int> _dist;
                vector<int> _path;

                auto extend() -> bool
                {
                    int length = int(_path.size());
                    int current = _path.back();
                    if (length == _k)
                        return _g.adjacent(current, _anchor) && _path[1] < _path[_k - 1];

                    int remaining_after = _k - (length + 1);
                    FixedBits candidates = andnot_bits(and_bits(row_bits(_g, current), _allowed, _words), _used, _words);
                    bool found = false;
                    candidates.for_each(_words, [&] (int x) {
                        if (found)
                            return;
                        if (_dist[x] < 0 || _dist[x] > remaining_after + 1)
                            return;
                        if (remaining_after == 0 && x < _path[1])
                            return;
                        _path.push_back(x);
                        _used.set(x);
                        if (extend())
                            found = true;
                        else {
                            _used.reset(x);
                            _path.pop_back();
                        }
                    });
                    return found;
                }

                auto compute_distances() -> int
                {
                    std::fill(_dist.begin(), _dist.end(), -1);
                    _dist[_anchor] = 0;
                    vector<int> queue{ _anchor };
                    for (std::size_t head = 0 ; head < queue.size() ; ++head) {
                        int v = queue[head];
                        and_bits(row_bits(_g, v), _allowed, _words).for_each(_words, [&] (int w) {
                            if (_dist[w] < 0) {
                                _dist[w] = _dist[v] + 1;
                                queue.push_back(w);
                            }
                        });
                    }
                    return int(queue.size());
                }

            public:
                CycleSearch(const Graph & g, int k) :
                    _g(g), _words(g.words_per_row()), _k(k), _dist(std::size_t(g.order()), -1)
                {
                }

                auto run(const FixedBits & component) -> optional<vector<int>>
                {
                    FixedBits remaining = component;
                    while (remaining.count(_words) >= _k) {
                        _anchor = remaining.first(_words);
                        _allowed = remaining;
                        if (compute_distances() >= _k) {
                            _used = FixedBits{};
                            _used.set(_anchor);
                            _path.assign(1, _anchor);
                            if (extend())
                                return _path;
                        }
                        remaining.reset(_anchor);
                    }
                    return nullopt;
                }
        };

        auto find_cycle_bits(const Graph & g, const FixedBits & allowed, int k) -> optional<vector<int>>
        {
            int words = g.words_per_row();
            if (allowed.count(words) < k)
                return nullopt;
            for (auto & component : components_within(g, allowed, words)) {
                if (component.count(words) < k || ! independence_allows_cycle(g, component, words, k))
                    continue;
                CycleSearch search(g, k);
                if (auto cycle = search.run(component))
                    return cycle;
            }
            return nullopt;
        }

        /**
         * Spider S_n(l,m): centre v, `legs` paths of `leg_length` vertices
         * each starting in N(v), and `leaves` further neighbours of v. Leg
         * vertices after the first that fall inside N(v) spend slack, the
         * surplus of deg(v) over what the leaves and leg starts need.
         */
        class SpiderSearch
        {
            private:
                const Graph & _g;
                int _words;
                int _legs, _leg_length, _leaves;
                int _centre = 0;
                FixedBits _centre_nbrs;
                FixedBits _outside;   // the centre's component minus N[centre]
                FixedBits _used;
                int _slack = 0;
                vector<int> _chosen;  // leg vertices in leg order, each leg outward

                /// The remaining `r` vertices of the current leg, using at most
                /// `_slack` centre neighbours, must include at least r - slack
                /// vertices outside N[centre]; those split into runs, each a path
                /// inside one component of host[outside], separated by at least
                /// one centre neighbour.
                auto leg_can_finish(int r) -> bool
                {
                    int need_outside = r - _slack;
                    if (need_outside <= 0)
                        return true;
                    FixedBits available = andnot_bits(_outside, _used, _words);
                    if (available.count(_words) < need_outside)
                        return false;
                    vector<int> sizes;
                    for (auto & c : components_within(_g, available, _words))
                        sizes.push_back(c.count(_words));
                    std::sort(sizes.begin(), sizes.end(), std::greater<>());
                    int runs = 0, covered = 0;
                    for (int s : sizes) {
                        if (covered >= need_outside)
                            break;
                        covered += s;
                        ++runs;
                    }
                    return runs - 1 <= r - need_outside;
                }

                auto extend_leg(int leg, int current, int remaining) -> bool
                {
                    if (remaining == 0)
                        return start_leg(leg + 1, _chosen[std::size_t(leg) * _leg_length]);
                    if (! leg_can_finish(remaining))
                        return false;

                    FixedBits candidates = andnot_bits(row_bits(_g, current), _used, _words);
                    // outside N(centre) first: those cost no slack
                    for (int pass = 0 ; pass < 2 ; ++pass) {
                        FixedBits batch = pass == 0 ? andnot_bits(candidates, _centre_nbrs, _words)
                            : and_bits(candidates, _centre_nbrs, _words);
                        if (pass == 1 && _slack == 0)
                            break;
                        bool found = false;
                        batch.for_each(_words, [&] (int x) {
                            if (found)
                                return;
                            int cost = pass;
                            if (cost > _slack)
                                return;
                            _used.set(x);
                            _slack -= cost;
                            _chosen.push_back(x);
                            if (extend_leg(leg, x, remaining - 1))
                                found = true;
                            else {
                                _chosen.pop_back();
                                _slack += cost;
                                _used.reset(x);
                            }
                        });
                        if (found)
                            return true;
                    }
                    return false;
                }

                auto start_leg(int leg, int previous_first) -> bool
                {
                    if (leg == _legs)
                        return true;
                    FixedBits candidates = andnot_bits(_centre_nbrs, _used, _words);
                    bool found = false;
                    candidates.for_each(_words, [&] (int u) {
                        if (found || u <= previous_first)
                            return;
                        _used.set(u);
                        _chosen.push_back(u);
                        if (extend_leg(leg, u, _leg_length - 1))
                            found = true;
                        else {
                            _chosen.pop_back();
                            _used.reset(u);
                        }
                    });
                    return found;
                }

            public:
                SpiderSearch(const Graph & g, int legs, int leg_length, int leaves) :
                    _g(g), _words(g.words_per_row()), _legs(legs), _leg_length(leg_length), _leaves(leaves)
                {
                }

                auto run(const FixedBits & centres) -> optional<Embedding>
                {
                    auto components = components_within(_g, all_bits(_g.order()), _words);
                    optional<Embedding> result;
                    centres.for_each(_words, [&] (int v) {
                        if (result)
                            return;
                        int degree = _g.degree(v);
                        if (degree < _legs + _leaves)
                            return;
                        _centre = v;
                        _centre_nbrs = row_bits(_g, v);
                        auto own = std::find_if(components.begin(), components.end(), [&] (const FixedBits & c) { return c.test(v); });
                        _outside = andnot_bits(*own, _centre_nbrs, _words);
                        _outside.reset(v);
                        _used = FixedBits{};
                        _used.set(v);
                        _slack = degree - _legs - _leaves;
                        _chosen.clear();
                        if (start_leg(0, -1)) {
                            Embedding e;
                            e.image.push_back(v);
                            FixedBits free_nbrs = andnot_bits(_centre_nbrs, _used, _words);
                            free_nbrs.for_each(_words, [&] (int x) {
                                if (int(e.image.size()) <= _leaves)
                                    e.image.push_back(x);
                            });
                            e.image.insert(e.image.end(), _chosen.begin(), _chosen.end());
                            result = std::move(e);
                        }
                    });
                    return result;
                }
        };

        /// Vertices lying in components with at least `least` vertices.
        auto vertices_in_large_components(const Graph & g, int least) -> FixedBits
        {
            int words = g.words_per_row();
            FixedBits result;
            for (auto & c : components_within(g, all_bits(g.order()), words))
                if (c.count(words) >= least)
                    for (int i = 0 ; i < words ; ++i)
                        result.w[i] |= c.w[i];
            return result;
        }

        auto joined_stars(const Graph & g, int primary_leaves, int secondary_leaves, const FixedBits & centres) -> optional<Embedding>
        {
            int words = g.words_per_row();
            optional<Embedding> result;
            centres.for_each(words, [&] (int c1) {
                if (result || g.degree(c1) < primary_leaves + 1)
                    return;
                row_bits(g, c1).for_each(words, [&] (int c2) {
                    if (result || g.degree(c2) < secondary_leaves + 1)
                        return;
                    FixedBits a = row_bits(g, c1), b = row_bits(g, c2);
                    a.reset(c2);
                    b.reset(c1);
                    FixedBits a_only = andnot_bits(a, b, words), b_only = andnot_bits(b, a, words), shared = and_bits(a, b, words);
                    int na = a.count(words), nb = b.count(words), nshared = shared.count(words);
                    if (na < primary_leaves || nb < secondary_leaves || na + nb - nshared < primary_leaves + secondary_leaves)
                        return;

                    vector<int> first, second;
                    a_only.for_each(words, [&] (int x) { if (int(first.size()) < primary_leaves) first.push_back(x); });
                    b_only.for_each(words, [&] (int x) { if (int(second.size()) < secondary_leaves) second.push_back(x); });
                    shared.for_each(words, [&] (int x) {
                        if (int(first.size()) < primary_leaves)
                            first.push_back(x);
                        else if (int(second.size()) < secondary_leaves)
                            second.push_back(x);
                    });

                    Embedding e;
                    e.image.push_back(c1);
                    e.image.insert(e.image.end(), first.begin(), first.end());
                    e.image.push_back(c2);
                    e.image.insert(e.image.end(), second.begin(), second.end());
                    result = std::move(e);
                });
            });
            return result;
        }
    }

    auto is_valid_embedding(const Graph & host, const Graph & pattern, const Embedding & e) -> bool
    {
        if (int(e.image.size()) != pattern.order())
            return false;
        vector<char> seen(std::size_t(host.order()), 0);
        for (int h : e.image) {
            if (h < 0 || h >= host.order() || seen[std::size_t(h)])
                return false;
            seen[std::size_t(h)] = 1;
        }
        for (auto [u, v] : pattern.edges())
            if (! host.adjacent(e.image[std::size_t(u)], e.image[std::size_t(v)]))
                return false;
        return true;
    }

    auto contains_tree(const Graph & host, const TreeSpec & spec) -> optional<Embedding>
    {
        validate(spec);
        int n = tree_order(spec);
        if (host.order() < n)
            return nullopt;
        auto centres = vertices_in_large_components(host, n);

        return std::visit(Overload{
            [&] (const Star & s) -> optional<Embedding> {
                optional<Embedding> result;
                centres.for_each(host.words_per_row(), [&] (int v) {
                    if (result || host.degree(v) < s.n - 1)
                        return;
                    Embedding e{ { v } };
                    host.neighbours(v).for_each([&] (int x) {
                        if (int(e.image.size()) < s.n)
                            e.image.push_back(x);
                    });
                    result = std::move(e);
                });
                return result;
            },
            [&] (const Spider & s) -> optional<Embedding> {
                SpiderSearch search(host, s.l, s.m + 1, s.n - s.m * s.l - 1 - s.l);
                return search.run(centres);
            },
            [&] (const JoinedStars & s) -> optional<Embedding> {
                int primary = std::max(s.l, s.n - s.l) - 1, secondary = std::min(s.l, s.n - s.l) - 1;
                return joined_stars(host, primary, secondary, centres);
            }
        }, spec);
    }

    auto find_cycle_within(const Graph & host, const VertexSet & allowed, int k) -> optional<vector<int>>
    {
        if (k < 3)
            throw ParameterError("cycle length must be at least 3 (got " + to_string(k) + ")");
        FixedBits bits;
        allowed.for_each([&] (int v) {
            if (v >= host.order())
                throw GraphError("vertex " + to_string(v) + " outside host of order " + to_string(host.order()));
            bits.set(v);
        });
        return find_cycle_bits(host, bits, k);
    }

    auto contains_cycle(const Graph & host, int k) -> optional<Embedding>
    {
        if (k < 3)
            throw ParameterError("cycle length must be at least 3 (got " + to_string(k) + ")");
        if (auto cycle = find_cycle_bits(host, all_bits(host.order()), k))
            return Embedding{ std::move(*cycle) };
        return nullopt;
    }

    auto contains_wheel(const Graph & host, int m) -> optional<Embedding>
    {
        if (m < 3)
            throw ParameterError("wheel size must be at least 3 (got " + to_string(m) + ")");
        vector<int> hubs;
        for (int v = 0 ; v < host.order() ; ++v)
            if (host.degree(v) >= m)
                hubs.push_back(v);
        std::stable_sort(hubs.begin(), hubs.end(), [&] (int a, int b) { return host.degree(a) < host.degree(b); });

        for (int h : hubs)
            if (auto cycle = find_cycle_bits(host, row_bits(host, h), m)) {
                Embedding e{ { h } };
                e.image.insert(e.image.end(), cycle->begin(), cycle->end());
                return e;
            }
        return nullopt;
    }

    namespace
    {
        class SubgraphSearch
        {
            private:
                const Graph & _host;
                const Graph & _pattern;
                int _words;
                vector<int> _order;                  // pattern vertices in matching order
                vector<vector<int>> _earlier_nbrs;   // per position: mapped pattern neighbours
                vector<int> _pattern_degree;
                vector<int> _image;
                FixedBits _used;

                auto search(std::size_t position) -> bool
                {
                    if (position == _order.size())
                        return true;
                    int p = _order[position];
                    FixedBits candidates = all_bits(_host.order());
                    for (int q : _earlier_nbrs[position])
                        candidates = and_bits(candidates, row_bits(_host, _image[std::size_t(q)]), _words);
                    candidates = andnot_bits(candidates, _used, _words);

                    bool found = false;
                    candidates.for_each(_words, [&] (int h) {
                        if (found || _host.degree(h) < _pattern_degree[std::size_t(p)])
                            return;
                        _image[std::size_t(p)] = h;
                        _used.set(h);
                        if (search(position + 1))
                            found = true;
                        else
                            _used.reset(h);
                    });
                    return found;
                }

            public:
                SubgraphSearch(const Graph & host, const Graph & pattern) :
                    _host(host), _pattern(pattern), _words(host.words_per_row())
                {
                    int k = pattern.order();
                    _pattern_degree.resize(std::size_t(k));
                    for (int p = 0 ; p < k ; ++p)
                        _pattern_degree[std::size_t(p)] = pattern.degree(p);

                    // greedy connected order: most already-placed neighbours, then degree
                    vector<char> placed(std::size_t(k), 0);
                    vector<int> placed_nbrs(std::size_t(k), 0);
                    for (int step = 0 ; step < k ; ++step) {
                        int best = -1;
                        for (int p = 0 ; p < k ; ++p) {
                            if (placed[std::size_t(p)])
                                continue;
                            if (best == -1
                                    || placed_nbrs[std::size_t(p)] > placed_nbrs[std::size_t(best)]
                                    || (placed_nbrs[std::size_t(p)] == placed_nbrs[std::size_t(best)]
                                        && _pattern_degree[std::size_t(p)] > _pattern_degree[std::size_t(best)]))
                                best = p;
                        }
                        placed[std::size_t(best)] = 1;
                        vector<int> earlier;
                        for (int q : _order)
                            if (pattern.adjacent(best, q))
                                earlier.push_back(q);
                        _order.push_back(best);
                        _earlier_nbrs.push_back(std::move(earlier));
                        for (int q = 0 ; q < k ; ++q)
                            if (pattern.adjacent(best, q))
                                ++placed_nbrs[std::size_t(q)];
                    }
                    _image.assign(std::size_t(k), -1);
                }

                auto run() -> optional<Embedding>
                {
                    if (search(0))
                        return Embedding{ _image };
                    return nullopt;
                }
        };
    }

    auto subgraph_iso(const Graph & host, const Graph & pattern) -> optional<Embedding>
    {
        if (pattern.order() > subgraph_iso_max_pattern)
            throw ParameterError("subgraph_iso pattern order " + to_string(pattern.order()) + " exceeds "
                    + to_string(subgraph_iso_max_pattern));
        if (pattern.order() > host.order() || pattern.edge_count() > host.edge_count())
            return nullopt;
        return SubgraphSearch(host, pattern).run();
    }

    auto to_string(const Embedding & e) -> string
    {
        string s = "[";
        for (std::size_t i = 0 ; i < e.image.size() ; ++i)
            s += (i ? "," : "") + std::to_string(i) + "->" + std::to_string(e.image[i]);
        return s + "]";
    }
}

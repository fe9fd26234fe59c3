#include <ramsey/enumeration.hh>
#include <ramsey/canonical.hh>
#include <ramsey/errors.hh>

#include <algorithm>
#include <bit>
#include <random>
#include <set>

using std::optional;
using std::string;
using std::uint64_t;
using std::vector;

namespace ramsey
{
    using std::to_string;

    namespace
    {
        auto from_rows(const vector<uint64_t> & rows) -> Graph
        {
            int n = int(rows.size());
            GraphBuilder b{ n };
            for (int i = 0 ; i < n ; ++i)
                for (uint64_t r = rows[std::size_t(i)] >> (i + 1) ; r ; r &= r - 1)
                    b.add_edge(i, i + 1 + std::countr_zero(r));
            return std::move(b).build();
        }

        class Augmenter
        {
            private:
                const AugmentationOptions & _options;
                const std::function<auto (const Graph &) -> bool> & _visit;
                std::mt19937_64 _rng;
                long _nodes = 0;
                AugmentationEnd _end = AugmentationEnd::completed;

                /// Vertex invariant: degree, then the sum of neighbour degrees.
                static auto invariants(const vector<uint64_t> & rows) -> vector<int>
                {
                    int n = int(rows.size());
                    vector<int> result(static_cast<std::size_t>(n));
                    for (int v = 0 ; v < n ; ++v) {
                        int sum = 0;
                        for (uint64_t r = rows[std::size_t(v)] ; r ; r &= r - 1)
                            sum += std::popcount(rows[std::size_t(std::countr_zero(r))]);
                        result[std::size_t(v)] = std::popcount(rows[std::size_t(v)]) * n * n + sum;
                    }
                    return result;
                }

                static auto with_marked(vector<int> colours, int v) -> vector<int>
                {
                    int top = *std::max_element(colours.begin(), colours.end());
                    colours[std::size_t(v)] = top + 1;
                    return colours;
                }

                /// The canonical form of the child if it is accepted, that is if
                /// the new (last) vertex lies in the orbit of the canonically
                /// chosen vertex.
                auto accept(const Graph & child, const vector<uint64_t> & rows) -> optional<vector<uint64_t>>
                {
                    int n = int(rows.size()), added = n - 1;
                    auto inv = invariants(rows);
                    int best = *std::max_element(inv.begin(), inv.end());
                    if (inv[std::size_t(added)] != best)
                        return std::nullopt;

                    auto labelling = canonical_labelling(child, inv);
                    int chosen = labelling.order.back();
                    if (chosen != added) {
                        auto orbit = orbits_of(n, labelling.generators);
                        if (orbit[std::size_t(chosen)] != orbit[std::size_t(added)]) {
                            auto a = canonical_labelling(child, with_marked(inv, added));
                            auto b = canonical_labelling(child, with_marked(inv, chosen));
                            if (a.form != b.form)
                                return std::nullopt;
                        }
                    }
                    return std::move(labelling.form);
                }

                auto expand(const vector<uint64_t> & rows) -> bool
                {
                    int k = int(rows.size());
                    if (k == _options.order)
                        return _visit(from_rows(rows));

                    optional<int> cap = _options.max_degree;
                    uint64_t eligible = 0;
                    for (int v = 0 ; v < k ; ++v)
                        if (! cap || std::popcount(rows[std::size_t(v)]) < *cap)
                            eligible |= uint64_t{1} << v;

                    uint64_t subsets = uint64_t{1} << k;
                    uint64_t mask = subsets - 1;
                    uint64_t shuffle = _options.seed ? (_rng() & mask) : 0;

                    std::set<vector<uint64_t>> seen;
                    vector<uint64_t> child_rows(std::size_t(k) + 1);
                    for (uint64_t i = 0 ; i < subsets ; ++i) {
                        uint64_t s = i ^ shuffle;
                        ++_nodes;
                        if (_options.budget_nodes && _nodes > *_options.budget_nodes) {
                            _end = AugmentationEnd::budget_exceeded;
                            return false;
                        }
                        if ((s & ~eligible) || (cap && std::popcount(s) > *cap))
                            continue;

                        for (int v = 0 ; v < k ; ++v)
                            child_rows[std::size_t(v)] = rows[std::size_t(v)] | (((s >> v) & 1) << k);
                        child_rows[std::size_t(k)] = s;
                        Graph child = from_rows(child_rows);

                        auto form = accept(child, child_rows);
                        if (! form || ! seen.insert(std::move(*form)).second)
                            continue;
                        if (_options.predicate && ! _options.predicate(child))
                            continue;
                        if (! expand(child_rows))
                            return false;
                    }
                    return true;
                }

            public:
                Augmenter(const AugmentationOptions & options, const std::function<auto (const Graph &) -> bool> & visit) :
                    _options(options), _visit(visit), _rng(options.seed.value_or(0))
                {
                }

                auto run() -> AugmentationResult
                {
                    vector<uint64_t> root;
                    Graph empty{ GraphBuilder{ 0 }.build() };
                    if (! _options.predicate || _options.predicate(empty))
                        if (! expand(root) && _end == AugmentationEnd::completed)
                            _end = AugmentationEnd::stopped;
                    return AugmentationResult{ _end, _nodes };
                }
        };
    }

    auto augment(const AugmentationOptions & options, const std::function<auto (const Graph &) -> bool> & visit) -> AugmentationResult
    {
        if (options.order < 0 || options.order > canonical_max_order)
            throw ParameterError("augmentation order must lie in 0.." + to_string(canonical_max_order)
                    + " (got " + to_string(options.order) + ")");
        if (options.budget_nodes && *options.budget_nodes < 1)
            throw ParameterError("node budget must be at least 1");
        return Augmenter(options, visit).run();
    }

    auto enumerate_graphs(const EnumFilter & filter, const GraphSink & sink) -> long
    {
        int n = filter.order;
        if (n < 0)
            throw ParameterError("order must be non-negative (got " + to_string(n) + ")");
        for (auto & [name, d] : { std::pair{ "min_degree", filter.min_degree }, std::pair{ "max_degree", filter.max_degree } })
            if (d && (*d < 0 || *d >= std::max(n, 1)))
                throw ParameterError(string(name) + " must lie in 0..order-1 (got " + to_string(*d) + ")");
        if (filter.min_degree && filter.max_degree && *filter.min_degree > *filter.max_degree)
            throw ParameterError("min_degree exceeds max_degree");

        // with a minimum degree, generate complements under a maximum degree
        bool via_complement = filter.min_degree.has_value();
        optional<int> generation_cap = via_complement ? optional<int>{ n - 1 - *filter.min_degree } : filter.max_degree;

        bool sparse = generation_cap && *generation_cap <= 3;
        if (n > (sparse ? enumerate_max_order_sparse : enumerate_max_order))
            throw ParameterError("enumeration supports order at most " + to_string(enumerate_max_order)
                    + ", or " + to_string(enumerate_max_order_sparse) + " when the graph or its complement has maximum degree at most 3 (got "
                    + to_string(n) + ")");

        AugmentationOptions options;
        options.order = n;
        options.max_degree = generation_cap;
        if (! via_complement)
            options.predicate = filter.predicate;

        long emitted = 0;
        augment(options, [&] (const Graph & g) {
            if (via_complement) {
                Graph h = complement(g);
                if (filter.max_degree && n > 0 && degree_profile(h).max_degree > *filter.max_degree)
                    return true;
                if (filter.predicate && ! filter.predicate(h))
                    return true;
                sink(h);
            }
            else
                sink(g);
            ++emitted;
            return true;
        });
        return emitted;
    }

    namespace
    {
        auto partitions(int total, int least, int largest, vector<int> & current, const std::function<auto () -> void> & each) -> void
        {
            if (total == 0) {
                each();
                return;
            }
            for (int part = std::min(total, largest) ; part >= least ; --part) {
                current.push_back(part);
                partitions(total - part, least, part, current, each);
                current.pop_back();
            }
        }
    }

    auto enumerate_union_paths_cycles(int n, const GraphSink & sink) -> long
    {
        if (n < 1)
            throw ParameterError("order must be at least 1 (got " + to_string(n) + ")");
        long emitted = 0;
        vector<int> cycles, paths;
        for (int in_cycles = n ; in_cycles >= 0 ; --in_cycles)
            partitions(in_cycles, 3, in_cycles, cycles, [&] {
                partitions(n - in_cycles, 1, n - in_cycles, paths, [&] {
                    GraphBuilder b{ n };
                    int next = 0;
                    for (int c : cycles) {
                        for (int i = 0 ; i < c ; ++i)
                            b.add_edge(next + i, next + (i + 1) % c);
                        next += c;
                    }
                    for (int p : paths) {
                        for (int i = 0 ; i + 1 < p ; ++i)
                            b.add_edge(next + i, next + i + 1);
                        next += p;
                    }
                    sink(std::move(b).build());
                    ++emitted;
                });
            });
        return emitted;
    }

    auto count_union_paths_cycles(int n) -> long
    {
        if (n < 0)
            throw ParameterError("order must be non-negative (got " + to_string(n) + ")");
        vector<long> coefficient(std::size_t(n) + 1, 0);
        coefficient[0] = 1;
        auto multiply_geometric = [&] (int k) {
            for (int i = k ; i <= n ; ++i)
                coefficient[std::size_t(i)] += coefficient[std::size_t(i - k)];
        };
        for (int k = 1 ; k <= n ; ++k)
            multiply_geometric(k);
        for (int k = 3 ; k <= n ; ++k)
            multiply_geometric(k);
        return coefficient[std::size_t(n)];
    }
}

#include <ramsey/sampling.hh>
#include <ramsey/errors.hh>
#include "overload.hh"

#include <algorithm>
#include <charconv>
#include <random>

using std::string;
using std::uint64_t;
using std::vector;

namespace ramsey
{
    using std::to_string;
    using detail::Overload;

    namespace
    {
        class Draws
        {
            private:
                std::mt19937_64 _engine;

            public:
                explicit Draws(uint64_t seed) : _engine(seed) { }

                /// Uniform in [0, bound).
                auto below(uint64_t bound) -> uint64_t
                {
                    uint64_t limit = ~uint64_t{0} - (~uint64_t{0} % bound);
                    uint64_t x;
                    do
                        x = _engine();
                    while (x >= limit);
                    return x % bound;
                }

                auto chance(double p) -> bool
                {
                    return double(_engine() >> 11) * 0x1.0p-53 < p;
                }
        };

        auto random_clique_union(int order, Draws & draws) -> Graph
        {
            GraphBuilder b{ order };
            int start = 0;
            while (start < order) {
                int size = 1 + int(draws.below(uint64_t(order - start)));
                for (int u = start ; u < start + size ; ++u)
                    for (int v = u + 1 ; v < start + size ; ++v)
                        b.add_edge(u, v);
                start += size;
            }
            return std::move(b).build();
        }

        auto mutate(const WitnessMutation & s, Draws & draws) -> Graph
        {
            const Graph & base = s.bases[draws.below(s.bases.size())];
            int n = base.order();
            GraphBuilder b{ base };
            long pairs = long(n) * (n - 1) / 2;
            int flips = 1 + int(draws.below(uint64_t(std::min<long>(s.max_flips, pairs))));
            vector<std::pair<int, int>> chosen;
            while (int(chosen.size()) < flips) {
                int u = int(draws.below(uint64_t(n))), v = int(draws.below(uint64_t(n)));
                if (u == v)
                    continue;
                auto key = std::minmax(u, v);
                if (std::find(chosen.begin(), chosen.end(), std::pair{ key.first, key.second }) != chosen.end())
                    continue;
                chosen.emplace_back(key.first, key.second);
                b.toggle_edge(u, v);
            }
            return std::move(b).build();
        }

        auto sparse(int order, double p, Draws & draws) -> Graph
        {
            GraphBuilder b{ order };
            for (int u = 0 ; u < order ; ++u)
                for (int v = u + 1 ; v < order ; ++v)
                    if (draws.chance(p))
                        b.add_edge(u, v);
            return std::move(b).build();
        }

        auto clique_blocks(int order, Draws & draws) -> Graph
        {
            Graph result = GraphBuilder{ 0 }.build();
            int remaining = order;
            while (remaining > 0) {
                int size = 1 + int(draws.below(uint64_t(remaining)));
                Graph block = draws.chance(0.5) ? complement(random_clique_union(size, draws)) : complement(GraphBuilder{ size }.build());
                result = disjoint_union(result, block);
                remaining -= size;
            }
            return result;
        }
    }

    auto parse_sampling_strategy(const string & text) -> SamplingStrategy
    {
        if (text == "union-of-cliques-random")
            return UnionOfCliquesRandom{};
        const string prefix = "sparse-random:";
        if (text.rfind(prefix, 0) == 0) {
            double p = 0;
            auto tail = text.substr(prefix.size());
            auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), p);
            if (ec != std::errc{} || ptr != tail.data() + tail.size() || p < 0 || p > 1)
                throw ParameterError("sparse-random probability must be a number in [0,1] (got '" + tail + "')");
            return SparseRandom{ p };
        }
        throw ParameterError("unknown sampling strategy '" + text
                + "' (expected sparse-random:<p>, union-of-cliques-random, or witness mutation with bases)");
    }

    auto to_string(const SamplingStrategy & s) -> string
    {
        return std::visit(Overload{
            [] (const WitnessMutation & w) { return "witness-mutation(k=" + to_string(w.max_flips) + ",bases=" + to_string(w.bases.size()) + ")"; },
            [] (const SparseRandom & r) { return "sparse-random(p=" + to_string(r.p) + ")"; },
            [] (const UnionOfCliquesRandom &) { return string{ "union-of-cliques-random" }; }
        }, s);
    }

    auto sample_adversarial(int order, const SamplingStrategy & strategy, uint64_t seed, long count, const GraphSink & sink) -> void
    {
        if (order < 0 || order > Graph::max_order)
            throw ParameterError("sample order must lie in 0.." + to_string(Graph::max_order) + " (got " + to_string(order) + ")");
        if (count < 0)
            throw ParameterError("sample count must be non-negative (got " + to_string(count) + ")");
        if (auto w = std::get_if<WitnessMutation>(&strategy)) {
            if (w->bases.empty())
                throw ParameterError("witness mutation needs at least one base graph");
            if (w->max_flips < 1)
                throw ParameterError("witness mutation needs max_flips >= 1 (got " + to_string(w->max_flips) + ")");
            for (auto & b : w->bases)
                if (b.order() != order)
                    throw ParameterError("mutation base of order " + to_string(b.order()) + " does not match sample order " + to_string(order));
            if (order < 2)
                throw ParameterError("witness mutation needs order at least 2");
        }
        if (auto r = std::get_if<SparseRandom>(&strategy); r && (r->p < 0 || r->p > 1))
            throw ParameterError("sparse-random probability must lie in [0,1]");

        Draws draws(seed);
        for (long i = 0 ; i < count ; ++i)
            sink(std::visit(Overload{
                [&] (const WitnessMutation & w) { return mutate(w, draws); },
                [&] (const SparseRandom & r) { return sparse(order, r.p, draws); },
                [&] (const UnionOfCliquesRandom &) { return clique_blocks(order, draws); }
            }, strategy));
    }
}

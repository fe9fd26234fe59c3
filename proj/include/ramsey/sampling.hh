#ifndef RAMSEY_SAMPLING_HH
#define RAMSEY_SAMPLING_HH

#include <ramsey/enumeration.hh>
#include <ramsey/graph.hh>

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace ramsey
{
    /// Flip between 1 and max_flips distinct vertex pairs of a base graph,
    /// the base being drawn uniformly from `bases` (all of the sampled order).
    struct WitnessMutation
    {
        std::vector<Graph> bases;
        int max_flips = 2;
    };

    /// Each pair independently adjacent with probability p.
    struct SparseRandom
    {
        double p = 0.1;
    };

    /// Random split of the vertices into blocks; each block is a clique or,
    /// with probability 1/2, the complement of a random union of cliques.
    struct UnionOfCliquesRandom
    {
    };

    using SamplingStrategy = std::variant<WitnessMutation, SparseRandom, UnionOfCliquesRandom>;

    /// Parses "sparse-random:<p>" or "union-of-cliques-random"; witness
    /// mutation needs bases and is built directly.
    auto parse_sampling_strategy(const std::string & text) -> SamplingStrategy;

    auto to_string(const SamplingStrategy & s) -> std::string;

    /**
     * Exactly `count` graphs of the given order, fully determined by the
     * seed. Random draws come from a 64-bit Mersenne Twister with bounded
     * integers taken by rejection, so streams agree across platforms and
     * standard libraries.
     */
    auto sample_adversarial(int order, const SamplingStrategy & strategy, std::uint64_t seed, long count,
            const GraphSink & sink) -> void;
}

#endif

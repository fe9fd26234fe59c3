#ifndef RAMSEY_VERIFY_HH
#define RAMSEY_VERIFY_HH

#include <ramsey/catalog.hh>
#include <ramsey/containment.hh>
#include <ramsey/families.hh>
#include <ramsey/graph.hh>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ramsey
{
    /// F is (T, W_m)-good when F contains no T and its complement no W_m.
    struct GoodnessReport
    {
        int order = 0;
        std::optional<Embedding> tree_embedding;    // in F
        std::optional<Embedding> wheel_embedding;   // in the complement of F
        bool is_good = false;
    };

    auto is_good(const Graph & f, const TreeSpec & tree, int wheel_m) -> GoodnessReport;

    /// (chromatic - 1)(largest component - 1) + 1
    auto chvatal_harary(long largest_component, long chromatic) -> long;

    struct BoundCertificate
    {
        std::string claim_id;
        std::string theorem;
        std::string tree;            // instantiated, e.g. S_9(2,1)
        ClaimParams params;
        ClaimKind kind = ClaimKind::exact;
        long claimed_value = 0;
        std::string recipe_tag;      // "", "as-written" or "corrected"
        std::string recipe;          // algebraic notation
        std::string witness_graph6;
        GoodnessReport goodness;
        bool order_matches = false;  // witness order == claimed value - 1
        std::optional<long> implied_bound;   // order + 1, when good

        auto passed() const -> bool { return goodness.is_good && order_matches; }
    };

    /**
     * Elaborates each witness recipe of the claim at p and checks goodness
     * and order. One certificate per recipe (two for the n = 2 (mod m/2)
     * construction). For exact claims this certifies the lower side only.
     * Throws PreconditionError if the claim does not apply at p or carries
     * no witness.
     */
    auto verify_claim(const RamseyClaim & claim, const ClaimParams & p, bool enforce_minimum = true) -> std::vector<BoundCertificate>;

    enum class RecipeSelection { corrected, literal, both };

    struct ClaimRun
    {
        const RamseyClaim * claim = nullptr;
        ClaimParams params;
        bool enforce_minimum = true;
    };

    /// Certificates for every run, ordered by run then recipe, filtered by
    /// recipe tag. Runs are independent and spread over `jobs` threads.
    auto run_claims(const std::vector<ClaimRun> & runs, RecipeSelection selection, unsigned jobs) -> std::vector<BoundCertificate>;

    struct InjectedCheck
    {
        std::string label;
        std::string graph6;
        bool hypothesis = false;
        bool conclusion = false;
    };

    /// Outcome of a lemma, corollary or pancyclicity sweep.
    struct SweepReport
    {
        std::string name;
        int n = 0;
        bool in_hypothesis = true;
        std::optional<std::uint64_t> seed;
        long examined = 0;
        long hypothesis_hits = 0;
        long mutation_hits = 0;              // sampled sweeps: hits drawn by witness mutation
        long skipped = 0;
        long allowed_exceptions = 0;
        long counterexamples = 0;
        std::vector<std::string> examples;   // graph6 of the first counterexamples
        std::vector<InjectedCheck> injected;

        auto passed() const -> bool;
    };

    constexpr std::size_t sweep_example_limit = 5;

    /// Every graph of order n with minimum degree >= n-3 (complements of
    /// unions of paths and cycles) must contain S_n(3) and S_n(2,1).
    /// Hypothesis range n >= 6; n = 5 is accepted as a tightness probe.
    auto verify_lemma1(int n) -> SweepReport;

    /// Every graph of order n with minimum degree >= n-4 and maximum degree
    /// >= n-3 must contain S_n(3) and S_n(2,1). Hypothesis range n >= 9;
    /// 5 <= n <= 8 are tightness probes.
    auto verify_lemma3(int n) -> SweepReport;

    /// Sampled check at order 2n: containing S_n(1,1) with a W_8-free
    /// complement forces S_n(1,2), S_n(2,1) and S_n(3). Requires n >= 8.
    auto verify_lemma2_sampled(int n, std::uint64_t seed, long count) -> SweepReport;

    /// Sampled check at order 2n: no S_n(1,1) and a W_8-free complement
    /// force G = G1 u G2 with |G1| = n-1 and G2 (n-3)-regular of order n+1.
    /// Requires odd n >= 7.
    auto verify_cr1(int n, std::uint64_t seed, long count) -> SweepReport;

    /// Graphs on n vertices with minimum degree >= n/2 are pancyclic or
    /// K_{n/2,n/2}. 3 <= n <= 9.
    auto verify_bondy(int n) -> SweepReport;

    /// Whether G splits as G1 u G2, G2 a union of components that are all
    /// (n-3)-regular with n+1 vertices in total, G1 the rest.
    auto has_cr1_structure(const Graph & g, int n) -> bool;

    enum class SearchResult { found, exhausted_space, budget_exceeded };

    struct SearchOutcome
    {
        SearchResult result = SearchResult::exhausted_space;
        std::optional<std::string> witness_graph6;
        long nodes = 0;
    };

    constexpr long default_search_budget = 100'000'000;

    /**
     * Looks for a (tree, W_m)-good graph of the given order by canonical
     * augmentation over graphs that stay tree-free with wheel-free
     * complement (both properties pass to induced subgraphs, so every good
     * graph is reached). The budget counts candidate children examined;
     * the seed permutes child order only.
     */
    auto search_good(const TreeSpec & tree, int wheel_m, int order, long budget_nodes, std::uint64_t seed) -> SearchOutcome;

    auto to_string(SearchResult r) -> std::string;
}

#endif

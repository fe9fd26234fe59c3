#ifndef RAMSEY_CATALOG_HH
#define RAMSEY_CATALOG_HH

#include <ramsey/families.hh>
#include <ramsey/recipe.hh>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace ramsey
{
    /// Instantiation parameters: tree order n, wheel size m and (for the
    /// S_n(1,2t) family) the subdivision half-length t.
    struct ClaimParams
    {
        int n = 0;
        int m = 8;
        int t = 0;

        friend auto operator== (const ClaimParams &, const ClaimParams &) -> bool = default;
    };

    /// value = n_coef*n + half_m_coef*(m/2) + t_coef*t + constant
    struct ValueFormula
    {
        int n_coef = 2;
        int half_m_coef = 0;
        int t_coef = 0;
        int constant = 0;

        auto evaluate(const ClaimParams & p) const -> long;
        auto to_string() const -> std::string;
    };

    enum class ClaimKind { exact, lower_bound };

    enum class Verifiability
    {
        exact_with_witness,      // exact value; witness certifies the lower side
        lower_bound_checkable,   // lower bound with a witness
        recorded_only            // no witness in the source; recorded for reference
    };

    /// How the claim's t parameter is fixed.
    enum class TRule { unused, free, one, half_m_minus_two };

    struct WheelRange
    {
        int fixed_m = 0;    // 0: m is a parameter
        int min_m = 8;      // even m >= min_m when not fixed
    };

    struct NCondition
    {
        int modulus = 0;           // 0: no residue condition
        bool modulus_half_m = false;
        int residue = 0;
        int residue_t_coef = 0;
        std::function<int(const ClaimParams &)> min_n;
        std::string description;

        auto holds(const ClaimParams & p) const -> bool;
        auto residue_holds(const ClaimParams & p) const -> bool;
    };

    struct RamseyClaim
    {
        std::string id;              // e.g. "th3/S_n(2,1)"
        std::string theorem;         // e.g. "th3"
        std::string tree_label;      // e.g. "S_n(2,1)"
        std::function<TreeSpec(const ClaimParams &)> tree;   // empty for tree classes
        WheelRange wheel;
        TRule t_rule = TRule::unused;
        NCondition condition;
        ClaimKind kind = ClaimKind::exact;
        ValueFormula value;
        std::optional<std::string> witness;   // theorem id understood by witness_for
        std::string source;
        Verifiability status = Verifiability::recorded_only;
        std::string note;
    };

    struct TaggedRecipe
    {
        std::string tag;   // "" for ordinary recipes; "as-written" / "corrected" for the n=2 (mod m/2) construction
        RecipeExpr recipe;
    };

    /**
     * The witness construction of the named theorem, instantiated at p.
     * Throws PreconditionError naming the failed residue, parity or range
     * condition. With enforce_minimum=false the theorem's lower limit on n
     * is not enforced (residue and divisibility still are); used for probing
     * outside the stated range.
     */
    auto witness_for(const std::string & theorem, const ClaimParams & p, bool enforce_minimum = true) -> std::vector<TaggedRecipe>;

    auto witness_theorems() -> std::vector<std::string>;

    auto all_claims() -> const std::vector<RamseyClaim> &;
    auto claims_for_theorem(const std::string & theorem) -> std::vector<const RamseyClaim *>;

    /// Parameter vectors for which the claim applies, over the given n and m
    /// ranges (m ignored for fixed-wheel claims; t enumerated per TRule).
    auto claim_instances(const RamseyClaim & claim, int n_min, int n_max, int m_min, int m_max,
            std::optional<int> t_only = std::nullopt, bool enforce_minimum = true) -> std::vector<ClaimParams>;

    /// Checks claim applicability; returns the reason when it does not apply.
    auto claim_precondition_failure(const RamseyClaim & claim, const ClaimParams & p,
            bool enforce_minimum = true) -> std::optional<std::string>;

    auto to_string(Verifiability v) -> std::string;
    auto to_string(ClaimKind k) -> std::string;

    /// One line describing the claim; used for listings and the catalog hash.
    auto describe(const RamseyClaim & claim) -> std::string;

    /// FNV-1a 64-bit hash over every claim description, rendered as hex.
    auto catalog_hash() -> std::string;
}

#endif

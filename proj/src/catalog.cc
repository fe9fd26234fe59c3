#include <ramsey/catalog.hh>
#include <ramsey/errors.hh>

#include <algorithm>
#include <cstdio>

using std::nullopt;
using std::optional;
using std::string;
using std::vector;

namespace ramsey
{
    using std::to_string;

    namespace
    {
        auto mod(long a, long b) -> long
        {
            long r = a % b;
            return r < 0 ? r + b : r;
        }

        auto fail(const string & theorem, const string & why) -> PreconditionError
        {
            return PreconditionError(theorem + ": " + why);
        }

        /// Complement of `block`, disjoint-unioned with K_{n-1}: the shape of
        /// nearly every witness in the catalog.
        auto co_block_with_clique(RecipeExpr block, int n) -> RecipeExpr
        {
            return disjoint(complement_of(std::move(block)), named(Complete{ n - 1 }));
        }

        auto require_even_m(const string & theorem, const ClaimParams & p) -> void
        {
            if (p.m < 8 || p.m % 2 != 0)
                throw fail(theorem, "requires even m >= 8 (got m=" + to_string(p.m) + ")");
        }

        auto require_m8(const string & theorem, const ClaimParams & p) -> void
        {
            if (p.m != 8)
                throw fail(theorem, "is stated for W_8 only (got m=" + to_string(p.m) + ")");
        }

        auto exact_copies(const string & theorem, long numerator, int denominator, const string & what) -> int
        {
            if (numerator < 0)
                throw fail(theorem, "copy count " + what + " is negative");
            if (numerator % denominator != 0)
                throw fail(theorem, "copy count " + what + " is not an integer");
            return int(numerator / denominator);
        }

        auto spider_n_1_2t(const ClaimParams & p) -> TreeSpec { return Spider{ p.n, 1, 2 * p.t }; }

        auto make_claims() -> vector<RamseyClaim>
        {
            vector<RamseyClaim> claims;

            auto fixed = [] (int v) { return [v] (const ClaimParams &) { return v; }; };
            auto s11 = [] (const ClaimParams & p) -> TreeSpec { return Spider{ p.n, 1, 1 }; };
            auto s12 = [] (const ClaimParams & p) -> TreeSpec { return Spider{ p.n, 1, 2 }; };
            auto s21 = [] (const ClaimParams & p) -> TreeSpec { return Spider{ p.n, 2, 1 }; };
            auto s3 = [] (const ClaimParams & p) -> TreeSpec { return JoinedStars{ p.n, 3 }; };
            auto star = [] (const ClaimParams & p) -> TreeSpec { return Star{ p.n }; };

            struct TreeEntry { string label; std::function<TreeSpec(const ClaimParams &)> build; };
            const vector<TreeEntry> delta_n_minus_3 = { { "S_n(1,2)", s12 }, { "S_n(2,1)", s21 }, { "S_n(3)", s3 } };

            auto add = [&] (RamseyClaim c) {
                c.id = c.theorem + "/" + c.tree_label;
                claims.push_back(std::move(c));
            };

            auto w8 = WheelRange{ 8, 8 };
            auto even_m = WheelRange{ 0, 8 };

            add({ .id = "", .theorem = "th1", .tree_label = "S_n(1,1)", .tree = s11, .wheel = w8,
                    .condition = { 2, false, 1, 0, fixed(5), "n odd, n >= 5" },
                    .kind = ClaimKind::exact, .value = { 2, 0, 0, 1 }, .witness = "th1", .source = "original",
                    .status = Verifiability::exact_with_witness, .note = "" });
            add({ .id = "", .theorem = "th2", .tree_label = "S_n(1,1)", .tree = s11, .wheel = w8,
                    .condition = { 2, false, 0, 0, fixed(6), "n even, n >= 6" },
                    .kind = ClaimKind::exact, .value = { 2, 0, 0, 0 }, .witness = "th2", .source = "original",
                    .status = Verifiability::exact_with_witness, .note = "" });
            for (auto & t : delta_n_minus_3)
                add({ .id = "", .theorem = "th3", .tree_label = t.label, .tree = t.build, .wheel = w8,
                        .condition = { 2, false, 0, 0, fixed(8), "n even, n >= 8" },
                        .kind = ClaimKind::exact, .value = { 2, 0, 0, 0 }, .witness = "th3", .source = "original",
                        .status = Verifiability::exact_with_witness, .note = "" });
            add({ .id = "", .theorem = "th4", .tree_label = "S_n(1,2)", .tree = s12, .wheel = w8,
                    .condition = { 4, false, 3, 0, fixed(11), "n = 3 (mod 4), n >= 11" },
                    .kind = ClaimKind::exact, .value = { 2, 0, 0, 1 }, .witness = "th4", .source = "original",
                    .status = Verifiability::exact_with_witness,
                    .note = "theorem statement gives n >= 11, its proof argues for n >= 7" });
            add({ .id = "", .theorem = "th5", .tree_label = "S_n(1,2)", .tree = s12, .wheel = w8,
                    .condition = { 4, false, 1, 0, fixed(9), "n = 1 (mod 4), n >= 9" },
                    .kind = ClaimKind::exact, .value = { 2, 0, 0, 0 }, .witness = "th5", .source = "original",
                    .status = Verifiability::exact_with_witness, .note = "" });
            for (auto & t : vector<TreeEntry>{ { "S_n(2,1)", s21 }, { "S_n(3)", s3 } })
                add({ .id = "", .theorem = "th6", .tree_label = t.label, .tree = t.build, .wheel = w8,
                        .condition = { 2, false, 1, 0, fixed(9), "n odd, n >= 9" },
                        .kind = ClaimKind::exact, .value = { 2, 0, 0, -1 }, .witness = "th6", .source = "original",
                        .status = Verifiability::exact_with_witness, .note = "" });

            add({ .id = "", .theorem = "rsnw8-even", .tree_label = "S_n", .tree = star, .wheel = w8,
                    .condition = { 2, false, 0, 0, fixed(6), "n even, n >= 6" },
                    .kind = ClaimKind::exact, .value = { 2, 0, 0, 2 }, .witness = nullopt, .source = "ZCZ08 (cited)",
                    .status = Verifiability::recorded_only, .note = "used by the S_n(1,1) upper-bound arguments" });
            add({ .id = "", .theorem = "rsnw8-odd", .tree_label = "S_n", .tree = star, .wheel = w8,
                    .condition = { 2, false, 1, 0, fixed(5), "n odd, n >= 5" },
                    .kind = ClaimKind::exact, .value = { 2, 0, 0, 1 }, .witness = nullopt, .source = "ZCC12 (cited)",
                    .status = Verifiability::recorded_only, .note = "used by the S_n(1,1) upper-bound arguments" });

            for (auto & t : delta_n_minus_3)
                add({ .id = "", .theorem = "lb", .tree_label = t.label, .tree = t.build, .wheel = even_m,
                        .condition = { 0, true, 4, 0, fixed(6), "n = 4 (mod m/2), n >= 6" },
                        .kind = ClaimKind::lower_bound, .value = { 2, 1, 0, -4 }, .witness = "lb", .source = "original",
                        .status = Verifiability::lower_bound_checkable,
                        .note = "witness is good for every tree with maximum degree >= n-3" });
            for (auto & t : delta_n_minus_3)
                add({ .id = "", .theorem = "n2variant", .tree_label = t.label, .tree = t.build, .wheel = even_m,
                        .condition = { 0, true, 2, 0, [] (const ClaimParams & p) { return std::max(6, p.m / 2 + 2); },
                            "n = 2 (mod m/2), n >= max(6, m/2+2)" },
                        .kind = ClaimKind::lower_bound, .value = { 2, 1, 0, -4 }, .witness = "n2variant", .source = "original",
                        .status = Verifiability::lower_bound_checkable,
                        .note = "construction as written has order 2n+m-5; the corrected copy count (2n-4-m)/m gives 2n+m/2-5" });

            add({ .id = "", .theorem = "rsn2t", .tree_label = "S_n(1,2t)", .tree = spider_n_1_2t, .wheel = even_m, .t_rule = TRule::free,
                    .condition = { 0, true, 2, 1, [] (const ClaimParams & p) { return std::max(6, 2 * p.t + 2); },
                        "n = t+2 (mod m/2), 1 <= t <= m/2-2, n >= max(6, 2t+2)" },
                    .kind = ClaimKind::lower_bound, .value = { 2, 1, -1, -2 }, .witness = "rsn2t", .source = "original",
                    .status = Verifiability::lower_bound_checkable, .note = "" });
            add({ .id = "", .theorem = "cor-rsn2t", .tree_label = "S_n(1,2)", .tree = s12, .wheel = even_m, .t_rule = TRule::one,
                    .condition = { 0, true, 3, 0, fixed(6), "n = 3 (mod m/2), n >= 6" },
                    .kind = ClaimKind::lower_bound, .value = { 2, 1, 0, -3 }, .witness = "rsn2t", .source = "original",
                    .status = Verifiability::lower_bound_checkable,
                    .note = "the t = 1 instance of the S_n(1,2t) bound" });
            add({ .id = "", .theorem = "cor-delta", .tree_label = "S_n(1,m-4)", .tree = spider_n_1_2t, .wheel = even_m,
                    .t_rule = TRule::half_m_minus_two,
                    .condition = { 0, true, 0, 0, [] (const ClaimParams & p) { return std::max(6, p.m - 2); },
                        "n = 0 (mod m/2), n >= max(6, m-2)" },
                    .kind = ClaimKind::lower_bound, .value = { 2, 0, 0, 0 }, .witness = "rsn2t", .source = "original",
                    .status = Verifiability::lower_bound_checkable,
                    .note = "maximum degree n-m+3; shows the small-degree condition of the conjecture cannot be relaxed" });

            add({ .id = "", .theorem = "czz04", .tree_label = "S_n(1,1)", .tree = s11, .wheel = WheelRange{ 0, 4 },
                    .condition = { 0, true, 3, 0, [] (const ClaimParams & p) { return p.m + 3; }, "n = km/2+3, k >= 2" },
                    .kind = ClaimKind::lower_bound, .value = { 2, 1, 0, -3 }, .witness = nullopt, .source = "CZZ04 (cited)",
                    .status = Verifiability::recorded_only, .note = "no construction given here" });
            add({ .id = "", .theorem = "conjecture", .tree_label = "T_n, max degree <= n-m+2", .tree = {}, .wheel = WheelRange{ 0, 4 },
                    .condition = { 0, false, 0, 0, [] (const ClaimParams & p) { return p.m + 1; }, "n > m >= 4, m even" },
                    .kind = ClaimKind::exact, .value = { 2, 0, 0, -1 }, .witness = nullopt, .source = "conjecture",
                    .status = Verifiability::recorded_only, .note = "not decidable by finite checking" });
            return claims;
        }
    }

    auto ValueFormula::evaluate(const ClaimParams & p) const -> long
    {
        return long(n_coef) * p.n + long(half_m_coef) * (p.m / 2) + long(t_coef) * p.t + constant;
    }

    auto ValueFormula::to_string() const -> string
    {
        string s = (n_coef == 1 ? "" : std::to_string(n_coef)) + "n";
        auto term = [&] (int coef, const string & symbol) {
            if (coef == 0)
                return;
            s += coef > 0 ? "+" : "-";
            if (std::abs(coef) != 1)
                s += std::to_string(std::abs(coef));
            s += symbol;
        };
        term(half_m_coef, "m/2");
        term(t_coef, "t");
        if (constant != 0)
            s += (constant > 0 ? "+" : "-") + std::to_string(std::abs(constant));
        return s;
    }

    auto NCondition::residue_holds(const ClaimParams & p) const -> bool
    {
        long modulus_value = modulus_half_m ? p.m / 2 : modulus;
        if (modulus_value == 0)
            return true;
        return mod(p.n, modulus_value) == mod(residue + long(residue_t_coef) * p.t, modulus_value);
    }

    auto NCondition::holds(const ClaimParams & p) const -> bool
    {
        return residue_holds(p) && (! min_n || p.n >= min_n(p));
    }

    auto claim_precondition_failure(const RamseyClaim & claim, const ClaimParams & p, bool enforce_minimum) -> optional<string>
    {
        if (claim.wheel.fixed_m != 0 && p.m != claim.wheel.fixed_m)
            return claim.id + " is stated for m=" + to_string(claim.wheel.fixed_m);
        if (claim.wheel.fixed_m == 0 && (p.m < claim.wheel.min_m || p.m % 2 != 0))
            return claim.id + " requires even m >= " + to_string(claim.wheel.min_m);
        switch (claim.t_rule) {
            case TRule::unused:
                break;
            case TRule::free:
                if (p.t < 1 || p.t > p.m / 2 - 2)
                    return claim.id + " requires 1 <= t <= m/2-2";
                break;
            case TRule::one:
                if (p.t != 1)
                    return claim.id + " fixes t = 1";
                break;
            case TRule::half_m_minus_two:
                if (p.t != p.m / 2 - 2)
                    return claim.id + " fixes t = m/2-2";
                break;
        }
        if (! claim.condition.residue_holds(p) || (enforce_minimum && claim.condition.min_n && p.n < claim.condition.min_n(p)))
            return claim.id + " requires " + claim.condition.description + " (got n=" + to_string(p.n) + ")";
        return nullopt;
    }

    auto witness_theorems() -> vector<string>
    {
        return { "th1", "th2", "th3", "th4", "th5", "th6", "lb", "n2variant", "rsn2t" };
    }

    auto witness_for(const string & theorem, const ClaimParams & p, bool enforce_minimum) -> vector<TaggedRecipe>
    {
        int n = p.n;
        auto minimum = [&] (int least, const string & what) {
            if (enforce_minimum && n < least)
                throw fail(theorem, "requires " + what + " (got n=" + to_string(n) + ")");
            if (n < 2)
                throw fail(theorem, "requires n >= 2");
        };
        auto K4 = named(Complete{ 4 });

        if (theorem == "th1") {
            require_m8(theorem, p);
            if (n % 2 == 0)
                throw fail(theorem, "requires odd n (got n=" + to_string(n) + ")");
            minimum(5, "n >= 5");
            if (n % 4 == 3)
                return { { "", co_block_with_clique(copies((n + 1) / 4, K4), n) } };
            return { { "", co_block_with_clique(disjoint(named(CompleteBipartite{ 3, 3 }), copies((n - 5) / 4, K4)), n) } };
        }
        if (theorem == "th2") {
            require_m8(theorem, p);
            if (n % 2 != 0)
                throw fail(theorem, "requires even n (got n=" + to_string(n) + ")");
            minimum(6, "n >= 6");
            if (n == 8)
                return { { "", co_block_with_clique(copies(2, K4), n) } };
            return { { "", co_block_with_clique(named(Cycle{ n }), n) } };
        }
        if (theorem == "th3") {
            require_m8(theorem, p);
            if (n % 2 != 0)
                throw fail(theorem, "requires even n (got n=" + to_string(n) + ")");
            minimum(8, "n >= 8");
            if (n % 4 == 0)
                return { { "", co_block_with_clique(copies(n / 4, K4), n) } };
            return { { "", co_block_with_clique(disjoint(named(CompleteBipartite{ 3, 3 }), copies((n - 6) / 4, K4)), n) } };
        }
        if (theorem == "th4") {
            require_m8(theorem, p);
            if (mod(n, 4) != 3)
                throw fail(theorem, "requires n = 3 (mod 4) (got n=" + to_string(n) + ")");
            minimum(11, "n >= 11");
            return { { "", co_block_with_clique(copies((n + 1) / 4, K4), n) } };
        }
        if (theorem == "th5") {
            require_m8(theorem, p);
            if (mod(n, 4) != 1)
                throw fail(theorem, "requires n = 1 (mod 4) (got n=" + to_string(n) + ")");
            minimum(9, "n >= 9");
            if (n < 9)
                throw fail(theorem, "copy count (n-9)/4 is negative");
            return { { "", co_block_with_clique(disjoint(copies(3, named(Cycle{ 3 })), copies((n - 9) / 4, K4)), n) } };
        }
        if (theorem == "th6") {
            require_m8(theorem, p);
            if (n % 2 == 0)
                throw fail(theorem, "requires odd n (got n=" + to_string(n) + ")");
            minimum(9, "n >= 9");
            return { { "", copies(2, named(Complete{ n - 1 })) } };
        }

        require_even_m(theorem, p);
        int half = p.m / 2;
        auto Khalf = named(Complete{ half });

        if (theorem == "lb") {
            if (mod(n, half) != mod(4, half))
                throw fail(theorem, "requires n = 4 (mod m/2) (got n=" + to_string(n) + ", m=" + to_string(p.m) + ")");
            minimum(6, "n >= 6");
            int k = exact_copies(theorem, 2L * n + p.m - 8, p.m, "(2n+m-8)/m");
            return { { "", co_block_with_clique(copies(k, Khalf), n) } };
        }
        if (theorem == "n2variant") {
            if (mod(n, half) != mod(2, half))
                throw fail(theorem, "requires n = 2 (mod m/2) (got n=" + to_string(n) + ", m=" + to_string(p.m) + ")");
            minimum(std::max(6, half + 2), "n >= max(6, m/2+2)");
            int literal = exact_copies(theorem, 2L * n - 4, p.m, "(2n-4)/m");
            int corrected = exact_copies(theorem, 2L * n - 4 - p.m, p.m, "(2n-4-m)/m");
            auto bipartite = named(CompleteBipartite{ half - 1, half - 1 });
            return {
                { "as-written", co_block_with_clique(disjoint(bipartite, copies(literal, Khalf)), n) },
                { "corrected", co_block_with_clique(disjoint(bipartite, copies(corrected, Khalf)), n) }
            };
        }
        if (theorem == "rsn2t") {
            if (p.t < 1 || p.t > half - 2)
                throw fail(theorem, "requires 1 <= t <= m/2-2 (got t=" + to_string(p.t) + ")");
            if (mod(n, half) != mod(p.t + 2, half))
                throw fail(theorem, "requires n = t+2 (mod m/2) (got n=" + to_string(n) + ", m=" + to_string(p.m)
                        + ", t=" + to_string(p.t) + ")");
            minimum(std::max(6, 2 * p.t + 2), "n >= max(6, 2t+2)");
            int k = exact_copies(theorem, 2L * n + p.m - 2L * p.t - 4, p.m, "(2n+m-2t-4)/m");
            return { { "", co_block_with_clique(copies(k, Khalf), n) } };
        }

        throw PreconditionError("unknown witness theorem '" + theorem + "'");
    }

    auto all_claims() -> const vector<RamseyClaim> &
    {
        static const vector<RamseyClaim> claims = make_claims();
        return claims;
    }

    auto claims_for_theorem(const string & theorem) -> vector<const RamseyClaim *>
    {
        vector<const RamseyClaim *> result;
        for (auto & c : all_claims())
            if (c.theorem == theorem || c.id == theorem)
                result.push_back(&c);
        return result;
    }

    auto claim_instances(const RamseyClaim & claim, int n_min, int n_max, int m_min, int m_max,
            optional<int> t_only, bool enforce_minimum) -> vector<ClaimParams>
    {
        vector<int> ms;
        if (claim.wheel.fixed_m != 0)
            ms.push_back(claim.wheel.fixed_m);
        else
            for (int m = std::max(m_min, claim.wheel.min_m) ; m <= m_max ; ++m)
                if (m % 2 == 0)
                    ms.push_back(m);

        vector<ClaimParams> result;
        for (int m : ms) {
            vector<int> ts;
            switch (claim.t_rule) {
                case TRule::unused: ts = { 0 }; break;
                case TRule::one: ts = { 1 }; break;
                case TRule::half_m_minus_two: ts = { m / 2 - 2 }; break;
                case TRule::free:
                    for (int t = 1 ; t <= m / 2 - 2 ; ++t)
                        ts.push_back(t);
                    break;
            }
            for (int t : ts) {
                if (t_only && t != *t_only)
                    continue;
                for (int n = n_min ; n <= n_max ; ++n) {
                    ClaimParams p{ n, m, t };
                    if (! claim_precondition_failure(claim, p, enforce_minimum))
                        result.push_back(p);
                }
            }
        }
        return result;
    }

    auto to_string(Verifiability v) -> string
    {
        switch (v) {
            case Verifiability::exact_with_witness: return "exact-with-witness";
            case Verifiability::lower_bound_checkable: return "lower-bound-checkable";
            case Verifiability::recorded_only: return "recorded-only";
        }
        return "?";
    }

    auto to_string(ClaimKind k) -> string
    {
        return k == ClaimKind::exact ? "exact" : "lower-bound";
    }

    auto describe(const RamseyClaim & claim) -> string
    {
        string wheel = claim.wheel.fixed_m != 0 ? "W_" + to_string(claim.wheel.fixed_m)
            : "W_m (m even, m >= " + to_string(claim.wheel.min_m) + ")";
        string relation = claim.kind == ClaimKind::exact ? " = " : " >= ";
        return claim.id + ": R(" + claim.tree_label + ", " + wheel + ")" + relation + claim.value.to_string()
            + " for " + claim.condition.description
            + "; witness " + (claim.witness ? *claim.witness : string("none"))
            + "; " + to_string(claim.status) + "; source " + claim.source
            + (claim.note.empty() ? "" : "; note: " + claim.note);
    }

    auto catalog_hash() -> string
    {
        std::uint64_t h = 14695981039346656037ull;
        for (auto & c : all_claims())
            for (char ch : describe(c) + "\n") {
                h ^= static_cast<unsigned char>(ch);
                h *= 1099511628211ull;
            }
        char buffer[17];
        std::snprintf(buffer, sizeof(buffer), "%016llx", static_cast<unsigned long long>(h));
        return buffer;
    }
}

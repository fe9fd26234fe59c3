#include <ramsey/report.hh>

#include <json.hpp>

#include <cstdio>
#include <sstream>

using nlohmann::json;
using std::optional;
using std::string;
using std::vector;

namespace ramsey
{
    using std::to_string;

    namespace
    {
        auto embedding_json(const optional<Embedding> & e) -> json
        {
            if (! e)
                return nullptr;
            return e->image;
        }

        auto params_json(const ClaimParams & p) -> json
        {
            return json{ { "n", p.n }, { "m", p.m }, { "t", p.t } };
        }

        auto pad(const string & s, std::size_t width) -> string
        {
            return s.size() >= width ? s : s + string(width - s.size(), ' ');
        }
    }

    auto tool_version() -> string
    {
        return "0.1.0";
    }

    auto params_string(const ClaimParams & p) -> string
    {
        string s = "n=" + to_string(p.n) + " m=" + to_string(p.m);
        if (p.t)
            s += " t=" + to_string(p.t);
        return s;
    }

    auto header_record(const string & command) -> string
    {
        return json{
            { "record", "header" },
            { "tool", "ramsey-wb" },
            { "version", tool_version() },
            { "catalog_hash", catalog_hash() },
            { "command", command }
        }.dump();
    }

    auto certificate_record(const BoundCertificate & c, optional<double> elapsed_ms) -> string
    {
        json j{
            { "record", "certificate" },
            { "claim", c.claim_id },
            { "theorem", c.theorem },
            { "tree", c.tree },
            { "params", params_json(c.params) },
            { "kind", to_string(c.kind) },
            { "claimed_value", c.claimed_value },
            { "recipe", c.recipe },
            { "recipe_tag", c.recipe_tag },
            { "witness_graph6", c.witness_graph6 },
            { "order", c.goodness.order },
            { "order_matches", c.order_matches },
            { "tree_embedding", embedding_json(c.goodness.tree_embedding) },
            { "complement_wheel_embedding", embedding_json(c.goodness.wheel_embedding) },
            { "is_good", c.goodness.is_good },
            { "implied_bound", c.implied_bound ? json(*c.implied_bound) : json(nullptr) },
            { "passed", c.passed() }
        };
        if (elapsed_ms)
            j["elapsed_ms"] = *elapsed_ms;
        return j.dump();
    }

    auto sweep_record(const SweepReport & r, optional<double> elapsed_ms) -> string
    {
        json injected = json::array();
        for (auto & i : r.injected)
            injected.push_back(json{ { "label", i.label }, { "graph6", i.graph6 }, { "hypothesis", i.hypothesis }, { "conclusion", i.conclusion } });
        json j{
            { "record", "sweep" },
            { "name", r.name },
            { "n", r.n },
            { "in_hypothesis", r.in_hypothesis },
            { "seed", r.seed ? json(*r.seed) : json(nullptr) },
            { "examined", r.examined },
            { "hypothesis_hits", r.hypothesis_hits },
            { "mutation_hits", r.mutation_hits },
            { "skipped", r.skipped },
            { "allowed_exceptions", r.allowed_exceptions },
            { "counterexamples", r.counterexamples },
            { "examples", r.examples },
            { "injected", injected },
            { "passed", r.passed() }
        };
        if (elapsed_ms)
            j["elapsed_ms"] = *elapsed_ms;
        return j.dump();
    }

    auto claim_record(const RamseyClaim & claim) -> string
    {
        return json{
            { "record", "claim" },
            { "claim", claim.id },
            { "theorem", claim.theorem },
            { "tree", claim.tree_label },
            { "condition", claim.condition.description },
            { "kind", to_string(claim.kind) },
            { "value", claim.value.to_string() },
            { "witness", claim.witness ? json(*claim.witness) : json(nullptr) },
            { "source", claim.source },
            { "status", to_string(claim.status) },
            { "note", claim.note }
        }.dump();
    }

    auto search_record(const TreeSpec & tree, int wheel_m, int order, long budget, std::uint64_t seed, const SearchOutcome & outcome) -> string
    {
        return json{
            { "record", "search" },
            { "tree", to_string(tree) },
            { "wheel_m", wheel_m },
            { "order", order },
            { "budget", budget },
            { "seed", seed },
            { "result", to_string(outcome.result) },
            { "witness_graph6", outcome.witness_graph6 ? json(*outcome.witness_graph6) : json(nullptr) },
            { "nodes", outcome.nodes }
        }.dump();
    }

    auto certificate_table(const vector<BoundCertificate> & certificates) -> string
    {
        std::ostringstream out;
        out << pad("claim", 22) << pad("params", 16) << pad("tree", 14) << pad("recipe", 12)
            << pad("order", 7) << pad("claimed", 9) << pad("bound", 7) << "status\n";
        for (auto & c : certificates) {
            string bound = c.implied_bound ? (c.kind == ClaimKind::exact ? "" : ">=") + to_string(*c.implied_bound) : "-";
            string status = c.passed() ? "ok" : ! c.goodness.is_good
                ? (c.goodness.tree_embedding ? "FAIL tree " + to_string(*c.goodness.tree_embedding)
                        : "FAIL wheel " + to_string(*c.goodness.wheel_embedding))
                : "FAIL order";
            out << pad(c.claim_id, 22) << pad(params_string(c.params), 16) << pad(c.tree, 14)
                << pad(c.recipe_tag.empty() ? "-" : c.recipe_tag, 12) << pad(to_string(c.goodness.order), 7)
                << pad(to_string(c.claimed_value), 9) << pad(bound, 7) << status << "\n";
        }
        return out.str();
    }

    auto sweep_table(const vector<SweepReport> & reports) -> string
    {
        std::ostringstream out;
        out << pad("sweep", 9) << pad("n", 4) << pad("range", 18) << pad("examined", 10) << pad("hits", 9)
            << pad("allowed", 9) << pad("counter", 9) << "status\n";
        for (auto & r : reports) {
            out << pad(r.name, 9) << pad(to_string(r.n), 4) << pad(r.in_hypothesis ? "in hypothesis" : "out of hypothesis", 18)
                << pad(to_string(r.examined), 10) << pad(to_string(r.hypothesis_hits), 9)
                << pad(to_string(r.allowed_exceptions), 9) << pad(to_string(r.counterexamples), 9)
                << (r.passed() ? "ok" : "FINDING");
            for (auto & e : r.examples)
                out << " " << e;
            out << "\n";
        }
        return out.str();
    }
}

#include <ramsey/catalog.hh>
#include <ramsey/containment.hh>
#include <ramsey/enumeration.hh>
#include <ramsey/errors.hh>
#include <ramsey/families.hh>
#include <ramsey/graph6.hh>
#include <ramsey/parallel.hh>
#include <ramsey/report.hh>
#include <ramsey/spec_syntax.hh>
#include <ramsey/verify.hh>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

using namespace ramsey;

using std::cerr;
using std::optional;
using std::string;
using std::vector;

namespace
{
    constexpr int exit_pass = 0, exit_finding = 1, exit_usage = 2;

    struct Range
    {
        int low = 0, high = 0;
    };

    auto parse_range(const string & text, const string & flag) -> Range
    {
        auto parse_int = [&] (const string & s) {
            std::size_t used = 0;
            int value = 0;
            try {
                value = std::stoi(s, &used);
            }
            catch (const std::exception &) {
                used = 0;
            }
            if (s.empty() || used != s.size())
                throw ParameterError(flag + " expects an integer or a range a..b (got '" + text + "')");
            return value;
        };
        auto dots = text.find("..");
        Range r;
        if (dots == string::npos)
            r.low = r.high = parse_int(text);
        else {
            r.low = parse_int(text.substr(0, dots));
            r.high = parse_int(text.substr(dots + 2));
        }
        if (r.low > r.high)
            throw ParameterError(flag + " range is empty (" + text + ")");
        return r;
    }

    /// "g6:<graph6>", a named graph such as K(9) or W(8), a tree spec, or a
    /// file whose first line is graph6.
    auto load_graph(const string & text) -> Graph
    {
        if (text.rfind("g6:", 0) == 0)
            return graph6_decode(text.substr(3));
        try {
            auto spec = parse_spec(text);
            if (auto tree = std::get_if<TreeSpec>(&spec))
                return build_tree(*tree);
            return build_named(std::get<NamedGraphSpec>(spec));
        }
        catch (const ParameterError &) {
            if (! std::filesystem::is_regular_file(text))
                throw;
        }
        std::ifstream in(text);
        string line;
        std::getline(in, line);
        return graph6_decode(line);
    }

    class Output
    {
        private:
            std::ofstream _file;
            bool _jsonl;

        public:
            Output(const string & path, const string & format) :
                _jsonl(format == "jsonl")
            {
                if (! path.empty()) {
                    _file.open(path);
                    if (! _file)
                        throw ParameterError("cannot open output file '" + path + "'");
                }
            }

            auto jsonl() const -> bool { return _jsonl; }

            auto stream() -> std::ostream & { return _file.is_open() ? _file : std::cout; }
    };

    struct Common
    {
        string out, format = "text";
        std::uint64_t seed = 0;
        optional<unsigned> jobs;
        bool timings = false;
    };

    auto add_common(CLI::App * app, Common & c, bool with_seed) -> void
    {
        app->add_option("--out", c.out, "Write the report to this file instead of stdout");
        app->add_option("--format", c.format, "Report format")->check(CLI::IsMember({ "text", "jsonl" }));
        app->add_option("--jobs", c.jobs, "Worker threads (default: RAMSEY_WB_JOBS, else all cores)")->check(CLI::PositiveNumber);
        app->add_flag("--timings", c.timings, "Include elapsed times in records (breaks byte-reproducibility)");
        if (with_seed)
            app->add_option("--seed", c.seed, "Random seed");
    }

    auto elapsed_since(std::chrono::steady_clock::time_point start) -> double
    {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }

    struct VerifyArgs
    {
        Common common;
        vector<string> theorems;
        bool all = false, literal = false, corrected = false, ignore_minimum = false;
        string n, m;
        optional<int> t, max_n;
    };

    auto cmd_verify(const VerifyArgs & a, const string & command) -> int
    {
        if (a.theorems.empty() && ! a.all)
            throw ParameterError("verify needs --theorem or --all");
        if (a.literal && a.corrected)
            throw ParameterError("--literal and --corrected are exclusive");

        vector<const RamseyClaim *> claims;
        if (a.all)
            for (auto & c : all_claims())
                claims.push_back(&c);
        for (auto & t : a.theorems) {
            auto found = claims_for_theorem(t);
            if (found.empty())
                throw ParameterError("unknown theorem or claim id '" + t + "'");
            for (auto c : found)
                if (std::find(claims.begin(), claims.end(), c) == claims.end())
                    claims.push_back(c);
        }

        Range n = a.n.empty() ? Range{ 5, a.max_n.value_or(25) } : parse_range(a.n, "--n");
        if (a.max_n)
            n.high = std::min(n.high, *a.max_n);
        Range m = a.m.empty() ? Range{ 8, 14 } : parse_range(a.m, "--m");

        vector<ClaimRun> runs;
        vector<const RamseyClaim *> recorded;
        for (auto c : claims) {
            if (! c->witness) {
                recorded.push_back(c);
                continue;
            }
            for (auto & p : claim_instances(*c, n.low, n.high, m.low, m.high, a.t))
                runs.push_back(ClaimRun{ c, p, true });
            if (a.ignore_minimum)
                for (auto & p : claim_instances(*c, n.low, n.high, m.low, m.high, a.t, false))
                    if (claim_precondition_failure(*c, p))
                        runs.push_back(ClaimRun{ c, p, false });
        }
        if (runs.empty() && recorded.empty())
            throw ParameterError("no parameter values in range satisfy the selected claims' conditions");

        auto selection = a.literal ? RecipeSelection::literal : RecipeSelection::corrected;
        auto start = std::chrono::steady_clock::now();
        auto certificates = run_claims(runs, selection, a.common.jobs.value_or(default_jobs()));
        double elapsed = elapsed_since(start);

        Output out(a.common.out, a.common.format);
        bool all_passed = true;
        for (auto & c : certificates)
            all_passed = all_passed && c.passed();
        if (out.jsonl()) {
            out.stream() << header_record(command) << "\n";
            for (auto & c : certificates)
                out.stream() << certificate_record(c) << "\n";
            for (auto c : recorded)
                out.stream() << claim_record(*c) << "\n";
        }
        else {
            out.stream() << "ramsey-wb " << tool_version() << "  catalog " << catalog_hash() << "\n";
            out.stream() << certificate_table(certificates);
            for (auto c : recorded)
                out.stream() << "recorded only: " << describe(*c) << "\n";
            out.stream() << certificates.size() << " certificates, " << (all_passed ? "all passed" : "FINDINGS present") << "\n";
        }
        if (a.common.timings)
            cerr << "elapsed_ms " << elapsed << "\n";
        return all_passed ? exit_pass : exit_finding;
    }

    struct LemmaArgs
    {
        Common common;
        string lemma, lemma_option, n;
        long count = 10000;
    };

    auto cmd_lemma(const LemmaArgs & a, const string & command) -> int
    {
        string id = a.lemma_option.empty() ? a.lemma : a.lemma_option;
        if (id.empty())
            throw ParameterError("lemma id required (1, 2, 3, cr1 or bondy)");
        if (a.n.empty())
            throw ParameterError("--n is required");
        Range n = parse_range(a.n, "--n");

        vector<SweepReport> reports;
        vector<double> times;
        for (int k = n.low ; k <= n.high ; ++k) {
            auto start = std::chrono::steady_clock::now();
            if (id == "1")
                reports.push_back(verify_lemma1(k));
            else if (id == "2")
                reports.push_back(verify_lemma2_sampled(k, a.common.seed, a.count));
            else if (id == "3")
                reports.push_back(verify_lemma3(k));
            else if (id == "cr1") {
                if (k % 2 == 0 && n.low != n.high)
                    continue;
                reports.push_back(verify_cr1(k, a.common.seed, a.count));
            }
            else if (id == "bondy")
                reports.push_back(verify_bondy(k));
            else
                throw ParameterError("unknown lemma id '" + id + "' (expected 1, 2, 3, cr1 or bondy)");
            times.push_back(elapsed_since(start));
        }

        Output out(a.common.out, a.common.format);
        // counterexamples below the hypothesis range are probes, not findings
        bool finding = false;
        for (auto & r : reports)
            if (r.in_hypothesis && ! r.passed())
                finding = true;
        if (out.jsonl()) {
            out.stream() << header_record(command) << "\n";
            for (std::size_t i = 0 ; i < reports.size() ; ++i)
                out.stream() << sweep_record(reports[i], a.common.timings ? optional<double>{ times[i] } : std::nullopt) << "\n";
        }
        else
            out.stream() << sweep_table(reports);
        return finding ? exit_finding : exit_pass;
    }

    struct EnumerateArgs
    {
        Common common;
        int order = 0;
        optional<int> min_degree, max_degree;
        bool paths_cycles = false;
    };

    auto cmd_enumerate(const EnumerateArgs & a) -> int
    {
        Output out(a.common.out, "text");
        auto sink = [&] (const Graph & g) { out.stream() << graph6_encode(g) << "\n"; };
        if (a.paths_cycles)
            enumerate_union_paths_cycles(a.order, sink);
        else
            enumerate_graphs(EnumFilter{ a.order, a.min_degree, a.max_degree, {} }, sink);
        return exit_pass;
    }

    struct ContainsArgs
    {
        Common common;
        string host, pattern;
    };

    auto cmd_contains(const ContainsArgs & a) -> int
    {
        Graph host = load_graph(a.host);
        auto spec = parse_spec(a.pattern);
        optional<Embedding> e;
        string kind;
        if (auto tree = std::get_if<TreeSpec>(&spec)) {
            e = contains_tree(host, *tree);
            kind = "tree " + to_string(*tree);
        }
        else {
            auto named = std::get<NamedGraphSpec>(spec);
            kind = to_string(named);
            if (auto w = std::get_if<Wheel>(&named))
                e = contains_wheel(host, w->m);
            else if (auto c = std::get_if<Cycle>(&named))
                e = contains_cycle(host, c->n);
            else
                e = subgraph_iso(host, build_named(named));
        }

        Output out(a.common.out, a.common.format);
        if (out.jsonl()) {
            nlohmann::json j{ { "record", "contains" }, { "host_graph6", graph6_encode(host) }, { "pattern", kind },
                { "present", e.has_value() }, { "embedding", e ? nlohmann::json(e->image) : nlohmann::json(nullptr) } };
            out.stream() << j.dump() << "\n";
        }
        else if (e) {
            out.stream() << "present " << kind << " " << to_string(*e) << "\n";
            if (std::holds_alternative<NamedGraphSpec>(spec) && std::holds_alternative<Wheel>(std::get<NamedGraphSpec>(spec))) {
                out.stream() << "hub " << e->image[0] << " cycle";
                for (std::size_t i = 1 ; i < e->image.size() ; ++i)
                    out.stream() << " " << e->image[i];
                out.stream() << "\n";
            }
        }
        else
            out.stream() << "absent " << kind << "\n";
        return exit_pass;
    }

    struct SearchArgs
    {
        Common common;
        string tree;
        int m = 8, order = 0;
        long budget = default_search_budget;
    };

    auto cmd_search(const SearchArgs & a, const string & command) -> int
    {
        TreeSpec tree = parse_tree_spec(a.tree);
        auto outcome = search_good(tree, a.m, a.order, a.budget, a.common.seed);
        Output out(a.common.out, a.common.format);
        if (out.jsonl())
            out.stream() << header_record(command) << "\n" << search_record(tree, a.m, a.order, a.budget, a.common.seed, outcome) << "\n";
        else {
            out.stream() << to_string(outcome.result) << " after " << outcome.nodes << " nodes";
            if (outcome.witness_graph6)
                out.stream() << ": " << *outcome.witness_graph6;
            out.stream() << "\n";
        }
        return exit_pass;
    }

    auto cmd_classify(const string & graph, const Common & common) -> int
    {
        Graph g = load_graph(graph);
        if (! is_tree(g))
            throw ParameterError("input graph is not a tree");
        auto spec = classify_tree(g);
        Output out(common.out, common.format);
        if (out.jsonl())
            out.stream() << nlohmann::json{ { "record", "classify" }, { "graph6", graph6_encode(g) },
                { "tree", spec ? nlohmann::json(to_syntax(*spec)) : nlohmann::json(nullptr) } }.dump() << "\n";
        else
            out.stream() << (spec ? to_syntax(*spec) + " " + to_string(*spec) : string{ "not-in-catalog" }) << "\n";
        return exit_pass;
    }
}

auto main(int argc, char * argv[]) -> int
{
    CLI::App app{ "Exact verification workbench for tree versus wheel Ramsey numbers" };
    app.set_version_flag("--version", tool_version());
    app.require_subcommand(1);

    string command;
    for (int i = 1 ; i < argc ; ++i)
        command += (i > 1 ? " " : "") + string(argv[i]);

    VerifyArgs verify_args;
    auto verify = app.add_subcommand("verify", "Elaborate catalog witnesses and check goodness");
    add_common(verify, verify_args.common, false);
    verify->add_option("--theorem", verify_args.theorems, "Theorem or claim id (repeatable)");
    verify->add_flag("--all", verify_args.all, "Every catalog claim");
    verify->add_option("--n", verify_args.n, "Tree order n or range a..b");
    verify->add_option("--m", verify_args.m, "Wheel size m or range a..b (general-m claims)");
    verify->add_option("--t", verify_args.t, "Fix t for S_n(1,2t) claims");
    verify->add_option("--max-n", verify_args.max_n, "Upper cap on n");
    verify->add_flag("--literal", verify_args.literal, "Use the as-written n = 2 (mod m/2) recipe");
    verify->add_flag("--corrected", verify_args.corrected, "Use the corrected n = 2 (mod m/2) recipe (default)");
    verify->add_flag("--ignore-minimum", verify_args.ignore_minimum, "Also probe n below a theorem's stated minimum");

    LemmaArgs lemma_args;
    auto lemma = app.add_subcommand("lemma", "Exhaustive or sampled lemma sweeps");
    add_common(lemma, lemma_args.common, true);
    lemma->add_option("id", lemma_args.lemma, "1, 2, 3, cr1 or bondy");
    lemma->add_option("--lemma", lemma_args.lemma_option, "Same as the positional id");
    lemma->add_option("--n", lemma_args.n, "n or range a..b");
    lemma->add_option("--count", lemma_args.count, "Samples per n for sampled sweeps")->check(CLI::PositiveNumber);

    EnumerateArgs enumerate_args;
    auto enumerate = app.add_subcommand("enumerate", "Write one graph6 line per isomorphism class");
    add_common(enumerate, enumerate_args.common, false);
    enumerate->add_option("--order", enumerate_args.order, "Graph order")->required();
    enumerate->add_option("--min-degree", enumerate_args.min_degree, "Minimum degree");
    enumerate->add_option("--max-degree", enumerate_args.max_degree, "Maximum degree");
    enumerate->add_flag("--paths-cycles", enumerate_args.paths_cycles, "Unions of paths and cycles instead");

    ContainsArgs contains_args;
    auto contains = app.add_subcommand("contains", "Decide whether a host contains a pattern");
    add_common(contains, contains_args.common, false);
    contains->add_option("--host", contains_args.host, "g6:<graph6>, a named graph such as K(9), or a graph6 file")->required();
    contains->add_option("--pattern", contains_args.pattern, "Tree spec S(...), W(m), C(k) or another named graph")->required();

    SearchArgs search_args;
    auto search = app.add_subcommand("search", "Budgeted search for a good graph");
    add_common(search, search_args.common, true);
    search->add_option("--tree", search_args.tree, "Tree spec, e.g. S(5;1,1)")->required();
    search->add_option("--m", search_args.m, "Wheel size");
    search->add_option("--order", search_args.order, "Order of the graph sought")->required();
    search->add_option("--budget", search_args.budget, "Node budget");

    Common classify_common;
    string classify_graph;
    auto classify = app.add_subcommand("classify", "Name a tree within the catalog families");
    add_common(classify, classify_common, false);
    classify->add_option("graph", classify_graph, "g6:<graph6>, a tree spec, or a graph6 file")->required();

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e);
        return code == 0 ? exit_pass : exit_usage;
    }

    try {
        if (verify->parsed())
            return cmd_verify(verify_args, command);
        if (lemma->parsed())
            return cmd_lemma(lemma_args, command);
        if (enumerate->parsed())
            return cmd_enumerate(enumerate_args);
        if (contains->parsed())
            return cmd_contains(contains_args);
        if (search->parsed())
            return cmd_search(search_args, command);
        if (classify->parsed())
            return cmd_classify(classify_graph, classify_common);
    }
    catch (const Graph6ParseError & e) {
        cerr << "error: " << e.what() << " (byte " << e.offset() << ")\n";
        return exit_usage;
    }
    catch (const std::invalid_argument & e) {
        cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}

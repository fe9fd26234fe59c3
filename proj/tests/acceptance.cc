// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <ramsey/catalog.hh>
#include <ramsey/containment.hh>
#include <ramsey/enumeration.hh>
#include <ramsey/families.hh>
#include <ramsey/graph6.hh>
#include <ramsey/report.hh>
#include <ramsey/verify.hh>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

using namespace ramsey;
using std::string;
using std::vector;

namespace
{
    struct Outcome
    {
        bool pass = true;
        string detail;
        string report;   // deterministic record stream, compared by criterion 9
    };

    auto fail(Outcome & o, const string & why) -> void
    {
        if (o.pass)
            o.detail = why;
        o.pass = false;
    }

    auto claims_of(const string & theorem) -> vector<const RamseyClaim *>
    {
        return claims_for_theorem(theorem);
    }

    auto record_all(Outcome & o, const vector<BoundCertificate> & certs) -> void
    {
        for (auto & c : certs)
            o.report += certificate_record(c) + "\n";
    }

    auto witness_suite_m8() -> Outcome
    {
        Outcome o;
        vector<ClaimRun> runs;
        for (const string theorem : { "th1", "th2", "th3", "th4", "th5", "th6" })
            for (auto c : claims_of(theorem))
                for (auto & p : claim_instances(*c, 5, 25, 8, 8))
                    runs.push_back({ c, p, true });
        for (auto c : claims_of("th4"))
            runs.push_back({ c, ClaimParams{ 7, 8, 0 }, false });

        auto certs = run_claims(runs, RecipeSelection::corrected, 1);
        record_all(o, certs);
        for (auto & c : certs)
            if (! c.passed())
                fail(o, c.claim_id + " " + params_string(c.params) + " not certified");
        o.detail = o.pass ? std::to_string(certs.size()) + " certificates, all good at claimed value - 1" : o.detail;
        return o;
    }

    auto smallest(const RamseyClaim & claim, int m, int t, int how_many) -> vector<ClaimParams>
    {
        auto all = claim_instances(claim, 1, 200, m, m, t ? std::optional<int>(t) : std::nullopt);
        if (int(all.size()) > how_many)
            all.resize(std::size_t(how_many));
        return all;
    }

    auto exit_status(const string & command) -> int
    {
        int status = std::system(command.c_str());
        return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    }

    auto witness_suite_general() -> Outcome
    {
        Outcome o;
        long checked = 0;
        for (int m : { 8, 10, 12, 14 }) {
            for (auto c : claims_of("lb")) {
                auto ps = smallest(*c, m, 0, 3);
                if (ps.size() != 3)
                    fail(o, c->id + " has fewer than three instances at m=" + std::to_string(m));
                for (auto & p : ps)
                    for (auto & cert : verify_claim(*c, p)) {
                        o.report += certificate_record(cert) + "\n";
                        ++checked;
                        if (! cert.passed() || cert.implied_bound != 2L * p.n + m / 2 - 4)
                            fail(o, cert.claim_id + " " + params_string(p));
                    }
            }
            for (int t : { 1, 2 })
                for (auto c : claims_of("rsn2t")) {
                    auto ps = smallest(*c, m, t, 3);
                    if (ps.size() != 3)
                        fail(o, c->id + " has fewer than three instances at m=" + std::to_string(m));
                    for (auto & p : ps)
                        for (auto & cert : verify_claim(*c, p)) {
                            o.report += certificate_record(cert) + "\n";
                            ++checked;
                            if (! cert.passed() || cert.implied_bound != 2L * p.n + m / 2 - t - 2)
                                fail(o, cert.claim_id + " " + params_string(p));
                        }
                }
            for (auto c : claims_of("n2variant"))
                for (auto & p : smallest(*c, m, 0, 3))
                    for (auto & cert : verify_claim(*c, p)) {
                        o.report += certificate_record(cert) + "\n";
                        ++checked;
                        if (cert.recipe_tag == "corrected"
                                && (! cert.passed() || cert.goodness.order != 2 * p.n + m / 2 - 5))
                            fail(o, "corrected " + cert.claim_id + " " + params_string(p));
                        if (cert.recipe_tag == "as-written" && cert.goodness.is_good)
                            fail(o, "as-written " + cert.claim_id + " " + params_string(p) + " unexpectedly good");
                    }
        }
        int code = exit_status(string(RAMSEY_WB_EXE) + " verify --theorem n2variant --literal --n 10 --m 8 > /dev/null 2>&1");
        if (code != 1)
            fail(o, "literal recipe run exited with " + std::to_string(code) + ", expected 1");
        if (o.pass)
            o.detail = std::to_string(checked) + " certificates; literal n=2 (mod m/2) recipe fails, exit code 1";
        return o;
    }

    auto random_host(int order, double p, std::mt19937_64 & rng) -> Graph
    {
        GraphBuilder b{ order };
        for (int v = 1 ; v < order ; ++v)
            for (int u = 0 ; u < v ; ++u)
                if (std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p)
                    b.add_edge(u, v);
        return std::move(b).build();
    }

    auto oracle_equivalence() -> Outcome
    {
        Outcome o;
        const vector<std::function<TreeSpec(int)>> families = {
            [] (int n) -> TreeSpec { return Star{ n }; },
            [] (int n) -> TreeSpec { return Spider{ n, 1, 1 }; },
            [] (int n) -> TreeSpec { return Spider{ n, 1, 2 }; },
            [] (int n) -> TreeSpec { return Spider{ n, 2, 1 }; },
            [] (int n) -> TreeSpec { return JoinedStars{ n, 3 }; },
        };
        const double densities[] = { 0.2, 0.5, 0.8 };
        std::mt19937_64 rng(2024);
        long disagreements = 0, present = 0, trials = 0;
        for (auto & family : families)
            for (int i = 0 ; i < 1000 ; ++i) {
                int order = 8 + int(rng() % 5);
                auto host = random_host(order, densities[i % 3], rng);
                int n = 5 + int(rng() % std::uint64_t(order - 4));
                auto spec = family(n);
                auto fast = contains_tree(host, spec);
                auto pattern = build_tree(spec);
                auto slow = subgraph_iso(host, pattern);
                ++trials;
                present += fast.has_value();
                if (fast.has_value() != slow.has_value() || (fast && ! is_valid_embedding(host, pattern, *fast))) {
                    ++disagreements;
                    fail(o, "tree disagreement on " + graph6_encode(host) + " " + to_syntax(spec));
                }
            }

        long wheel_checks = 0, hosts = 0;
        enumerate_graphs(EnumFilter{ .order = 8 }, [&] (const Graph & host) {
            ++hosts;
            for (int m = 4 ; m <= 8 ; ++m) {
                auto pattern = build_named(Wheel{ m });
                auto fast = contains_wheel(host, m);
                auto slow = subgraph_iso(host, pattern);
                ++wheel_checks;
                if (fast.has_value() != slow.has_value() || (fast && ! is_valid_embedding(host, pattern, *fast))) {
                    ++disagreements;
                    fail(o, "wheel disagreement on " + graph6_encode(host) + " m=" + std::to_string(m));
                }
            }
        });
        if (hosts != 12346)
            fail(o, "order-8 corpus has " + std::to_string(hosts) + " graphs");
        std::ostringstream summary;
        summary << "tree trials " << trials << " present " << present << ", wheel checks " << wheel_checks
                << ", disagreements " << disagreements;
        o.report = summary.str() + "\n";
        if (o.pass)
            o.detail = summary.str();
        return o;
    }

    auto sweeps(Outcome & o, const vector<SweepReport> & reports) -> void
    {
        for (auto & r : reports) {
            o.report += sweep_record(r) + "\n";
            if (r.counterexamples)
                fail(o, r.name + " n=" + std::to_string(r.n) + ": " + std::to_string(r.counterexamples) + " counterexamples");
        }
    }

    auto lemma_sweeps() -> Outcome
    {
        Outcome o;
        vector<SweepReport> reports;
        long examined = 0;
        for (int n = 6 ; n <= 9 ; ++n)
            reports.push_back(verify_lemma1(n));
        for (int n = 9 ; n <= 10 ; ++n)
            reports.push_back(verify_lemma3(n));
        for (auto & r : reports)
            examined += r.examined;
        sweeps(o, reports);
        if (o.pass)
            o.detail = std::to_string(examined) + " graphs examined, 0 counterexamples";
        return o;
    }

    auto bondy_sweep() -> Outcome
    {
        Outcome o;
        vector<SweepReport> reports;
        for (int n = 4 ; n <= 9 ; ++n)
            reports.push_back(verify_bondy(n));
        sweeps(o, reports);
        for (auto & r : reports)
            if (r.allowed_exceptions != (r.n % 2 == 0 ? 1 : 0))
                fail(o, "n=" + std::to_string(r.n) + ": " + std::to_string(r.allowed_exceptions) + " balanced bipartite exceptions");
        if (o.pass)
            o.detail = "only K_{n/2,n/2} for even n is non-pancyclic";
        return o;
    }

    auto sampled() -> Outcome
    {
        Outcome o;
        const std::uint64_t seed = 1;
        const long count = 10'000;
        vector<SweepReport> reports{ verify_lemma2_sampled(8, seed, count), verify_cr1(7, seed, count), verify_cr1(9, seed, count) };
        sweeps(o, reports);
        string hits;
        for (auto & r : reports) {
            if (r.hypothesis_hits == 0 || r.mutation_hits == 0)
                fail(o, r.name + " n=" + std::to_string(r.n) + " has no hypothesis hits from witness mutation");
            for (auto & i : r.injected)
                if (i.hypothesis && ! i.conclusion)
                    fail(o, r.name + " injected " + i.label + " fails its conclusion");
            hits += (hits.empty() ? "" : ", ") + r.name + " n=" + std::to_string(r.n) + " hits "
                + std::to_string(r.hypothesis_hits) + " (mutation " + std::to_string(r.mutation_hits) + ")";
        }
        if (o.pass)
            o.detail = hits + ", 0 counterexamples";
        return o;
    }

    auto enumeration_counts() -> Outcome
    {
        Outcome o;
        const long expected[] = { 1, 2, 4, 11, 34, 156, 1044, 12346 };
        for (int n = 1 ; n <= 8 ; ++n) {
            long got = enumerate_graphs(EnumFilter{ .order = n }, [] (const Graph &) { });
            if (got != expected[n - 1])
                fail(o, "order " + std::to_string(n) + ": " + std::to_string(got) + " graphs");
        }
        long round_trips = 0;
        enumerate_graphs(EnumFilter{ .order = 8 }, [&] (const Graph & g) {
            ++round_trips;
            if (graph6_decode(graph6_encode(g)) != g)
                fail(o, "graph6 round trip broke on " + graph6_encode(g));
        });
        if (o.pass)
            o.detail = "1..8 counts match, " + std::to_string(round_trips) + " round trips";
        return o;
    }

    auto upper_bound_probe() -> Outcome
    {
        Outcome o;
        auto ten = search_good(Spider{ 5, 1, 1 }, 8, 10, default_search_budget, 0);
        auto eleven = search_good(Spider{ 5, 1, 1 }, 8, 11, default_search_budget, 0);
        if (ten.result != SearchResult::found)
            fail(o, "order 10: " + to_string(ten.result));
        if (eleven.result == SearchResult::found)
            fail(o, "order 11 returned a good graph " + eleven.witness_graph6.value_or(""));
        if (o.pass)
            o.detail = "order 10 found (" + std::to_string(ten.nodes) + " nodes), order 11 " + to_string(eleven.result)
                + " (" + std::to_string(eleven.nodes) + " nodes)";
        return o;
    }

    struct Criterion
    {
        int number;
        string name;
        double limit_seconds;   // 0: no limit
        std::function<Outcome()> run;
    };

    auto timed(const Criterion & c, double & seconds) -> Outcome
    {
        auto start = std::chrono::steady_clock::now();
        auto o = c.run();
        seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return o;
    }
}

auto main() -> int
{
    const vector<Criterion> criteria = {
        { 1, "witness suite, m=8", 60, witness_suite_m8 },
        { 2, "general-m witness suite", 0, witness_suite_general },
        { 3, "oracle equivalence", 600, oracle_equivalence },
        { 4, "lemma 1 and lemma 3 exhaustive", 600, lemma_sweeps },
        { 5, "pancyclicity sweep", 0, bondy_sweep },
        { 6, "sampled lemma 2 and corollary", 0, sampled },
        { 7, "enumeration counts and graph6", 0, enumeration_counts },
        { 8, "upper-bound consistency probe", 0, upper_bound_probe },
    };

    bool all = true;
    string first_reports;
    for (auto & c : criteria) {
        double seconds = 0;
        auto o = timed(c, seconds);
        if (c.limit_seconds > 0 && seconds >= c.limit_seconds) {
            o.pass = false;
            o.detail = "took " + std::to_string(seconds) + " s, limit " + std::to_string(c.limit_seconds) + " s; " + o.detail;
        }
        if (c.number <= 6)
            first_reports += o.report;
        all = all && o.pass;
        std::printf("criterion %d %s: %s (%.2f s) %s\n", c.number, o.pass ? "PASS" : "FAIL", c.name.c_str(), seconds, o.detail.c_str());
        std::fflush(stdout);
    }

    string second_reports;
    double seconds = 0;
    auto start = std::chrono::steady_clock::now();
    for (auto & c : criteria)
        if (c.number <= 6)
            second_reports += c.run().report;
    seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool same = ! first_reports.empty() && first_reports == second_reports;
    all = all && same;
    std::printf("criterion 9 %s: determinism (%.2f s) %s\n", same ? "PASS" : "FAIL", seconds,
            same ? ("reports of criteria 1-6 byte-identical across two runs, " + std::to_string(first_reports.size()) + " bytes").c_str()
                 : "reports differ between runs");
    return all ? 0 : 1;
}

#include <ramsey/canonical.hh>
#include <ramsey/catalog.hh>
#include <ramsey/containment.hh>
#include <ramsey/enumeration.hh>
#include <ramsey/errors.hh>
#include <ramsey/graph6.hh>
#include <ramsey/recipe.hh>
#include <ramsey/verify.hh>

#include <doctest.h>

#include <string>

using namespace ramsey;
using std::string;

namespace
{
    auto claim(const string & id) -> const RamseyClaim &
    {
        for (auto & c : all_claims())
            if (c.id == id)
                return c;
        FAIL("no claim " << id);
        throw;
    }

    auto k(int n) -> Graph { return build_named(Complete{ n }); }

    auto params_text(const ClaimParams & p) -> string
    {
        return "n=" + std::to_string(p.n) + " m=" + std::to_string(p.m) + " t=" + std::to_string(p.t);
    }
}

TEST_CASE("goodness")
{
    auto r = is_good(disjoint_union(k(8), k(8)), Spider{ 9, 2, 1 }, 8);
    CHECK(r.is_good);
    CHECK(r.order == 16);
    CHECK_FALSE(r.tree_embedding);
    CHECK_FALSE(r.wheel_embedding);

    auto bad = is_good(k(17), Spider{ 9, 2, 1 }, 8);
    CHECK_FALSE(bad.is_good);
    REQUIRE(bad.tree_embedding);
    CHECK(is_valid_embedding(k(17), build_tree(Spider{ 9, 2, 1 }), *bad.tree_embedding));

    auto empty = is_good(Graph(10), Star{ 3 }, 8);
    CHECK_FALSE(empty.is_good);
    CHECK(empty.wheel_embedding);
}

TEST_CASE("chvatal harary bound")
{
    CHECK(chvatal_harary(7, 3) == 13);
    CHECK(chvatal_harary(7, 4) == 19);
    CHECK(chvatal_harary(1, 5) == 1);
    CHECK_THROWS(chvatal_harary(0, 3));
    CHECK_THROWS(chvatal_harary(3, 1));
}

TEST_CASE("claim certificates")
{
    auto th1 = verify_claim(claim("th1/S_n(1,1)"), { .n = 7 });
    REQUIRE(th1.size() == 1);
    CHECK(th1[0].passed());
    CHECK(th1[0].goodness.order == 14);
    CHECK(th1[0].implied_bound == 15);

    auto th5 = verify_claim(claim("th5/S_n(1,2)"), { .n = 9 });
    REQUIRE(th5.size() == 1);
    CHECK(th5[0].passed());
    CHECK(th5[0].goodness.order == 17);
    CHECK(th5[0].implied_bound == 18);

    auto cor = verify_claim(claim("cor-rsn2t/S_n(1,2)"), { .n = 11, .m = 8, .t = 1 });
    REQUIRE(cor.size() == 1);
    CHECK(cor[0].passed());
    CHECK(cor[0].implied_bound == 2 * 11 + 4 - 3);

    auto rs = verify_claim(claim("rsn2t/S_n(1,2t)"), { .n = 11, .m = 8, .t = 1 });
    CHECK(rs[0].passed());
    CHECK(rs[0].goodness.order == 22);
    CHECK(rs[0].implied_bound == 23);
    CHECK(rs[0].tree == "S_{11}(1,2)");

    CHECK_THROWS_AS(verify_claim(claim("th1/S_n(1,1)"), { .n = 8 }), PreconditionError);
    CHECK_THROWS_AS(verify_claim(claim("rsnw8-odd/S_n"), { .n = 7 }), PreconditionError);
}

TEST_CASE("literal n = 2 (mod m/2) recipe fails with an embedding, corrected one passes")
{
    auto certs = verify_claim(claim("n2variant/S_n(2,1)"), { .n = 10, .m = 8 });
    REQUIRE(certs.size() == 2);
    CHECK(certs[0].recipe_tag == "as-written");
    CHECK_FALSE(certs[0].goodness.is_good);
    REQUIRE(certs[0].goodness.tree_embedding);
    auto literal = graph6_decode(certs[0].witness_graph6);
    CHECK(literal.order() == 23);
    CHECK(is_valid_embedding(literal, build_tree(Spider{ 10, 2, 1 }), *certs[0].goodness.tree_embedding));
    CHECK_FALSE(certs[0].implied_bound);

    CHECK(certs[1].recipe_tag == "corrected");
    CHECK(certs[1].passed());
    CHECK(certs[1].goodness.order == 2 * 10 + 4 - 5);
}

TEST_CASE("certificates re-check from their graph6 witness")
{
    long checked = 0;
    for (auto & c : all_claims()) {
        if (! c.witness)
            continue;
        for (auto & p : claim_instances(c, 5, 21, 8, 12))
            for (auto & cert : verify_claim(c, p)) {
                if (cert.recipe_tag == "as-written")
                    continue;
                CHECK_MESSAGE(cert.passed(), cert.claim_id << " " << params_text(p));
                auto again = is_good(graph6_decode(cert.witness_graph6), c.tree(p), p.m);
                CHECK(again.is_good);
                CHECK(again.order == cert.goodness.order);
                if (c.kind == ClaimKind::exact) {
                    CHECK(cert.implied_bound == cert.claimed_value);
                    CHECK(cert.claimed_value >= chvatal_harary(p.n, 3));
                }
                ++checked;
            }
    }
    CHECK(checked > 100);
}

TEST_CASE("run order does not depend on the job count")
{
    std::vector<ClaimRun> runs;
    for (auto c : claims_for_theorem("lb"))
        for (auto & p : claim_instances(*c, 5, 30, 8, 14))
            runs.push_back({ c, p, true });
    auto one = run_claims(runs, RecipeSelection::corrected, 1);
    auto many = run_claims(runs, RecipeSelection::corrected, 4);
    REQUIRE(one.size() == many.size());
    for (std::size_t i = 0 ; i < one.size() ; ++i) {
        CHECK(one[i].claim_id == many[i].claim_id);
        CHECK(one[i].witness_graph6 == many[i].witness_graph6);
    }
}

TEST_CASE("lemma sweeps")
{
    for (int n = 6 ; n <= 8 ; ++n) {
        auto r = verify_lemma1(n);
        CHECK(r.in_hypothesis);
        CHECK(r.counterexamples == 0);
        CHECK(r.examined == count_union_paths_cycles(n));
    }
    auto five = verify_lemma1(5);
    CHECK_FALSE(five.in_hypothesis);
    CHECK(five.counterexamples == 1);
    REQUIRE(five.examples.size() == 1);
    CHECK(are_isomorphic(graph6_decode(five.examples[0]), build_named(Cycle{ 5 })));

    auto l3 = verify_lemma3(9);
    CHECK(l3.in_hypothesis);
    CHECK(l3.counterexamples == 0);
    CHECK(l3.hypothesis_hits > 0);
    CHECK_FALSE(verify_lemma3(8).in_hypothesis);
    CHECK_THROWS(verify_lemma1(4));
    CHECK_THROWS(verify_lemma3(13));
}

TEST_CASE("bondy sweep")
{
    for (int n = 3 ; n <= 8 ; ++n) {
        auto r = verify_bondy(n);
        CHECK(r.counterexamples == 0);
        CHECK(r.allowed_exceptions == (n % 2 == 0 ? 1 : 0));
    }
}

TEST_CASE("corollary structure")
{
    auto w7 = elaborate(witness_for("th1", { .n = 7 })[0].recipe);
    CHECK(has_cr1_structure(w7, 7));
    auto w9 = elaborate(witness_for("th1", { .n = 9 })[0].recipe);
    CHECK(has_cr1_structure(w9, 9));
    CHECK_FALSE(has_cr1_structure(k(14), 7));
    CHECK_THROWS_AS(verify_cr1(8, 0, 10), PreconditionError);
    auto r = verify_cr1(7, 0, 500);
    CHECK(r.counterexamples == 0);
    CHECK(r.hypothesis_hits > 0);
    for (auto & i : r.injected)
        CHECK((! i.hypothesis || i.conclusion));
}

TEST_CASE("sampled lemma 2")
{
    auto r = verify_lemma2_sampled(8, 1, 500);
    CHECK(r.examined >= 500);
    CHECK(r.counterexamples == 0);
    CHECK(r.hypothesis_hits > 0);
    CHECK(r.seed == 1u);
    auto th2 = graph6_encode(elaborate(witness_for("th2", { .n = 8 })[0].recipe));
    bool seen = false;
    for (auto & i : r.injected)
        if (i.graph6 == th2) {
            seen = true;
            CHECK_FALSE(i.hypothesis);
        }
    CHECK(seen);
    CHECK_THROWS(verify_lemma2_sampled(7, 1, 10));
}

TEST_CASE("search for good graphs")
{
    auto found = search_good(Spider{ 5, 1, 1 }, 8, 10, default_search_budget, 0);
    REQUIRE(found.result == SearchResult::found);
    REQUIRE(found.witness_graph6);
    CHECK(is_good(graph6_decode(*found.witness_graph6), Spider{ 5, 1, 1 }, 8).is_good);

    for (std::uint64_t seed : { 0u, 3u }) {
        auto none = search_good(Spider{ 5, 1, 1 }, 8, 11, default_search_budget, seed);
        CHECK(none.result == SearchResult::exhausted_space);
        CHECK_FALSE(none.witness_graph6);
    }

    auto tiny = search_good(Star{ 3 }, 3, 1, 1, 0);
    CHECK(tiny.result == SearchResult::found);

    auto starved = search_good(Spider{ 5, 1, 1 }, 8, 11, 10, 0);
    CHECK(starved.result == SearchResult::budget_exceeded);
    CHECK_THROWS(search_good(Star{ 3 }, 3, 65, 10, 0));
}

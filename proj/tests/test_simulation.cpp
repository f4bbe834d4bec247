#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "encheck/falsify.hpp"
#include "encheck/fixtures.hpp"
#include "encheck/simulation.hpp"

using namespace encheck;

namespace {

const std::vector<sim_kind> all_kinds = {sim_kind::strong_bisim, sim_kind::weak_bisim,
                                         sim_kind::coupled_sim, sim_kind::correspondence_sim};

rel from_names(const transition_system& sys, carrier_kind over,
               const std::vector<std::pair<std::string, std::string>>& pairs) {
    rel r(over, sys.size());
    for (const auto& [a, b] : pairs) r.add(sys.index_of(a), sys.index_of(b));
    return r;
}

bool has_counterexample(const verdict& v, const std::string& kind, const std::string& p,
                        const std::string& q) {
    for (const auto& c : v.counterexamples)
        if (c.kind == kind && c.states == std::vector<std::string>{p, q}) return true;
    return false;
}

} // namespace

TEST_CASE("relation respect on the fixtures") {
    const auto fig3 = fixture("fig3");
    const auto& comb3 = fig3.enc.combined;
    const rel& rcorr = fig3.relations.at("Rcorr");
    for (const std::string barb : {"a", "b", "c"})
        CHECK(relation_respect(rcorr, comb3, {pred_kind::reaches_barb, barb}, pred_mode::respect).holds);
    CHECK(relation_respect(rcorr, comb3, {pred_kind::reaches_barb, ""}, pred_mode::respect).holds);

    const auto fig1 = fixture("fig1");
    const auto& comb1 = fig1.enc.combined;
    const rel pair = from_names(comb1, carrier_kind::combined, {{"s2", "t3"}});
    const auto v = relation_respect(pair, comb1, {pred_kind::divergent, ""}, pred_mode::reflect);
    CHECK_FALSE(v.holds); // t3 diverges, s2 does not
    CHECK(has_counterexample(v, "reflect", "s2", "t3"));

    const rel empty(carrier_kind::combined, comb1.size());
    CHECK(relation_respect(empty, comb1, {pred_kind::reaches_barb, ""}, pred_mode::respect).holds);
}

TEST_CASE("simulation checks on the second fixture") {
    const auto fig2 = fixture("fig2");
    CHECK(is_simulation(sim_kind::weak_bisim, fig2.enc.source, fig2.relations.at("RS")).holds);

    const auto v = is_simulation(sim_kind::weak_bisim, fig2.enc.target, fig2.relations.at("RT"));
    CHECK_FALSE(v.holds);
    // the unmatched challenge is t2 -> t3, seen from (t1, t2) or (t2, t1)
    bool pinned = false;
    for (const auto& c : v.counterexamples)
        if (c.challenge == std::make_pair(std::string("t2"), std::string("t3")) &&
            (c.states == std::vector<std::string>{"t1", "t2"} ||
             c.states == std::vector<std::string>{"t2", "t1"}))
            pinned = true;
    CHECK(pinned);
}

TEST_CASE("the third fixture's relation is a correspondence simulation") {
    const auto fig3 = fixture("fig3");
    const auto& comb = fig3.enc.combined;
    const rel& rcorr = fig3.relations.at("Rcorr");
    CHECK(is_simulation(sim_kind::correspondence_sim, comb, rcorr).holds);
    CHECK(is_simulation_literal(sim_kind::correspondence_sim, comb, rcorr).holds);
    // not a weak bisimulation: t2's branch to t4 cannot be answered by s2
    CHECK_FALSE(is_simulation(sim_kind::weak_bisim, comb, rcorr).holds);
}

TEST_CASE("the empty relation passes every simulation kind") {
    const auto fig3 = fixture("fig3");
    const rel empty(carrier_kind::combined, fig3.enc.combined.size());
    for (sim_kind k : all_kinds) CHECK(is_simulation(k, fig3.enc.combined, empty).holds);
}

TEST_CASE("identity relations pass every simulation kind") {
    const auto fig3 = fixture("fig3");
    const rel id = identity_rel(carrier_kind::combined, fig3.enc.combined.size());
    for (sim_kind k : all_kinds) {
        CHECK(is_simulation(k, fig3.enc.combined, id).holds);
        CHECK(is_simulation_literal(k, fig3.enc.combined, id).holds);
    }
}

TEST_CASE("greatest relation on a step- and barb-free system is full") {
    const auto sys = make_system({"a", "b", "c"}, {}, {}, {});
    for (sim_kind k : all_kinds)
        CHECK(greatest_relation(k, sys, carrier_kind::source, {}) == full_rel(carrier_kind::source, 3));
}

TEST_CASE("greatest correspondence simulation on the first fixture's combined domain") {
    const auto fig1 = fixture("fig1");
    const auto& comb = fig1.enc.combined;
    const rel g = greatest_relation(sim_kind::correspondence_sim, comb, carrier_kind::combined, {});
    CHECK(g.contains(comb.index_of("s1"), comb.index_of("t1")));
    CHECK(g.contains(comb.index_of("s2"), comb.index_of("t3")));
}

TEST_CASE("barb-constrained greatest relations over the third fixture's targets") {
    const auto fig3 = fixture("fig3");
    const auto& tgt = fig3.enc.target;
    const int t2 = tgt.index_of("t2");
    const int t3 = tgt.index_of("t3");

    const std::vector<respect_constraint> respect_barbs = {
        {{pred_kind::reaches_barb, ""}, pred_mode::respect}};
    const std::vector<respect_constraint> preserve_barbs = {
        {{pred_kind::reaches_barb, ""}, pred_mode::preserve}};

    // no barb-respecting correspondence simulation relates t2 and t3, in
    // either constraint mode
    for (const auto& cs : {respect_barbs, preserve_barbs}) {
        const rel g = greatest_relation(sim_kind::correspondence_sim, tgt, carrier_kind::target, cs);
        CHECK_FALSE(g.contains(t2, t3));
        CHECK_FALSE(g.contains(t3, t2));
    }

    // t2 and t3 are coupled similar with mutual barb preservation: both
    // orientations sit in the preservation-constrained greatest coupled
    // simulation, which is how a coupled pair respects barbs
    const rel coupled =
        greatest_relation(sim_kind::coupled_sim, tgt, carrier_kind::target, preserve_barbs);
    CHECK(coupled.contains(t2, t3));
    CHECK(coupled.contains(t3, t2));

    // under a per-pair respect constraint the simulation half of the coupled
    // clauses already rules the pair out: t2 -> t4 has no partner among the
    // derivatives of t3 with the weak barbs {a, b}
    const rel coupled_respect =
        greatest_relation(sim_kind::coupled_sim, tgt, carrier_kind::target, respect_barbs);
    CHECK_FALSE(coupled_respect.contains(t2, t3));
    CHECK_FALSE(coupled_respect.contains(t3, t2));
}

TEST_CASE("relation properties on the fixtures") {
    const auto fig2 = fixture("fig2");
    const auto rs_rep = relation_properties(fig2.relations.at("RS"), fig2.enc.source);
    CHECK(rs_rep.reflexive);
    CHECK(rs_rep.symmetric);
    CHECK(rs_rep.transitive);
    CHECK(rs_rep.equivalence);

    const auto fig1 = fixture("fig1");
    const auto rt_rep = relation_properties(fig1.relations.at("RT"), fig1.enc.target);
    CHECK(rt_rep.preorder);
    CHECK_FALSE(rt_rep.symmetric);

    const rel empty(carrier_kind::source, 3);
    const auto empty_rep = relation_properties(empty, fig2.enc.source);
    CHECK_FALSE(empty_rep.reflexive);
    CHECK(empty_rep.symmetric);
    CHECK(empty_rep.transitive);
}

TEST_CASE("coupled-simulation containment for correspondence simulations") {
    const auto fig3 = fixture("fig3");
    CHECK(lemma5_containment(fig3.enc.combined, fig3.relations.at("Rcorr")).holds);

    const rel id = identity_rel(carrier_kind::combined, fig3.enc.combined.size());
    CHECK(lemma5_containment(fig3.enc.combined, id).holds);

    // precondition gate
    const auto fig2 = fixture("fig2");
    rel not_core(carrier_kind::target, fig2.enc.target.size());
    not_core.add(fig2.enc.target.index_of("t1"), fig2.enc.target.index_of("t2"));
    CHECK_THROWS_WITH_AS(lemma5_containment(fig2.enc.target, not_core),
                         doctest::Contains("E_PRECONDITION"), error);
}

TEST_CASE("greatest relations match the exhaustive oracle on tiny systems") {
    std::mt19937_64 rng(4242);
    const std::vector<std::vector<respect_constraint>> constraint_sets = {
        {},
        {{{pred_kind::reaches_barb, ""}, pred_mode::respect}},
        {{{pred_kind::divergent, ""}, pred_mode::reflect}},
        {{{pred_kind::reaches_barb, ""}, pred_mode::preserve}},
    };
    for (int round = 0; round < 25; ++round) {
        const int n = 2 + static_cast<int>(rng() % 3);
        std::vector<std::string> names;
        for (int i = 0; i < n; ++i) names.push_back("q" + std::to_string(i));
        std::vector<std::pair<std::string, std::string>> steps;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (rng() % 100 < 30)
                    steps.emplace_back(names[static_cast<std::size_t>(a)],
                                       names[static_cast<std::size_t>(b)]);
        std::map<std::string, std::vector<std::string>> barbs;
        for (const auto& name : names)
            if (rng() % 3 == 0) barbs[name] = {"a"};
        const auto sys = make_system(names, steps, barbs, {});
        for (sim_kind k : all_kinds)
            for (const auto& cs : constraint_sets)
                CHECK(greatest_relation(k, sys, carrier_kind::source, cs) ==
                      brute_force_greatest(k, sys, carrier_kind::source, cs));
    }
}

TEST_CASE("enumeration bound") {
    const auto sys = make_system({"a", "b", "c", "d", "e"}, {}, {}, {});
    CHECK_THROWS_WITH_AS(brute_force_greatest(sim_kind::weak_bisim, sys, carrier_kind::source, {}),
                         doctest::Contains("E_TOO_LARGE"), error);
}

TEST_CASE("strong bisimulation oracle example on the second fixture's targets") {
    const auto fig2 = fixture("fig2");
    const rel g = brute_force_greatest(sim_kind::strong_bisim, fig2.enc.target, carrier_kind::target, {});
    CHECK_FALSE(g.contains(fig2.enc.target.index_of("t1"), fig2.enc.target.index_of("t2")));
    CHECK(g == greatest_relation(sim_kind::strong_bisim, fig2.enc.target, carrier_kind::target, {}));
}

TEST_CASE("hierarchy and literal-checker agreement over a generated corpus") {
    gen_config config;
    config.seed = 13;
    const auto stats = run_hierarchy_checks(config, 60);
    CHECK(stats.instances == 60);
    for (const auto& note : stats.notes) CAPTURE(note);
    CHECK(stats.violations == 0);
}

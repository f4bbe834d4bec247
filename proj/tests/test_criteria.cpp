#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "encheck/criteria.hpp"
#include "encheck/fixtures.hpp"
#include "encheck/generate.hpp"
#include "encheck/simulation.hpp"

using namespace encheck;

namespace {

bool mentions(const verdict& v, const std::vector<std::string>& states) {
    for (const auto& c : v.counterexamples)
        if (c.states == states) return true;
    return false;
}

} // namespace

TEST_CASE("divergence reflection on the first fixture") {
    const auto fig1 = fixture("fig1");
    CHECK(divergence_reflection(fig1.enc).holds);

    // removing the s1 loop leaves t1 divergent via t3, breaking reflection at s1
    auto source = make_system({"s1", "s2"}, {{"s1", "s2"}}, {}, {});
    auto target = make_system({"t1", "t2", "t3"}, {{"t1", "t3"}, {"t3", "t3"}}, {}, {});
    const auto enc = make_instance(source, target, {{"s1", "t1"}, {"s2", "t2"}});
    const auto v = divergence_reflection(enc);
    CHECK_FALSE(v.holds);
    CHECK(v.counterexamples.size() == 1);
    CHECK(mentions(v, {"s1", "t1"}));

    const auto empty = make_instance(make_system({}, {}, {}, {}), target, {});
    CHECK(divergence_reflection(empty).holds);
}

TEST_CASE("success sensitiveness") {
    auto agreeing = make_instance(make_system({"s"}, {}, {}, {"s"}),
                                  make_system({"t"}, {}, {}, {"t"}), {{"s", "t"}});
    CHECK(success_sensitiveness(agreeing, strength::reaches).holds);
    CHECK(success_sensitiveness(agreeing, strength::has).holds);

    auto disagreeing = make_instance(make_system({"s"}, {}, {}, {"s"}),
                                     make_system({"t"}, {}, {}, {}), {{"s", "t"}});
    CHECK_FALSE(success_sensitiveness(disagreeing, strength::reaches).holds);

    // the successful source state maps to the middle of a two-step path, so
    // success stays reachable but is no longer immediate
    auto source = make_system({"s", "s'"}, {{"s", "s'"}}, {}, {"s'"});
    auto target = make_system({"t", "u", "v"}, {{"t", "u"}, {"u", "v"}}, {}, {"v"});
    const auto enc = make_instance(source, target, {{"s", "t"}, {"s'", "u"}});
    CHECK(success_sensitiveness(enc, strength::reaches).holds);
    CHECK_FALSE(success_sensitiveness(enc, strength::has).holds);
}

TEST_CASE("barb sensitiveness on the third fixture") {
    const auto fig3 = fixture("fig3");
    CHECK(barb_sensitiveness(fig3.enc, pred_mode::respect, strength::reaches).holds);

    const auto v = barb_sensitiveness(fig3.enc, pred_mode::respect, strength::has);
    CHECK_FALSE(v.holds);
    bool pinned = false;
    for (const auto& c : v.counterexamples)
        if (c.states == std::vector<std::string>{"s2", "t2"} && c.detail == "has-barb=b") pinned = true;
    CHECK(pinned); // s2 has barb b, t2 has none

    auto barbless = make_instance(make_system({"s"}, {}, {}, {}), make_system({"t"}, {}, {}, {}),
                                  {{"s", "t"}});
    for (pred_mode m : {pred_mode::preserve, pred_mode::reflect, pred_mode::respect})
        for (strength s : {strength::has, strength::reaches})
            CHECK(barb_sensitiveness(barbless, m, s).holds);
}

TEST_CASE("full abstraction on the second fixture") {
    const auto fig2 = fixture("fig2");
    CHECK(full_abstraction(fig2.enc, fig2.relations.at("RS"), fig2.relations.at("RT")).holds);

    const rel id_target = identity_rel(carrier_kind::target, fig2.enc.target.size());
    const auto v = full_abstraction(fig2.enc, fig2.relations.at("RS"), id_target);
    CHECK_FALSE(v.holds);
    CHECK(mentions(v, {"s1", "s2"}));

    const auto empty = make_instance(make_system({}, {}, {}, {}),
                                     make_system({"t"}, {}, {}, {}), {});
    CHECK(full_abstraction(empty, rel(carrier_kind::source, 0), identity_rel(carrier_kind::target, 1))
              .holds);
}

TEST_CASE("operational correspondence on the fixtures") {
    const auto fig1 = fixture("fig1");
    CHECK(operational_correspondence(fig1.enc, fig1.relations.at("RT"), oc_variant::standard).holds);
    CHECK(operational_correspondence(fig1.enc, fig1.relations.at("RT"), oc_variant::weak).holds);

    const auto fig2 = fixture("fig2");
    const auto v = operational_correspondence(fig2.enc, fig2.relations.at("RT"), oc_variant::standard);
    CHECK_FALSE(v.holds);
    REQUIRE(v.counterexamples.size() == 1);
    CHECK(v.counterexamples[0].kind == "soundness");
    CHECK(v.counterexamples[0].states == std::vector<std::string>{"s2", "t3"});
    CHECK(v.counterexamples[0].challenge == std::make_pair(std::string("t2"), std::string("t3")));
}

TEST_CASE("surjectivity") {
    const auto fig1 = fixture("fig1");
    const auto v1 = is_surjective(fig1.enc);
    CHECK_FALSE(v1.holds);
    CHECK(mentions(v1, {"t3"}));

    const auto fig3 = fixture("fig3");
    const auto v3 = is_surjective(fig3.enc);
    CHECK_FALSE(v3.holds);
    CHECK(v3.counterexamples.size() == 3); // t3, t4, t5

    auto onto = make_instance(make_system({"s1", "s2"}, {}, {}, {}),
                              make_system({"t"}, {}, {}, {}), {{"s1", "t"}, {"s2", "t"}});
    CHECK(is_surjective(onto).holds);
}

TEST_CASE("verdicts are deterministic across evaluations") {
    const auto fig2 = fixture("fig2");
    const auto a = operational_correspondence(fig2.enc, fig2.relations.at("RT"), oc_variant::standard);
    const auto b = operational_correspondence(fig2.enc, fig2.relations.at("RT"), oc_variant::standard);
    CHECK(a == b);
}

TEST_CASE("full abstraction is insensitive to inverting both relations") {
    gen_config config;
    config.seed = 5;
    for (int i = 0; i < 80; ++i) {
        const auto doc = generate(config, static_cast<std::uint64_t>(i));
        const rel& rs = doc.relations.at("RS");
        const rel& rt = doc.relations.at("RT");
        CHECK(full_abstraction(doc.enc, rs, rt).holds ==
              full_abstraction(doc.enc, rs.inverted(), rt.inverted()).holds);
    }
}

TEST_CASE("bisimulation transfer under full abstraction and correspondence") {
    gen_config config;
    config.seed = 21;
    int transferred = 0;
    for (int i = 0; i < 300; ++i) {
        const auto doc = generate(config, static_cast<std::uint64_t>(i));
        const rel rt = doc.relations.at("RT").closed_refl().closed_sym().closed_trans();
        rel rs(carrier_kind::source, doc.enc.source.size());
        for (int a = 0; a < doc.enc.source.size(); ++a)
            for (int b = 0; b < doc.enc.source.size(); ++b)
                if (rt.contains(doc.enc.mapping[static_cast<std::size_t>(a)],
                                doc.enc.mapping[static_cast<std::size_t>(b)]))
                    rs.add(a, b);
        if (!full_abstraction(doc.enc, rs, rt).holds) continue;
        if (!operational_correspondence(doc.enc, rt, oc_variant::standard).holds) continue;
        if (!is_simulation(sim_kind::weak_bisim, doc.enc.target, rt).holds) continue;
        transferred += 1;
        CHECK(is_simulation(sim_kind::weak_bisim, doc.enc.source, rs).holds);
        if (is_surjective(doc.enc).holds)
            CHECK(is_simulation(sim_kind::weak_bisim, doc.enc.source, rs).holds ==
                  is_simulation(sim_kind::weak_bisim, doc.enc.target, rt).holds);
    }
    CHECK(transferred > 10); // the property must actually fire
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "encheck/fixtures.hpp"
#include "encheck/model.hpp"

using namespace encheck;

namespace {

std::set<std::string> deriv_names(const transition_system& sys, const std::string& from) {
    std::set<std::string> out;
    for (int d : sys.weak_derivatives(sys.index_of(from))) out.insert(sys.name_of(d));
    return out;
}

// walk-based divergence oracle: a walk of length n+1 exists iff a cycle is
// reachable, on an n-state system
bool walk_exists(const transition_system& sys, int s, int depth) {
    if (depth == 0) return true;
    for (int n : sys.succ[static_cast<std::size_t>(s)])
        if (walk_exists(sys, n, depth - 1)) return true;
    return false;
}

transition_system random_small_system(std::mt19937_64& rng) {
    const int n = 1 + static_cast<int>(rng() % 6);
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("q" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> steps;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (rng() % 100 < 28)
                steps.emplace_back(names[static_cast<std::size_t>(a)], names[static_cast<std::size_t>(b)]);
    return make_system(names, steps, {}, {});
}

} // namespace

TEST_CASE("instance validation accepts the first fixture") {
    const auto doc = fixture("fig1");
    CHECK(doc.enc.source.size() == 2);
    CHECK(doc.enc.target.size() == 3);
    CHECK(doc.enc.combined.size() == 5);
}

TEST_CASE("shared state names across languages are rejected") {
    auto source = make_system({"x", "s1"}, {}, {}, {});
    auto target = make_system({"x"}, {}, {}, {});
    CHECK_THROWS_WITH_AS(make_instance(source, target, {{"x", "x"}, {"s1", "x"}}),
                         doctest::Contains("E_DISJOINT"), error);
}

TEST_CASE("partial encodings are rejected") {
    auto source = make_system({"s1", "s_a"}, {}, {}, {});
    auto target = make_system({"t1"}, {}, {}, {});
    CHECK_THROWS_WITH_AS(make_instance(source, target, {{"s1", "t1"}}),
                         doctest::Contains("E_PARTIAL_ENCODING"), error);
}

TEST_CASE("dangling references are rejected") {
    CHECK_THROWS_WITH_AS(make_system({"a"}, {{"a", "b"}}, {}, {}), doctest::Contains("E_UNKNOWN_STATE"),
                         error);
    CHECK_THROWS_WITH_AS(make_system({"a"}, {}, {{"b", {"x"}}}, {}), doctest::Contains("E_UNKNOWN_STATE"),
                         error);
    CHECK_THROWS_WITH_AS(make_system({"a"}, {}, {}, {"b"}), doctest::Contains("E_UNKNOWN_STATE"), error);
    auto source = make_system({"s"}, {}, {}, {});
    auto target = make_system({"t"}, {}, {}, {});
    CHECK_THROWS_WITH_AS(make_instance(source, target, {{"s", "nope"}}),
                         doctest::Contains("E_UNKNOWN_STATE"), error);
}

TEST_CASE("state tokens must be well-formed") {
    CHECK_THROWS_WITH_AS(make_system({""}, {}, {}, {}), doctest::Contains("E_PARSE"), error);
    CHECK_THROWS_WITH_AS(make_system({"a b"}, {}, {}, {}), doctest::Contains("E_PARSE"), error);
    CHECK_THROWS_WITH_AS(make_system({"a,b"}, {}, {}, {}), doctest::Contains("E_PARSE"), error);
    CHECK_THROWS_WITH_AS(make_system({"a", "a"}, {}, {}, {}), doctest::Contains("E_PARSE"), error);
}

TEST_CASE("weak derivatives on the fixtures") {
    const auto fig1 = fixture("fig1");
    CHECK(deriv_names(fig1.enc.target, "t1") == std::set<std::string>{"t1", "t3"});

    const auto lone = make_system({"s"}, {}, {}, {});
    CHECK(deriv_names(lone, "s") == std::set<std::string>{"s"});

    const auto fig3 = fixture("fig3");
    CHECK(deriv_names(fig3.enc.target, "t2") == std::set<std::string>{"t2", "t4", "t_a", "t_c"});
}

TEST_CASE("divergence on the fixtures") {
    const auto fig1 = fixture("fig1");
    CHECK(is_divergent(fig1.enc.source, fig1.enc.source.index_of("s1")));
    CHECK_FALSE(is_divergent(fig1.enc.target, fig1.enc.target.index_of("t2")));
    CHECK(is_divergent(fig1.enc.target, fig1.enc.target.index_of("t1")));

    const auto lone = make_system({"s"}, {}, {}, {});
    CHECK_FALSE(is_divergent(lone, 0));
}

TEST_CASE("predicate evaluation on the third fixture") {
    const auto fig3 = fixture("fig3");
    const auto& tgt = fig3.enc.target;
    CHECK(holds_predicate(tgt, tgt.index_of("t4"), {pred_kind::has_barb, "b"}));
    CHECK(holds_predicate(tgt, tgt.index_of("t1"), {pred_kind::reaches_barb, "c"}));
    CHECK_FALSE(holds_predicate(tgt, tgt.index_of("t_a"), {pred_kind::reaches_barb, "zzz"}));

    const auto barbless = make_system({"u", "v"}, {{"u", "v"}}, {}, {});
    CHECK_FALSE(holds_predicate(barbless, 0, {pred_kind::reaches_barb, "a"}));
}

TEST_CASE("combined domain counts and shape") {
    const auto fig1 = fixture("fig1");
    CHECK(fig1.enc.combined.size() == 5);
    CHECK(fig1.enc.combined.step_count() == 4);

    const auto fig3 = fixture("fig3");
    CHECK(fig3.enc.combined.size() == 11);
    CHECK(fig3.enc.combined.step_count() == 10);

    auto empty_source = make_system({}, {}, {}, {});
    auto target = make_system({"t"}, {{"t", "t"}}, {}, {});
    const auto comb = combine(empty_source, target);
    CHECK(comb.size() == 1);
    CHECK(comb.step_count() == 1);
}

TEST_CASE("combined domain never crosses languages") {
    const auto fig3 = fixture("fig3");
    const auto& comb = fig3.enc.combined;
    const int sn = fig3.enc.source_count();
    for (int a = 0; a < comb.size(); ++a)
        for (int b : comb.succ[static_cast<std::size_t>(a)])
            CHECK((a < sn) == (b < sn));
}

TEST_CASE("weak derivatives are reflexive and transitively closed") {
    std::mt19937_64 rng(2025);
    for (int round = 0; round < 60; ++round) {
        const auto sys = random_small_system(rng);
        for (int s = 0; s < sys.size(); ++s) {
            CHECK(sys.reaches(s, s));
            for (int a = 0; a < sys.size(); ++a)
                for (int b = 0; b < sys.size(); ++b)
                    if (sys.reaches(s, a) && sys.reaches(a, b)) CHECK(sys.reaches(s, b));
        }
    }
}

TEST_CASE("divergence agrees with the path-unrolling oracle") {
    std::mt19937_64 rng(77);
    for (int round = 0; round < 80; ++round) {
        const auto sys = random_small_system(rng);
        for (int s = 0; s < sys.size(); ++s)
            CHECK(is_divergent(sys, s) == walk_exists(sys, s, sys.size() + 1));
    }
}

TEST_CASE("reachability predicates factor through weak derivatives") {
    std::mt19937_64 rng(99);
    for (int round = 0; round < 40; ++round) {
        auto sys = random_small_system(rng);
        // sprinkle barbs and success marks
        std::map<std::string, std::vector<std::string>> barbs;
        std::vector<std::string> success;
        for (const auto& name : sys.names) {
            if (rng() % 4 == 0) barbs[name] = {"a"};
            if (rng() % 5 == 0) success.push_back(name);
        }
        std::vector<std::pair<std::string, std::string>> steps;
        for (int a = 0; a < sys.size(); ++a)
            for (int b : sys.succ[static_cast<std::size_t>(a)])
                steps.emplace_back(sys.name_of(a), sys.name_of(b));
        sys = make_system(sys.names, steps, barbs, success);

        for (int s = 0; s < sys.size(); ++s) {
            bool expect_barb = false;
            bool expect_success = false;
            for (int d : sys.weak_derivatives(s)) {
                expect_barb |= holds_predicate(sys, d, {pred_kind::has_barb, "a"});
                expect_success |= holds_predicate(sys, d, {pred_kind::has_success, ""});
            }
            CHECK(holds_predicate(sys, s, {pred_kind::reaches_barb, "a"}) == expect_barb);
            CHECK(holds_predicate(sys, s, {pred_kind::reaches_success, ""}) == expect_success);
        }
    }
}

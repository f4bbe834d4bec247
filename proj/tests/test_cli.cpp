#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "encheck/cli.hpp"
#include "encheck/generate.hpp"
#include "encheck/instance_io.hpp"

using namespace encheck;

namespace {

struct cli_result {
    int code;
    std::string out;
    std::string err;
};

cli_result run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_fixture(const std::string& name) {
    const std::string path = "cli_" + name + ".instance";
    std::ofstream file(path, std::ios::binary);
    file << emit_instance_text(fixture(name));
    return path;
}

} // namespace

TEST_CASE("parsing the emitted first fixture") {
    const auto path = write_fixture("fig1");
    const auto doc = parse_instance_file(path);
    CHECK(doc.relations.at("RT").pair_count() == 4);
    CHECK(same_document(doc, fixture("fig1")));
}

TEST_CASE("closure directives apply left to right") {
    const std::string body = R"({
      "source": {"states": ["s"], "steps": []},
      "target": {"states": ["a", "b", "c"], "steps": []},
      "encoding": {"s": "a"},
      "relations": {
        "X": {"over": "target", "pairs": [["a", "b"], ["b", "c"]], "closures": ["sym", "trans"]},
        "Y": {"over": "target", "pairs": [["a", "b"], ["b", "c"]], "closures": ["trans", "sym"]}
      }
    })";
    const auto doc = parse_instance_text(body);
    CHECK(doc.relations.at("X").pair_count() == 9); // symmetric chain closes to the full square
    CHECK(doc.relations.at("Y").pair_count() == 6); // late sym leaves transitivity broken
}

TEST_CASE("unknown states in relations carry the relation name and pair index") {
    const std::string body = R"({
      "source": {"states": ["s"], "steps": []},
      "target": {"states": ["t"], "steps": []},
      "encoding": {"s": "t"},
      "relations": {"RT": {"over": "target", "pairs": [["t", "t"], ["t", "zz"]], "closures": []}}
    })";
    try {
        parse_instance_text(body);
        FAIL("expected an error");
    } catch (const error& e) {
        CHECK(e.code() == errc::unknown_state);
        CHECK(std::string(e.what()).find("RT") != std::string::npos);
        CHECK(std::string(e.what()).find("pair 1") != std::string::npos);
        CHECK(std::string(e.what()).find("zz") != std::string::npos);
    }
}

TEST_CASE("parse failures carry context") {
    CHECK_THROWS_WITH_AS(parse_instance_text("{"), doctest::Contains("E_PARSE"), error);
    CHECK_THROWS_WITH_AS(parse_instance_text("{\"target\": {\"states\": []}}"),
                         doctest::Contains("source"), error);
    CHECK_THROWS_WITH_AS(parse_instance_text(R"({"source": {"states": ["s"]},
        "target": {"states": ["t"]}, "encoding": {"s": "t"},
        "relations": {"R": {"over": "solar", "pairs": []}}})"),
                         doctest::Contains("E_PARSE"), error);
}

TEST_CASE("exit codes") {
    const auto fig1 = write_fixture("fig1");
    const auto fig2 = write_fixture("fig2");

    CHECK(run({"check", "oc", "--variant", "standard", "--rel-target", "RT", "-i", fig1}).code == 0);
    const auto failing =
        run({"check", "oc", "--variant", "standard", "--rel-target", "RT", "-i", fig2});
    CHECK(failing.code == 1);
    CHECK(failing.out.find("(s2, t3)") != std::string::npos);

    CHECK(run({"check", "oc", "--rel-target", "RT"}).code == 2);           // no instance
    CHECK(run({"check", "nonsense", "-i", fig1}).code == 2);               // unknown criterion
    CHECK(run({"bogus-command"}).code == 2);                               // unknown command
    CHECK(run({"check", "oc", "--rel-target", "XX", "-i", fig1}).code == 2); // unknown relation
    CHECK(run({"witness", "NOPE", "-i", fig1}).code == 2);                 // unknown lemma

    // machine verdicts agree with the exit code
    const auto ok = run({"check", "divergence-reflection", "-i", fig1, "--format", "machine"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("\"verdict\": true") != std::string::npos);
}

TEST_CASE("witness and verify-rhs through the front end") {
    const auto fig1 = write_fixture("fig1");
    const auto fig3 = write_fixture("fig3");

    const auto witness = run({"witness", "OC-STANDARD", "--rel-target", "RT", "-i", fig1});
    CHECK(witness.code == 0);
    CHECK(witness.out.find("verdict: true") != std::string::npos);

    // lemma verified (the bi-implication holds) even though the criterion fails
    const auto barb = run({"witness", "COMB-OC-SUCC-BARB", "-i", fig3, "--format", "machine"});
    CHECK(barb.code == 0);
    CHECK(barb.out.find("\"lhs\": false") != std::string::npos);
    CHECK(barb.out.find("\"verdict\": true") != std::string::npos);

    const auto rhs = run({"verify-rhs", "COMB-OC-SUCC-BARB", "--rel", "Rcorr", "-i", fig3});
    CHECK(rhs.code == 1);

    const auto vg = run({"witness", "VG12", "--kind", "correspondence-sim", "--respect",
                         "divergent:reflect", "-i", fig1, "--format", "machine"});
    CHECK(vg.code == 0);
    CHECK(vg.out.find("\"lhs\": false") != std::string::npos);
}

TEST_CASE("predicate-parameterized lemmas through the front end") {
    const auto fig1 = write_fixture("fig1");
    const auto pred = run({"witness", "PRED-PRES", "--pred", "divergent:reflect", "-i", fig1,
                           "--format", "machine"});
    CHECK(pred.code == 0);
    CHECK(pred.out.find("\"lhs\": true") != std::string::npos);

    const auto two = run({"witness", "COMB-TWO-PRED", "--pred", "divergent:reflect", "--pred",
                          "reaches-success:respect", "-i", fig1, "--format", "machine"});
    CHECK(two.code == 0);

    CHECK(run({"witness", "PRED-PRES", "-i", fig1}).code == 2); // predicate argument missing
    CHECK(run({"witness", "PRED-PRES", "--pred", "divergent", "-i", fig1}).code == 2); // no mode
}

TEST_CASE("greatest and relprops commands") {
    const auto fig3 = write_fixture("fig3");
    const auto g = run({"greatest", "coupled-sim", "--over", "target", "--respect",
                        "reaches-barb:preserve", "-i", fig3, "--format", "machine"});
    CHECK(g.code == 0);
    const auto doc = nlohmann::json::parse(g.out);
    CHECK(doc["kind"] == "coupled-sim");
    bool has_pair = false;
    for (const auto& pair : doc["relation"]["pairs"])
        if (pair[0] == "t2" && pair[1] == "t3") has_pair = true;
    CHECK(has_pair);

    const auto props = run({"relprops", "Rcorr", "-i", fig3});
    CHECK(props.code == 0);
    CHECK(props.out.find("correspondence-sim: yes") != std::string::npos);
    CHECK(props.out.find("reflexive: no") != std::string::npos);
}

TEST_CASE("reports are byte-identical across runs") {
    const auto fig2 = write_fixture("fig2");
    const std::vector<std::vector<std::string>> invocations = {
        {"check", "oc", "--variant", "standard", "--rel-target", "RT", "-i", fig2, "--format", "machine"},
        {"check", "full-abstraction", "--rel-source", "RS", "--rel-target", "RT", "-i", fig2},
        {"witness", "FA-EQUIV", "--rel-source", "RS", "--rel-target", "RT", "-i", fig2, "--format",
         "machine"},
        {"relprops", "RS", "-i", fig2},
        {"falsify", "--lemma", "DIV-REFL", "--seed", "3", "--iters", "25", "--format", "machine"},
        {"fixture", "fig3"},
    };
    for (const auto& args : invocations) {
        const auto first = run(args);
        const auto second = run(args);
        CHECK(first.code == second.code);
        CHECK(first.out == second.out);
    }
}

TEST_CASE("instance round-trip is the identity on a generated corpus") {
    gen_config config;
    config.seed = 31;
    int checked = 0;
    for (int i = 0; i < 110; ++i) {
        instance_document doc = generate(config, static_cast<std::uint64_t>(i));
        const auto once = parse_instance_text(emit_instance_text(doc));
        CHECK(same_document(doc, once));
        const auto twice = parse_instance_text(emit_instance_text(once));
        CHECK(same_document(once, twice));
        checked += 1;
    }
    CHECK(checked == 110);
    for (const std::string name : {"fig1", "fig2", "fig3"}) {
        const auto doc = fixture(name);
        CHECK(same_document(doc, parse_instance_text(emit_instance_text(doc))));
    }
}

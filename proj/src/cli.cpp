#include "encheck/cli.hpp"

#include <algorithm>
#include <fstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "encheck/falsify.hpp"
#include "encheck/instance_io.hpp"

namespace encheck {

namespace {

using nlohmann::ordered_json;

ordered_json json_counterexample(const counterexample& c) {
    ordered_json out;
    out["kind"] = c.kind;
    out["states"] = c.states;
    if (c.challenge)
        out["challenge"] = {c.challenge->first, c.challenge->second};
    else
        out["challenge"] = nullptr;
    out["detail"] = c.detail;
    return out;
}

ordered_json json_relation(const rel& r, const transition_system& sys) {
    ordered_json out;
    out["over"] = carrier_token(r.over());
    ordered_json pairs = ordered_json::array();
    for (auto [a, b] : r.pairs()) pairs.push_back({sys.name_of(a), sys.name_of(b)});
    out["pairs"] = std::move(pairs);
    return out;
}

ordered_json json_conditions(const std::vector<condition_result>& cs) {
    ordered_json out = ordered_json::array();
    for (const auto& c : cs) {
        ordered_json entry;
        entry["name"] = c.name;
        entry["holds"] = c.v.holds;
        ordered_json list = ordered_json::array();
        for (const auto& ce : c.v.counterexamples) list.push_back(json_counterexample(ce));
        entry["counterexamples"] = std::move(list);
        out.push_back(std::move(entry));
    }
    return out;
}

const char* shape_token(lemma_shape s) {
    switch (s) {
        case lemma_shape::iff: return "iff";
        case lemma_shape::implies: return "implies";
        case lemma_shape::agreement: return "agreement";
    }
    return "?";
}

void text_counterexamples(std::ostream& out, const verdict& v) {
    for (const auto& c : v.counterexamples) {
        out << "  " << c.kind << " (";
        for (std::size_t i = 0; i < c.states.size(); ++i) out << (i ? ", " : "") << c.states[i];
        out << ")";
        if (c.challenge) out << " challenge " << c.challenge->first << " -> " << c.challenge->second;
        if (!c.detail.empty()) out << " -- " << c.detail;
        out << "\n";
    }
}

struct respect_flag_parser {
    std::vector<respect_constraint> parse(const std::vector<std::string>& flags) const {
        std::vector<respect_constraint> out;
        for (const auto& flag : flags) out.push_back(parse_one(flag));
        return out;
    }

    respect_constraint parse_one(const std::string& flag) const {
        const auto pos = flag.rfind(':');
        if (pos == std::string::npos)
            throw error(errc::usage, "expected pred:mode, got '" + flag + "'");
        return {parse_predicate(flag.substr(0, pos)), parse_pred_mode(flag.substr(pos + 1))};
    }
};

std::pair<predicate, pred_mode> parse_pred_flag(const std::string& flag) {
    const auto pos = flag.rfind(':');
    if (pos == std::string::npos)
        throw error(errc::usage, "expected pred:mode, got '" + flag + "'");
    return {parse_predicate(flag.substr(0, pos)), parse_pred_mode(flag.substr(pos + 1))};
}

const rel& named_rel(const instance_document& doc, const std::string& name) {
    auto it = doc.relations.find(name);
    if (it == doc.relations.end()) throw error(errc::usage, "unknown relation '" + name + "'");
    return it->second;
}

rel named_rel_over(const instance_document& doc, const std::string& name, carrier_kind expected) {
    const rel& r = named_rel(doc, name);
    if (r.over() != expected)
        throw error(errc::usage, "relation '" + name + "' must be declared over " +
                                     carrier_token(expected));
    return r;
}

struct options {
    std::string instance_path;
    std::string format = "text";

    // check
    std::string criterion;
    std::string variant; // empty = command- or lemma-specific default
    std::string mode = "respect";
    std::string strength_flag = "reaches";
    std::string rel_source_name, rel_target_name, rel_name;

    // relprops / greatest / witness / verify-rhs
    std::string relation_name;
    std::string kind = "correspondence-sim";
    std::string over = "combined";
    std::vector<std::string> respect_flags;
    std::string lemma;
    std::vector<std::string> pred_flags;

    // falsify
    std::string falsify_lemma = "all";
    std::uint64_t seed = 1;
    int iters = 100;
    int max_src = 4;
    int max_tgt = 5;

    // fixture
    std::string fixture_name;
    std::string emit_path;
};

instance_document load_instance(const options& opt) {
    if (opt.instance_path.empty()) throw error(errc::usage, "no instance file given (use -i FILE)");
    return parse_instance_file(opt.instance_path);
}

lemma_args build_lemma_args(const options& opt, const instance_document& doc) {
    lemma_args args;
    if (!opt.rel_source_name.empty())
        args.rel_source = named_rel_over(doc, opt.rel_source_name, carrier_kind::source);
    if (!opt.rel_target_name.empty())
        args.rel_target = named_rel_over(doc, opt.rel_target_name, carrier_kind::target);
    if (!opt.rel_name.empty())
        args.rel_combined = named_rel_over(doc, opt.rel_name, carrier_kind::combined);
    for (const auto& flag : opt.pred_flags) args.preds.push_back(parse_pred_flag(flag));
    if (!opt.variant.empty()) args.variant = parse_oc_variant(opt.variant);
    args.mode = parse_pred_mode(opt.mode);
    args.str = parse_strength(opt.strength_flag);
    args.kind = parse_sim_kind(opt.kind);
    args.constraints = respect_flag_parser{}.parse(opt.respect_flags);
    return args;
}

int run_check(const options& opt, std::ostream& out) {
    const auto doc = load_instance(opt);
    const auto& enc = doc.enc;
    verdict v;
    if (opt.criterion == "divergence-reflection") {
        v = divergence_reflection(enc);
    } else if (opt.criterion == "success-sensitiveness") {
        v = success_sensitiveness(enc, parse_strength(opt.strength_flag));
    } else if (opt.criterion == "barb-sensitiveness") {
        v = barb_sensitiveness(enc, parse_pred_mode(opt.mode), parse_strength(opt.strength_flag));
    } else if (opt.criterion == "full-abstraction") {
        if (opt.rel_source_name.empty() || opt.rel_target_name.empty())
            throw error(errc::usage, "full-abstraction needs --rel-source and --rel-target");
        v = full_abstraction(enc, named_rel_over(doc, opt.rel_source_name, carrier_kind::source),
                             named_rel_over(doc, opt.rel_target_name, carrier_kind::target));
    } else if (opt.criterion == "oc") {
        if (opt.rel_target_name.empty()) throw error(errc::usage, "oc needs --rel-target");
        v = operational_correspondence(enc, named_rel_over(doc, opt.rel_target_name, carrier_kind::target),
                                       parse_oc_variant(opt.variant.empty() ? "standard" : opt.variant));
    } else {
        throw error(errc::usage, "unknown criterion '" + opt.criterion + "'");
    }

    if (opt.format == "machine") {
        ordered_json outdoc;
        outdoc["command"] = "check";
        outdoc["criterion"] = opt.criterion;
        outdoc["verdict"] = v.holds;
        ordered_json cs = ordered_json::array();
        for (const auto& c : v.counterexamples) cs.push_back(json_counterexample(c));
        outdoc["counterexamples"] = std::move(cs);
        out << outdoc.dump(2) << "\n";
    } else {
        out << "check " << opt.criterion << ": " << (v.holds ? "holds" : "fails") << "\n";
        text_counterexamples(out, v);
    }
    return v.holds ? 0 : 1;
}

int run_relprops(const options& opt, std::ostream& out) {
    const auto doc = load_instance(opt);
    const rel& r = named_rel(doc, opt.relation_name);
    const auto& sys = carrier_system(doc.enc, r.over());
    const auto rep = relation_properties(r, sys);

    if (opt.format == "machine") {
        ordered_json outdoc;
        outdoc["command"] = "relprops";
        outdoc["relation"] = opt.relation_name;
        ordered_json report;
        report["over"] = carrier_token(r.over());
        report["pairs"] = r.pair_count();
        report["reflexive"] = rep.reflexive;
        report["symmetric"] = rep.symmetric;
        report["transitive"] = rep.transitive;
        report["preorder"] = rep.preorder;
        report["equivalence"] = rep.equivalence;
        report["strong-bisim"] = rep.strong_bisim;
        report["weak-bisim"] = rep.weak_bisim;
        report["coupled-sim"] = rep.coupled_sim;
        report["correspondence-sim"] = rep.correspondence_sim;
        ordered_json respects = ordered_json::array();
        for (const auto& f : rep.respects) {
            ordered_json entry;
            entry["pred"] = predicate_token(f.pred);
            entry["preserves"] = f.preserves;
            entry["reflects"] = f.reflects;
            respects.push_back(std::move(entry));
        }
        report["respects"] = std::move(respects);
        outdoc["report"] = std::move(report);
        out << outdoc.dump(2) << "\n";
    } else {
        out << "relprops " << opt.relation_name << " (over " << carrier_token(r.over()) << ", "
            << r.pair_count() << " pairs)\n";
        auto flag = [&](const char* name, bool b) { out << "  " << name << ": " << (b ? "yes" : "no") << "\n"; };
        flag("reflexive", rep.reflexive);
        flag("symmetric", rep.symmetric);
        flag("transitive", rep.transitive);
        flag("preorder", rep.preorder);
        flag("equivalence", rep.equivalence);
        flag("strong-bisim", rep.strong_bisim);
        flag("weak-bisim", rep.weak_bisim);
        flag("coupled-sim", rep.coupled_sim);
        flag("correspondence-sim", rep.correspondence_sim);
        for (const auto& f : rep.respects)
            out << "  " << predicate_token(f.pred) << ": preserves=" << (f.preserves ? "yes" : "no")
                << " reflects=" << (f.reflects ? "yes" : "no") << "\n";
    }
    return 0;
}

int run_greatest(const options& opt, std::ostream& out) {
    const auto doc = load_instance(opt);
    const auto kind = parse_sim_kind(opt.kind);
    const auto over = parse_carrier(opt.over);
    const auto constraints = respect_flag_parser{}.parse(opt.respect_flags);
    const auto& sys = carrier_system(doc.enc, over);
    const rel g = greatest_relation(kind, sys, over, constraints);

    if (opt.format == "machine") {
        ordered_json outdoc;
        outdoc["command"] = "greatest";
        outdoc["kind"] = sim_kind_token(kind);
        outdoc["over"] = carrier_token(over);
        outdoc["relation"] = json_relation(g, sys);
        out << outdoc.dump(2) << "\n";
    } else {
        out << "greatest " << sim_kind_token(kind) << " over " << carrier_token(over) << " ("
            << g.pair_count() << " pairs)\n";
        for (auto [a, b] : g.pairs()) out << "  (" << sys.name_of(a) << ", " << sys.name_of(b) << ")\n";
    }
    return 0;
}

ordered_json json_report(const witness_report& rep, const encoding_instance& enc) {
    ordered_json report;
    report["shape"] = shape_token(rep.shape);
    report["preconditions"] = json_conditions(rep.preconditions);
    report["lhs_parts"] = json_conditions(rep.lhs_parts);
    report["lhs"] = rep.lhs;
    report["rhs"] = json_conditions(rep.rhs);
    report["rhs_holds"] = rep.rhs_holds;
    report["verdict"] = rep.verdict;
    report["witness"] = json_relation(rep.witness, carrier_system(enc, rep.witness.over()));
    return report;
}

void text_report(std::ostream& out, const witness_report& rep, const encoding_instance& enc) {
    out << "witness " << lemma_token(rep.lemma) << " (" << shape_token(rep.shape) << ")\n";
    for (const auto& c : rep.preconditions)
        out << "  precondition " << c.name << ": " << (c.v.holds ? "holds" : "fails") << "\n";
    for (const auto& c : rep.lhs_parts) {
        out << "  lhs " << c.name << ": " << (c.v.holds ? "holds" : "fails") << "\n";
        text_counterexamples(out, c.v);
    }
    out << "  lhs: " << (rep.lhs ? "holds" : "fails") << "\n";
    for (const auto& c : rep.rhs) {
        out << "  rhs " << c.name << ": " << (c.v.holds ? "holds" : "fails") << "\n";
        text_counterexamples(out, c.v);
    }
    out << "  rhs: " << (rep.rhs_holds ? "holds" : "fails") << "\n";
    const auto& sys = carrier_system(enc, rep.witness.over());
    out << "  witness (" << rep.witness.pair_count() << " pairs):";
    for (auto [a, b] : rep.witness.pairs()) out << " (" << sys.name_of(a) << "," << sys.name_of(b) << ")";
    out << "\n";
    out << "  verdict: " << (rep.verdict ? "true" : "false") << "\n";
}

int run_witness(const options& opt, std::ostream& out) {
    const auto doc = load_instance(opt);
    const auto id = parse_lemma(opt.lemma);
    const auto args = build_lemma_args(opt, doc);
    const auto rep = verify_lemma(id, doc.enc, args);

    if (opt.format == "machine") {
        ordered_json outdoc;
        outdoc["command"] = "witness";
        outdoc["lemma"] = lemma_token(id);
        outdoc["verdict"] = rep.verdict;
        outdoc["report"] = json_report(rep, doc.enc);
        out << outdoc.dump(2) << "\n";
    } else {
        text_report(out, rep, doc.enc);
    }
    return rep.verdict ? 0 : 1;
}

int run_verify_rhs(const options& opt, std::ostream& out) {
    const auto doc = load_instance(opt);
    const auto id = parse_lemma(opt.lemma);
    if (opt.rel_name.empty()) throw error(errc::usage, "verify-rhs needs --rel NAME");
    auto args = build_lemma_args(opt, doc);
    const rel r = named_rel_over(doc, opt.rel_name, carrier_kind::combined);
    const verdict v = verify_rhs_only(id, doc.enc, r, args);

    if (opt.format == "machine") {
        ordered_json outdoc;
        outdoc["command"] = "verify-rhs";
        outdoc["lemma"] = lemma_token(id);
        outdoc["rel"] = opt.rel_name;
        outdoc["verdict"] = v.holds;
        ordered_json cs = ordered_json::array();
        for (const auto& c : v.counterexamples) cs.push_back(json_counterexample(c));
        outdoc["counterexamples"] = std::move(cs);
        out << outdoc.dump(2) << "\n";
    } else {
        out << "verify-rhs " << lemma_token(id) << " with " << opt.rel_name << ": "
            << (v.holds ? "holds" : "fails") << "\n";
        text_counterexamples(out, v);
    }
    return v.holds ? 0 : 1;
}

int run_falsify(const options& opt, std::ostream& out, std::ostream& err) {
    gen_config config;
    config.seed = opt.seed;
    config.max_source_states = opt.max_src;
    config.max_target_states = opt.max_tgt;

    std::vector<falsify_report> reports;
    if (opt.falsify_lemma == "all") {
        reports = falsify_all(config, opt.iters);
    } else {
        reports.push_back(falsify(parse_lemma(opt.falsify_lemma), config, opt.iters));
    }

    int total = 0;
    double elapsed = 0.0;
    for (const auto& r : reports) {
        total += r.discrepancies;
        elapsed += r.elapsed_seconds;
    }

    if (opt.format == "machine") {
        ordered_json outdoc;
        outdoc["command"] = "falsify";
        outdoc["seed"] = opt.seed;
        outdoc["iterations"] = opt.iters;
        ordered_json lemmas = ordered_json::array();
        for (const auto& r : reports) {
            ordered_json entry;
            entry["lemma"] = lemma_token(r.lemma);
            entry["attempted"] = r.attempted;
            entry["preconditions_held"] = r.preconditions_held;
            entry["discrepancies"] = r.discrepancies;
            entry["dumps"] = r.dumps;
            lemmas.push_back(std::move(entry));
        }
        outdoc["lemmas"] = std::move(lemmas);
        outdoc["total_discrepancies"] = total;
        out << outdoc.dump(2) << "\n";
    } else {
        for (const auto& r : reports) {
            out << "falsify " << lemma_token(r.lemma) << ": attempted=" << r.attempted
                << " preconditions_held=" << r.preconditions_held
                << " discrepancies=" << r.discrepancies << "\n";
            for (const auto& dump : r.dumps) out << dump;
        }
        out << "total discrepancies: " << total << "\n";
    }
    // wall-clock time is not part of the deterministic report
    err << "elapsed: " << elapsed << "s\n";
    return total == 0 ? 0 : 1;
}

int run_fixture(const options& opt, std::ostream& out) {
    const auto doc = fixture(opt.fixture_name);
    const std::string text = emit_instance_text(doc);
    if (!opt.emit_path.empty()) {
        std::ofstream file(opt.emit_path, std::ios::binary);
        if (!file) throw error(errc::usage, "cannot write '" + opt.emit_path + "'");
        file << text;
        if (opt.format == "machine") {
            ordered_json outdoc;
            outdoc["command"] = "fixture";
            outdoc["name"] = opt.fixture_name;
            outdoc["path"] = opt.emit_path;
            out << outdoc.dump(2) << "\n";
        } else {
            out << "wrote " << opt.fixture_name << " to " << opt.emit_path << "\n";
        }
    } else {
        out << text;
    }
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    options opt;
    CLI::App app{"checker and witness toolkit for encodability criteria between finite-state calculi"};
    app.name("encheck");
    app.require_subcommand(0, 1);
    app.fallthrough(); // global -i/--format may follow the subcommand
    app.add_option("-i,--instance", opt.instance_path, "instance file");
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "machine"}));

    auto* check = app.add_subcommand("check", "decide an encodability criterion");
    check->add_option("criterion", opt.criterion, "criterion to check")
        ->required()
        ->check(CLI::IsMember({"divergence-reflection", "success-sensitiveness", "barb-sensitiveness",
                               "full-abstraction", "oc"}));
    check->add_option("--variant", opt.variant, "oc variant: strong|standard|weak");
    check->add_option("--mode", opt.mode, "preserve|reflect|respect");
    check->add_option("--strength", opt.strength_flag, "has|reaches");
    check->add_option("--rel-source", opt.rel_source_name, "named source relation");
    check->add_option("--rel-target", opt.rel_target_name, "named target relation");

    auto* relprops = app.add_subcommand("relprops", "closure and simulation properties of a named relation");
    relprops->add_option("name", opt.relation_name, "relation name")->required();

    auto* greatest = app.add_subcommand("greatest", "greatest relation of a simulation kind");
    greatest->add_option("kind", opt.kind, "relation kind")->required();
    greatest->add_option("--respect", opt.respect_flags, "per-pair constraint pred:mode");
    greatest->add_option("--over", opt.over, "carrier: source|target|combined");

    auto* witness = app.add_subcommand("witness", "verify a catalogue lemma on its canonical witness");
    witness->add_option("lemma", opt.lemma, "lemma id")->required();
    witness->add_option("--rel-source", opt.rel_source_name, "named source relation");
    witness->add_option("--rel-target", opt.rel_target_name, "named target relation");
    witness->add_option("--rel", opt.rel_name, "named combined relation");
    witness->add_option("--pred", opt.pred_flags, "predicate argument pred:mode");
    witness->add_option("--mode", opt.mode, "preserve|reflect|respect");
    witness->add_option("--strength", opt.strength_flag, "has|reaches");
    witness->add_option("--variant", opt.variant, "strong|standard|weak");
    witness->add_option("--kind", opt.kind, "relation kind (VG12)");
    witness->add_option("--respect", opt.respect_flags, "per-pair constraint pred:mode (VG12)");

    auto* verify_rhs = app.add_subcommand("verify-rhs", "check a lemma right-hand side on a named relation");
    verify_rhs->add_option("lemma", opt.lemma, "lemma id")->required();
    verify_rhs->add_option("--rel", opt.rel_name, "named combined relation")->required();
    verify_rhs->add_option("--rel-source", opt.rel_source_name, "named source relation");
    verify_rhs->add_option("--rel-target", opt.rel_target_name, "named target relation");
    verify_rhs->add_option("--pred", opt.pred_flags, "predicate argument pred:mode");
    verify_rhs->add_option("--mode", opt.mode, "preserve|reflect|respect");
    verify_rhs->add_option("--strength", opt.strength_flag, "has|reaches");
    verify_rhs->add_option("--variant", opt.variant, "strong|standard|weak");
    verify_rhs->add_option("--kind", opt.kind, "relation kind (VG12)");
    verify_rhs->add_option("--respect", opt.respect_flags, "per-pair constraint pred:mode (VG12)");

    auto* falsify_cmd = app.add_subcommand("falsify", "randomized lemma falsification");
    falsify_cmd->add_option("--lemma", opt.falsify_lemma, "lemma id or 'all'");
    falsify_cmd->add_option("--seed", opt.seed, "generator seed");
    falsify_cmd->add_option("--iters", opt.iters, "iterations per lemma");
    falsify_cmd->add_option("--max-src", opt.max_src, "max source states");
    falsify_cmd->add_option("--max-tgt", opt.max_tgt, "max target states");

    auto* fixture_cmd = app.add_subcommand("fixture", "emit a built-in example instance");
    fixture_cmd->add_option("name", opt.fixture_name, "fig1|fig2|fig3")->required();
    fixture_cmd->add_option("--emit", opt.emit_path, "write the instance to a file");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);

        if (app.get_subcommands().empty()) {
            out << app.help();
            return 0;
        }
        if (check->parsed()) return run_check(opt, out);
        if (relprops->parsed()) return run_relprops(opt, out);
        if (greatest->parsed()) return run_greatest(opt, out);
        if (witness->parsed()) return run_witness(opt, out);
        if (verify_rhs->parsed()) return run_verify_rhs(opt, out);
        if (falsify_cmd->parsed()) return run_falsify(opt, out, err);
        if (fixture_cmd->parsed()) return run_fixture(opt, out);
        out << app.help();
        return 0;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "E_USAGE: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        err << e.what() << "\n";
        return 2;
    }
}

} // namespace encheck

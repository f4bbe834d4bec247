#include "encheck/falsify.hpp"

#include <chrono>
#include <cstdint>

#include "encheck/instance_io.hpp"

namespace encheck {

namespace {

constexpr int max_enumerable_states = 4; // 16 pairs, 65536 candidate relations

const std::vector<std::pair<predicate, pred_mode>>& pred_rotation() {
    static const std::vector<std::pair<predicate, pred_mode>> table = {
        {{pred_kind::divergent, ""}, pred_mode::reflect},
        {{pred_kind::divergent, ""}, pred_mode::preserve},
        {{pred_kind::reaches_success, ""}, pred_mode::respect},
        {{pred_kind::has_success, ""}, pred_mode::preserve},
        {{pred_kind::reaches_barb, ""}, pred_mode::preserve},
        {{pred_kind::has_barb, ""}, pred_mode::respect},
        {{pred_kind::reaches_barb, ""}, pred_mode::respect},
    };
    return table;
}

oc_variant variant_rotation(std::uint64_t index) {
    switch (index % 3) {
        case 0: return oc_variant::weak;
        case 1: return oc_variant::standard;
        default: return oc_variant::strong;
    }
}

sim_kind kind_of_variant(oc_variant v) {
    switch (v) {
        case oc_variant::strong: return sim_kind::strong_bisim;
        case oc_variant::standard: return sim_kind::weak_bisim;
        case oc_variant::weak: return sim_kind::correspondence_sim;
    }
    return sim_kind::correspondence_sim;
}

strength strength_of_variant(oc_variant v) {
    return v == oc_variant::strong ? strength::has : strength::reaches;
}

bool preorder_kind_ok(const transition_system& sys, const rel& r, sim_kind kind,
                      const std::vector<respect_constraint>& resp) {
    if (!is_preorder(r)) return false;
    for (auto [p, q] : r.pairs()) {
        if (!pair_satisfies_all(sys, p, q, resp)) return false;
        if (!simulation_pair_ok(kind, sys, r, p, q)) return false;
    }
    return true;
}

/// Repair toward "preorder that is a kind-simulation satisfying resp":
/// alternate refl+trans closure, dropping of constraint violators and
/// dropping of clause violators; reject after 16 rounds.
std::optional<rel> repair_sim_preorder(const transition_system& sys, rel r, sim_kind kind,
                                       const std::vector<respect_constraint>& resp) {
    for (int round = 0; round < 16; ++round) {
        if (preorder_kind_ok(sys, r, kind, resp)) return r;
        r = r.closed_refl().closed_trans();
        for (auto [p, q] : r.pairs())
            if (!pair_satisfies_all(sys, p, q, resp)) r.erase(p, q);
        for (auto [p, q] : r.pairs())
            if (!simulation_pair_ok(kind, sys, r, p, q)) r.erase(p, q);
    }
    if (preorder_kind_ok(sys, r, kind, resp)) return r;
    return std::nullopt;
}

rel equivalence_closure(const rel& r) { return r.closed_refl().closed_sym().closed_trans(); }

/// Source relation induced by a target relation through the encoding; an
/// equivalence target relation always yields a fully abstract pairing.
rel derived_source_rel(const encoding_instance& enc, const rel& rt) {
    rel rs(carrier_kind::source, enc.source.size());
    for (int a = 0; a < enc.source.size(); ++a)
        for (int b = 0; b < enc.source.size(); ++b)
            if (rt.contains(enc.mapping[static_cast<std::size_t>(a)],
                            enc.mapping[static_cast<std::size_t>(b)]))
                rs.add(a, b);
    return rs;
}

} // namespace

std::optional<lemma_args> prepare_lemma_args(lemma_id id, const instance_document& doc,
                                             std::uint64_t index) {
    const encoding_instance& enc = doc.enc;
    const rel& rs_cand = doc.relations.at("RS");
    const rel& rt_cand = doc.relations.at("RT");
    const rel& r_cand = doc.relations.at("R");
    lemma_args args;
    const auto& preds = pred_rotation();

    switch (id) {
        case lemma_id::pred_pres:
            args.preds = {preds[index % preds.size()]};
            return args;
        case lemma_id::div_refl:
        case lemma_id::comb_div_succ:
            return args;
        case lemma_id::barb_sens:
            args.mode = static_cast<pred_mode>(index % 3);
            args.str = index % 2 ? strength::has : strength::reaches;
            return args;
        case lemma_id::succ_sens:
            args.str = index % 2 ? strength::has : strength::reaches;
            return args;
        case lemma_id::comb_two_pred:
            args.preds = {preds[index % preds.size()], preds[(index + 3) % preds.size()]};
            return args;
        case lemma_id::fa_preorder: {
            const rel rt = rt_cand.closed_refl().closed_trans();
            args.rel_target = rt;
            args.rel_source =
                index % 2 ? rs_cand.closed_refl().closed_trans() : derived_source_rel(enc, rt);
            return args;
        }
        case lemma_id::fa_equiv:
        case lemma_id::fa_oc:
        case lemma_id::fa_oc_rs_bisim:
        case lemma_id::fa_oc_surj: {
            const rel rt = equivalence_closure(rt_cand);
            args.rel_target = rt;
            // alternate between an abstraction-compatible source relation and
            // a random one so both verdict polarities occur
            args.rel_source = index % 2 ? equivalence_closure(rs_cand) : derived_source_rel(enc, rt);
            return args;
        }
        case lemma_id::oc_strong:
        case lemma_id::oc_standard:
        case lemma_id::oc_weak: {
            const sim_kind kind = id == lemma_id::oc_strong     ? sim_kind::strong_bisim
                                  : id == lemma_id::oc_standard ? sim_kind::weak_bisim
                                                                : sim_kind::correspondence_sim;
            auto rt = repair_sim_preorder(enc.target, rt_cand, kind, {});
            if (!rt) return std::nullopt;
            args.rel_target = std::move(*rt);
            return args;
        }
        case lemma_id::comb_oc_succ:
        case lemma_id::comb_oc_succ_barb:
        case lemma_id::comb_triple: {
            const oc_variant v = variant_rotation(index);
            args.variant = v;
            std::vector<respect_constraint> resp = {
                {{strength_of_variant(v) == strength::has ? pred_kind::has_success
                                                          : pred_kind::reaches_success,
                  ""},
                 pred_mode::respect}};
            if (id == lemma_id::comb_oc_succ_barb)
                resp.push_back({{strength_of_variant(v) == strength::has ? pred_kind::has_barb
                                                                         : pred_kind::reaches_barb,
                                 ""},
                                pred_mode::respect});
            if (id == lemma_id::comb_triple)
                resp.push_back({{pred_kind::divergent, ""}, pred_mode::reflect});
            auto rt = repair_sim_preorder(enc.target, rt_cand, kind_of_variant(v), resp);
            if (!rt) return std::nullopt;
            args.rel_target = std::move(*rt);
            return args;
        }
        case lemma_id::fa_restrict: {
            const rel rt = equivalence_closure(rt_cand);
            args.rel_target = rt;
            args.rel_source = derived_source_rel(enc, rt);
            const rel mw = minimal_witness(enc);
            const rel base = mw.united(mw.inverted());
            switch (index % 3) {
                case 0: break; // canonical witness
                case 1:
                    args.rel_combined = base.united(r_cand).closed_trans();
                    break;
                default:
                    args.rel_combined = base.united(lift_to_combined(enc, rt)).closed_trans();
                    break;
            }
            return args;
        }
        case lemma_id::vg12: {
            args.kind = static_cast<sim_kind>(index % 4);
            switch ((index / 4) % 4) {
                case 0: break;
                case 1: args.constraints = {{{pred_kind::divergent, ""}, pred_mode::reflect}}; break;
                case 2: args.constraints = {{{pred_kind::reaches_barb, ""}, pred_mode::respect}}; break;
                default: args.constraints = {{{pred_kind::reaches_barb, ""}, pred_mode::preserve}}; break;
            }
            return args;
        }
    }
    return args;
}

falsify_report falsify(lemma_id id, const gen_config& config, int iterations) {
    const auto start = std::chrono::steady_clock::now();
    falsify_report report;
    report.lemma = id;
    for (int i = 0; i < iterations; ++i) {
        const auto doc = generate(config, static_cast<std::uint64_t>(i));
        report.attempted += 1;
        auto args = prepare_lemma_args(id, doc, static_cast<std::uint64_t>(i));
        if (!args) continue;
        if (!all_hold(lemma_preconditions(id, doc.enc, *args))) continue;
        report.preconditions_held += 1;
        const auto rep = verify_lemma(id, doc.enc, *args);
        if (!rep.verdict) {
            report.discrepancies += 1;
            instance_document dump;
            dump.enc = doc.enc;
            if (args->rel_source) dump.relations.emplace("RS", *args->rel_source);
            if (args->rel_target) dump.relations.emplace("RT", *args->rel_target);
            if (args->rel_combined) dump.relations.emplace("R", *args->rel_combined);
            report.dumps.push_back(emit_instance_text(dump));
        }
    }
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::vector<falsify_report> falsify_all(const gen_config& config, int iterations) {
    std::vector<falsify_report> out;
    for (lemma_id id : lemma_catalogue) out.push_back(falsify(id, config, iterations));
    return out;
}

// --- exhaustive oracles -----------------------------------------------------

rel brute_force_greatest(sim_kind k, const transition_system& sys, carrier_kind over,
                         const std::vector<respect_constraint>& constraints) {
    const int n = sys.size();
    if (n > max_enumerable_states)
        throw error(errc::too_large, "carrier has " + std::to_string(n) + " states, enumeration bound is " +
                                         std::to_string(max_enumerable_states));
    const int bits = n * n;
    std::uint32_t allowed = 0;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (pair_satisfies_all(sys, a, b, constraints))
                allowed |= 1u << (a * n + b);

    rel result(over, n);
    rel scratch(over, n);
    const std::uint32_t total = 1u << bits; // bits <= 16
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        if ((mask & ~allowed) != 0) continue;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                if (mask & (1u << (a * n + b)))
                    scratch.add(a, b);
                else
                    scratch.erase(a, b);
            }
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            for (int b = 0; b < n && ok; ++b)
                if (scratch.contains(a, b) && !simulation_pair_ok(k, sys, scratch, a, b)) ok = false;
        if (ok) result = result.united(scratch);
    }
    return result;
}

namespace {

struct mask_bounds {
    std::uint32_t required = 0;
    std::uint32_t forbidden = 0;
    bool contradictory = false;
};

/// Static consequences of a lemma's right-hand side on individual pairs;
/// used only to prune the enumeration, survivors are re-checked in full.
mask_bounds static_bounds(lemma_id id, const encoding_instance& enc, const lemma_args& args) {
    const int n = enc.combined.size();
    const int sn = enc.source_count();
    mask_bounds mb;
    auto bit = [&](int a, int b) { return 1u << (a * n + b); };

    const bool both = id == lemma_id::fa_preorder || id == lemma_id::fa_oc;
    for (int i = 0; i < sn; ++i) {
        mb.required |= bit(i, enc.encoded(i));
        if (both) mb.required |= bit(enc.encoded(i), i);
    }

    std::vector<std::pair<predicate, pred_mode>> static_preds;
    switch (id) {
        case lemma_id::pred_pres: static_preds = {args.preds.at(0)}; break;
        case lemma_id::div_refl:
            static_preds = {{{pred_kind::divergent, ""}, pred_mode::reflect}};
            break;
        case lemma_id::barb_sens:
            static_preds = {{args.str == strength::has ? predicate{pred_kind::has_barb, ""}
                                                       : predicate{pred_kind::reaches_barb, ""},
                             args.mode}};
            break;
        case lemma_id::succ_sens:
            static_preds = {{args.str == strength::has ? predicate{pred_kind::has_success, ""}
                                                       : predicate{pred_kind::reaches_success, ""},
                             pred_mode::respect}};
            break;
        case lemma_id::comb_div_succ:
            static_preds = {{{pred_kind::divergent, ""}, pred_mode::reflect},
                            {{pred_kind::reaches_success, ""}, pred_mode::respect}};
            break;
        case lemma_id::comb_two_pred: static_preds = args.preds; break;
        case lemma_id::vg12:
            for (const auto& c : args.constraints) static_preds.push_back({c.pred, c.mode});
            break;
        default: break;
    }
    for (const auto& [p, m] : static_preds)
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (!pair_satisfies(enc.combined, a, b, p, m)) mb.forbidden |= bit(a, b);

    const bool pins_target = id == lemma_id::oc_strong || id == lemma_id::oc_standard ||
                             id == lemma_id::oc_weak || id == lemma_id::comb_oc_succ ||
                             id == lemma_id::comb_oc_succ_barb || id == lemma_id::comb_triple ||
                             id == lemma_id::fa_preorder || id == lemma_id::fa_oc;
    if (pins_target && args.rel_target) {
        for (int a = 0; a < n - sn; ++a)
            for (int b = 0; b < n - sn; ++b) {
                if (args.rel_target->contains(a, b))
                    mb.required |= bit(sn + a, sn + b);
                else
                    mb.forbidden |= bit(sn + a, sn + b);
            }
    }
    if ((id == lemma_id::fa_preorder || id == lemma_id::fa_oc) && args.rel_source) {
        for (int a = 0; a < sn; ++a)
            for (int b = 0; b < sn; ++b) {
                if (args.rel_source->contains(a, b))
                    mb.required |= bit(a, b);
                else
                    mb.forbidden |= bit(a, b);
            }
    }

    mb.contradictory = (mb.required & mb.forbidden) != 0;
    return mb;
}

} // namespace

bool brute_force_exists_rhs(lemma_id id, const encoding_instance& enc, const lemma_args& args0) {
    if (id == lemma_id::fa_restrict || id == lemma_id::fa_oc_rs_bisim || id == lemma_id::fa_oc_surj)
        throw error(errc::usage, std::string(lemma_token(id)) + " has no relation-shaped right-hand side");
    const int n = enc.combined.size();
    if (n > max_enumerable_states)
        throw error(errc::too_large, "combined domain has " + std::to_string(n) +
                                         " states, enumeration bound is " +
                                         std::to_string(max_enumerable_states));

    lemma_args args = args0;
    if (!args.rel_source) args.rel_source = identity_rel(carrier_kind::source, enc.source.size());
    if (!args.rel_target) args.rel_target = identity_rel(carrier_kind::target, enc.target.size());

    const mask_bounds mb = static_bounds(id, enc, args);
    if (mb.contradictory) return false;
    const int bits = n * n; // at most 16
    const std::uint32_t all = (1u << bits) - 1;
    const std::uint32_t free_bits = all & ~(mb.required | mb.forbidden);

    rel scratch(carrier_kind::combined, n);
    std::uint32_t sub = free_bits;
    while (true) {
        const std::uint32_t mask = mb.required | sub;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                if (mask & (1u << (a * n + b)))
                    scratch.add(a, b);
                else
                    scratch.erase(a, b);
            }
        if (lemma_rhs_fast(id, enc, args, scratch)) return true;
        if (sub == 0) break;
        sub = (sub - 1) & free_bits;
    }
    return false;
}

// --- oracle agreement and hierarchy checks ----------------------------------

oracle_stats run_oracle_agreement(const gen_config& config, int instances) {
    oracle_stats stats;
    const std::vector<std::vector<respect_constraint>> constraint_sets = {
        {},
        {{{pred_kind::reaches_barb, ""}, pred_mode::respect}},
        {{{pred_kind::divergent, ""}, pred_mode::reflect}},
    };
    const std::vector<sim_kind> kinds = {sim_kind::strong_bisim, sim_kind::weak_bisim,
                                         sim_kind::coupled_sim, sim_kind::correspondence_sim};

    for (int i = 0; stats.instances < instances; ++i) {
        const auto doc = generate(config, static_cast<std::uint64_t>(i));
        if (doc.enc.combined.size() > max_enumerable_states) continue;
        stats.instances += 1;

        for (sim_kind k : kinds)
            for (const auto& cs : constraint_sets) {
                const rel fix = greatest_relation(k, doc.enc.combined, carrier_kind::combined, cs);
                const rel brute = brute_force_greatest(k, doc.enc.combined, carrier_kind::combined, cs);
                stats.greatest_comparisons += 1;
                if (!(fix == brute)) {
                    stats.mismatches += 1;
                    stats.notes.push_back("greatest mismatch kind=" + std::string(sim_kind_token(k)) +
                                          " instance=" + std::to_string(i));
                }
            }

        for (lemma_id id : lemma_catalogue) {
            if (id == lemma_id::fa_restrict || id == lemma_id::fa_oc_rs_bisim ||
                id == lemma_id::fa_oc_surj)
                continue;
            auto args = prepare_lemma_args(id, doc, static_cast<std::uint64_t>(i));
            if (!args) continue;
            if (!all_hold(lemma_preconditions(id, doc.enc, *args))) continue;
            const auto rep = verify_lemma(id, doc.enc, *args);
            const bool exists = brute_force_exists_rhs(id, doc.enc, *args);
            stats.lemma_comparisons += 1;
            if (rep.rhs_holds != exists || rep.verdict != (rep.lhs == exists)) {
                stats.mismatches += 1;
                stats.notes.push_back("lemma mismatch " + std::string(lemma_token(id)) +
                                      " instance=" + std::to_string(i));
            }
        }
    }
    return stats;
}

hierarchy_stats run_hierarchy_checks(const gen_config& config, int instances) {
    hierarchy_stats stats;
    auto note = [&](const std::string& what, int index) {
        stats.violations += 1;
        stats.notes.push_back(what + " instance=" + std::to_string(index));
    };

    for (int i = 0; i < instances; ++i) {
        const auto doc = generate(config, static_cast<std::uint64_t>(i));
        const auto& comb = doc.enc.combined;
        stats.instances += 1;

        std::vector<rel> samples;
        samples.push_back(doc.relations.at("R"));
        for (sim_kind k : {sim_kind::strong_bisim, sim_kind::weak_bisim, sim_kind::coupled_sim,
                           sim_kind::correspondence_sim}) {
            rel g = greatest_relation(k, comb, carrier_kind::combined, {});
            if (!is_simulation(k, comb, g).holds) note("greatest fails own kind", i);
            stats.checks += 1;
            samples.push_back(std::move(g));
        }
        samples.push_back(greatest_relation(sim_kind::weak_bisim, comb, carrier_kind::combined,
                                            {{{pred_kind::reaches_barb, ""}, pred_mode::respect}}));

        for (const auto& r : samples) {
            const bool strong = is_simulation(sim_kind::strong_bisim, comb, r).holds;
            const bool weak = is_simulation(sim_kind::weak_bisim, comb, r).holds;
            const bool coupled = is_simulation(sim_kind::coupled_sim, comb, r).holds;
            const bool corr = is_simulation(sim_kind::correspondence_sim, comb, r).holds;
            stats.checks += 4;
            if (strong && !weak) note("strong-bisim without weak-bisim", i);
            if (weak && !corr) note("weak-bisim without correspondence-sim", i);
            if (coupled && r == r.closed_sym() && !weak) note("symmetric coupled-sim without weak-bisim", i);
            if (corr && !lemma5_containment(comb, r).holds) note("correspondence-sim not coupled-contained", i);
            if (comb.size() <= 5) {
                for (sim_kind k : {sim_kind::strong_bisim, sim_kind::weak_bisim, sim_kind::coupled_sim,
                                   sim_kind::correspondence_sim}) {
                    stats.checks += 1;
                    if (is_simulation(k, comb, r).holds != is_simulation_literal(k, comb, r).holds)
                        note("literal and optimized checkers disagree", i);
                }
            }
        }

        // union closure on two relations of the same kind
        for (sim_kind k : {sim_kind::weak_bisim, sim_kind::coupled_sim, sim_kind::correspondence_sim}) {
            const rel a = greatest_relation(k, comb, carrier_kind::combined,
                                            {{{pred_kind::reaches_barb, ""}, pred_mode::respect}});
            const rel b = greatest_relation(k, comb, carrier_kind::combined,
                                            {{{pred_kind::divergent, ""}, pred_mode::reflect}});
            stats.checks += 1;
            if (!is_simulation(k, comb, a.united(b)).holds) note("union of simulations fails kind", i);
        }

        // operational-correspondence variant ladder under the strong preconditions
        if (auto strong_args = prepare_lemma_args(lemma_id::oc_strong, doc, static_cast<std::uint64_t>(i))) {
            const rel& rt = *strong_args->rel_target;
            stats.checks += 1;
            if (operational_correspondence(doc.enc, rt, oc_variant::strong).holds &&
                !operational_correspondence(doc.enc, rt, oc_variant::standard).holds)
                note("strong correspondence without standard correspondence", i);
        }
        {
            const rel rt = doc.relations.at("RT").closed_refl().closed_trans();
            stats.checks += 1;
            if (operational_correspondence(doc.enc, rt, oc_variant::standard).holds &&
                !operational_correspondence(doc.enc, rt, oc_variant::weak).holds)
                note("standard correspondence without weak correspondence", i);
        }

        // full abstraction is insensitive to inverting both relations
        {
            const rel rs = doc.relations.at("RS");
            const rel rt = doc.relations.at("RT");
            stats.checks += 1;
            if (full_abstraction(doc.enc, rs, rt).holds !=
                full_abstraction(doc.enc, rs.inverted(), rt.inverted()).holds)
                note("full abstraction not inversion-symmetric", i);
        }
    }
    return stats;
}

} // namespace encheck

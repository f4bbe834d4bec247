#include "encheck/witness.hpp"

#include <algorithm>

namespace encheck {

const char* lemma_token(lemma_id id) {
    switch (id) {
        case lemma_id::pred_pres: return "PRED-PRES";
        case lemma_id::div_refl: return "DIV-REFL";
        case lemma_id::barb_sens: return "BARB-SENS";
        case lemma_id::succ_sens: return "SUCC-SENS";
        case lemma_id::fa_preorder: return "FA-PREORDER";
        case lemma_id::fa_equiv: return "FA-EQUIV";
        case lemma_id::oc_strong: return "OC-STRONG";
        case lemma_id::oc_standard: return "OC-STANDARD";
        case lemma_id::oc_weak: return "OC-WEAK";
        case lemma_id::comb_div_succ: return "COMB-DIV-SUCC";
        case lemma_id::comb_two_pred: return "COMB-TWO-PRED";
        case lemma_id::comb_oc_succ: return "COMB-OC-SUCC";
        case lemma_id::comb_oc_succ_barb: return "COMB-OC-SUCC-BARB";
        case lemma_id::comb_triple: return "COMB-TRIPLE";
        case lemma_id::fa_restrict: return "FA-RESTRICT";
        case lemma_id::fa_oc: return "FA-OC";
        case lemma_id::fa_oc_rs_bisim: return "FA-OC-RS-BISIM";
        case lemma_id::fa_oc_surj: return "FA-OC-SURJ";
        case lemma_id::vg12: return "VG12";
    }
    return "?";
}

lemma_id parse_lemma(std::string_view token) {
    for (lemma_id id : lemma_catalogue)
        if (token == lemma_token(id)) return id;
    throw error(errc::unknown_lemma, "unknown lemma '" + std::string(token) + "'");
}

lemma_shape shape_of(lemma_id id) {
    switch (id) {
        case lemma_id::fa_restrict: return lemma_shape::agreement;
        case lemma_id::fa_oc_rs_bisim:
        case lemma_id::fa_oc_surj: return lemma_shape::implies;
        default: return lemma_shape::iff;
    }
}

bool all_hold(const std::vector<condition_result>& cs) {
    return std::all_of(cs.begin(), cs.end(), [](const condition_result& c) { return c.v.holds; });
}

// --- argument resolution --------------------------------------------------

namespace {

struct oc_family {
    oc_variant variant;
    sim_kind kind;
    strength str;
};

oc_family resolve_family(lemma_id id, const lemma_args& args) {
    oc_variant v = oc_variant::weak;
    switch (id) {
        case lemma_id::oc_strong: v = oc_variant::strong; break;
        case lemma_id::oc_standard: v = oc_variant::standard; break;
        case lemma_id::oc_weak: v = oc_variant::weak; break;
        case lemma_id::comb_triple: v = args.variant.value_or(oc_variant::standard); break;
        default: v = args.variant.value_or(oc_variant::weak); break;
    }
    switch (v) {
        case oc_variant::strong: return {v, sim_kind::strong_bisim, strength::has};
        case oc_variant::standard: return {v, sim_kind::weak_bisim, strength::reaches};
        case oc_variant::weak: return {v, sim_kind::correspondence_sim, strength::reaches};
    }
    return {oc_variant::weak, sim_kind::correspondence_sim, strength::reaches};
}

lemma_args resolved(const encoding_instance& enc, const lemma_args& args) {
    lemma_args out = args;
    if (!out.rel_source) out.rel_source = identity_rel(carrier_kind::source, enc.source.size());
    if (!out.rel_target) out.rel_target = identity_rel(carrier_kind::target, enc.target.size());
    return out;
}

void require_preds(lemma_id id, const lemma_args& args, std::size_t count) {
    if (args.preds.size() != count)
        throw error(errc::usage, std::string(lemma_token(id)) + " needs exactly " +
                                     std::to_string(count) + " predicate argument(s)");
}

verdict bool_verdict(bool ok, const std::string& detail) {
    verdict v;
    if (!ok) v.fail({"condition", {}, std::nullopt, detail});
    return v;
}

predicate success_pred(strength s) {
    return {s == strength::has ? pred_kind::has_success : pred_kind::reaches_success, ""};
}

predicate barb_pred(strength s) {
    return {s == strength::has ? pred_kind::has_barb : pred_kind::reaches_barb, ""};
}

// fast boolean subchecks used by the exhaustive oracle

bool containment_ok(const encoding_instance& enc, const rel& r, bool both) {
    for (int i = 0; i < enc.source_count(); ++i) {
        if (!r.contains(i, enc.encoded(i))) return false;
        if (both && !r.contains(enc.encoded(i), i)) return false;
    }
    return true;
}

bool respects_ok(const transition_system& sys, const rel& r, const predicate& pred, pred_mode mode) {
    for (auto [p, q] : r.pairs())
        if (!pair_satisfies(sys, p, q, pred, mode)) return false;
    return true;
}

bool restriction_eq_ok(const encoding_instance& enc, const rel& r, carrier_kind which,
                       const rel& expected) {
    return project_combined(enc, r, which) == expected;
}

bool encoded_pair_ok(const encoding_instance& enc, const rel& r, const rel& rt) {
    const int sn = enc.source_count();
    const int cn = enc.combined.size();
    for (int s = 0; s < sn; ++s)
        for (int c = sn; c < cn; ++c)
            if (r.contains(s, c) && !rt.contains(enc.mapping[static_cast<std::size_t>(s)], c - sn))
                return false;
    return true;
}

bool simkind_ok(sim_kind k, const transition_system& sys, const rel& r) {
    for (auto [p, q] : r.pairs())
        if (!simulation_pair_ok(k, sys, r, p, q)) return false;
    return true;
}

// report-building subconditions

condition_result cond_containment(const encoding_instance& enc, const rel& r, bool both) {
    verdict v;
    const auto& comb = enc.combined;
    for (int i = 0; i < enc.source_count(); ++i) {
        const int t = enc.encoded(i);
        if (!r.contains(i, t))
            v.fail({"containment", {comb.name_of(i), comb.name_of(t)}, std::nullopt,
                    "missing pair (S, [S])"});
        if (both && !r.contains(t, i))
            v.fail({"containment", {comb.name_of(t), comb.name_of(i)}, std::nullopt,
                    "missing pair ([S], S)"});
    }
    v.normalized();
    return {both ? "contains-minimal-witness-both" : "contains-minimal-witness", v};
}

condition_result cond_respect(const encoding_instance& enc, const rel& r, const predicate& pred,
                              pred_mode mode) {
    std::string name = std::string(pred_mode_token(mode)) + "(" + predicate_token(pred) + ")";
    return {name, relation_respect(r, enc.combined, pred, mode)};
}

condition_result cond_restriction(const encoding_instance& enc, const rel& r, carrier_kind which,
                                  const rel& expected) {
    const auto& sys = carrier_system(enc, which);
    const rel got = project_combined(enc, r, which);
    verdict v;
    for (int a = 0; a < expected.carrier_size(); ++a)
        for (int b = 0; b < expected.carrier_size(); ++b) {
            if (got.contains(a, b) && !expected.contains(a, b))
                v.fail({"restriction-extra", {sys.name_of(a), sys.name_of(b)}, std::nullopt,
                        "pair in the restriction but not in the given relation"});
            if (!got.contains(a, b) && expected.contains(a, b))
                v.fail({"restriction-missing", {sys.name_of(a), sys.name_of(b)}, std::nullopt,
                        "pair in the given relation but not in the restriction"});
        }
    v.normalized();
    return {std::string(carrier_token(which)) + "-restriction", v};
}

condition_result cond_encoded_pair(const encoding_instance& enc, const rel& r, const rel& rt) {
    verdict v;
    const auto& comb = enc.combined;
    const int sn = enc.source_count();
    for (int s = 0; s < sn; ++s)
        for (int c = sn; c < comb.size(); ++c)
            if (r.contains(s, c) && !rt.contains(enc.mapping[static_cast<std::size_t>(s)], c - sn))
                v.fail({"encoded-pair", {comb.name_of(s), comb.name_of(c)}, std::nullopt,
                        "([S], T) not in the target relation"});
    v.normalized();
    return {"encoded-pair-condition", v};
}

condition_result cond_preorder(const rel& r, const std::string& name) {
    return {name, bool_verdict(is_preorder(r), "relation is not a preorder")};
}

condition_result cond_transitive(const rel& r, const std::string& name) {
    return {name, bool_verdict(r == r.closed_trans(), "relation is not transitive")};
}

condition_result cond_simkind(sim_kind k, const transition_system& sys, const rel& r,
                              const std::string& prefix) {
    return {prefix + sim_kind_token(k), is_simulation(k, sys, r)};
}

} // namespace

// --- witnesses --------------------------------------------------------------

rel minimal_witness(const encoding_instance& enc) {
    rel r(carrier_kind::combined, enc.combined.size());
    for (int i = 0; i < enc.source_count(); ++i) r.add(i, enc.encoded(i));
    return r;
}

rel oc_witness(const encoding_instance& enc, const rel& rt_over_target) {
    rel base = minimal_witness(enc).united(lift_to_combined(enc, rt_over_target));
    return base.closed_refl().closed_trans();
}

rel fa_witness_preorder(const encoding_instance& enc, const rel& rs, const rel& rt) {
    if (!is_preorder(rs) || !is_preorder(rt))
        throw error(errc::precondition, "full-abstraction witness needs preorder arguments");
    const rel mw = minimal_witness(enc);
    return lift_to_combined(enc, rs)
        .united(lift_to_combined(enc, rt))
        .united(mw)
        .united(mw.inverted())
        .closed_trans();
}

std::pair<rel, rel> fa_witness_equivalence(const encoding_instance& enc, const rel& rs, const rel& rt) {
    if (!is_equivalence(rs) || !is_equivalence(rt))
        throw error(errc::precondition, "full-abstraction witness needs equivalence arguments");
    const rel core = lift_to_combined(enc, rs).united(lift_to_combined(enc, rt)).united(minimal_witness(enc));
    return {core.closed_refl().closed_sym().closed_trans(), core};
}

// --- lemma catalogue ---------------------------------------------------------

std::vector<condition_result> lemma_preconditions(lemma_id id, const encoding_instance& enc,
                                                  const lemma_args& args0) {
    const lemma_args args = resolved(enc, args0);
    const rel& rs = *args.rel_source;
    const rel& rt = *args.rel_target;
    std::vector<condition_result> out;
    auto family = resolve_family(id, args);

    switch (id) {
        case lemma_id::oc_strong:
        case lemma_id::oc_standard:
        case lemma_id::oc_weak:
            out.push_back(cond_preorder(rt, "rel-target-preorder"));
            out.push_back(cond_simkind(family.kind, enc.target, rt, "rel-target-"));
            break;
        case lemma_id::comb_oc_succ:
        case lemma_id::comb_oc_succ_barb:
        case lemma_id::comb_triple:
            out.push_back(cond_preorder(rt, "rel-target-preorder"));
            out.push_back(cond_simkind(family.kind, enc.target, rt, "rel-target-"));
            out.push_back({"rel-target-respects-success",
                           relation_respect(rt, enc.target, success_pred(family.str), pred_mode::respect)});
            if (id == lemma_id::comb_oc_succ_barb)
                out.push_back({"rel-target-respects-barbs",
                               relation_respect(rt, enc.target, barb_pred(family.str), pred_mode::respect)});
            if (id == lemma_id::comb_triple)
                out.push_back({"rel-target-reflects-divergence",
                               relation_respect(rt, enc.target, {pred_kind::divergent, ""}, pred_mode::reflect)});
            break;
        case lemma_id::fa_preorder:
            out.push_back(cond_preorder(rs, "rel-source-preorder"));
            out.push_back(cond_preorder(rt, "rel-target-preorder"));
            break;
        case lemma_id::fa_equiv:
        case lemma_id::fa_oc:
        case lemma_id::fa_oc_rs_bisim:
        case lemma_id::fa_oc_surj:
            out.push_back({"rel-source-equivalence", bool_verdict(is_equivalence(rs), "not an equivalence")});
            out.push_back({"rel-target-equivalence", bool_verdict(is_equivalence(rt), "not an equivalence")});
            break;
        case lemma_id::fa_restrict: {
            out.push_back({"full-abstraction", full_abstraction(enc, rs, rt)});
            const rel r = canonical_witness(id, enc, args);
            out.push_back(cond_transitive(r, "rel-transitive"));
            out.push_back(cond_containment(enc, r, true));
            break;
        }
        default:
            break;
    }
    return out;
}

std::vector<condition_result> lemma_lhs_parts(lemma_id id, const encoding_instance& enc,
                                              const lemma_args& args0) {
    const lemma_args args = resolved(enc, args0);
    const rel& rs = *args.rel_source;
    const rel& rt = *args.rel_target;
    const auto family = resolve_family(id, args);
    std::vector<condition_result> out;

    switch (id) {
        case lemma_id::pred_pres: {
            require_preds(id, args, 1);
            const auto& [p, m] = args.preds[0];
            out.push_back({"pred-criterion " + std::string(pred_mode_token(m)) + "(" + predicate_token(p) + ")",
                           check_pred_criterion(enc, p, m)});
            break;
        }
        case lemma_id::div_refl:
            out.push_back({"divergence-reflection", divergence_reflection(enc)});
            break;
        case lemma_id::barb_sens:
            out.push_back({"barb-sensitiveness", barb_sensitiveness(enc, args.mode, args.str)});
            break;
        case lemma_id::succ_sens:
            out.push_back({"success-sensitiveness", success_sensitiveness(enc, args.str)});
            break;
        case lemma_id::fa_preorder:
        case lemma_id::fa_equiv:
            out.push_back({"full-abstraction", full_abstraction(enc, rs, rt)});
            break;
        case lemma_id::oc_strong:
        case lemma_id::oc_standard:
        case lemma_id::oc_weak:
            out.push_back({"operational-correspondence", operational_correspondence(enc, rt, family.variant)});
            break;
        case lemma_id::comb_div_succ:
            out.push_back({"divergence-reflection", divergence_reflection(enc)});
            out.push_back({"success-sensitiveness", success_sensitiveness(enc, strength::reaches)});
            break;
        case lemma_id::comb_two_pred: {
            require_preds(id, args, 2);
            for (const auto& [p, m] : args.preds)
                out.push_back({"pred-criterion " + std::string(pred_mode_token(m)) + "(" + predicate_token(p) + ")",
                               check_pred_criterion(enc, p, m)});
            break;
        }
        case lemma_id::comb_oc_succ:
            out.push_back({"success-sensitiveness", success_sensitiveness(enc, family.str)});
            out.push_back({"operational-correspondence", operational_correspondence(enc, rt, family.variant)});
            break;
        case lemma_id::comb_oc_succ_barb:
            out.push_back({"success-sensitiveness", success_sensitiveness(enc, family.str)});
            out.push_back({"operational-correspondence", operational_correspondence(enc, rt, family.variant)});
            out.push_back({"barb-sensitiveness", barb_sensitiveness(enc, pred_mode::respect, family.str)});
            break;
        case lemma_id::comb_triple:
            out.push_back({"divergence-reflection", divergence_reflection(enc)});
            out.push_back({"success-sensitiveness", success_sensitiveness(enc, family.str)});
            out.push_back({"operational-correspondence", operational_correspondence(enc, rt, family.variant)});
            break;
        case lemma_id::fa_restrict: {
            const rel r = canonical_witness(id, enc, args);
            out.push_back(cond_restriction(enc, r, carrier_kind::source, rs));
            break;
        }
        case lemma_id::fa_oc:
        case lemma_id::fa_oc_rs_bisim:
            out.push_back({"full-abstraction", full_abstraction(enc, rs, rt)});
            out.push_back({"operational-correspondence", operational_correspondence(enc, rt, oc_variant::standard)});
            out.push_back(cond_simkind(sim_kind::weak_bisim, enc.target, rt, "rel-target-"));
            break;
        case lemma_id::fa_oc_surj:
            out.push_back({"surjective", is_surjective(enc)});
            out.push_back({"full-abstraction", full_abstraction(enc, rs, rt)});
            out.push_back({"operational-correspondence", operational_correspondence(enc, rt, oc_variant::standard)});
            break;
        case lemma_id::vg12:
            out.push_back({"vg12-membership", vg12_check(enc, args.kind, args.constraints)});
            break;
    }
    return out;
}

rel canonical_witness(lemma_id id, const encoding_instance& enc, const lemma_args& args0) {
    const lemma_args args = resolved(enc, args0);
    const rel& rs = *args.rel_source;
    const rel& rt = *args.rel_target;
    switch (id) {
        case lemma_id::pred_pres:
        case lemma_id::div_refl:
        case lemma_id::barb_sens:
        case lemma_id::succ_sens:
        case lemma_id::comb_div_succ:
        case lemma_id::comb_two_pred:
            return minimal_witness(enc);
        case lemma_id::oc_strong:
        case lemma_id::oc_standard:
        case lemma_id::oc_weak:
        case lemma_id::comb_oc_succ:
        case lemma_id::comb_oc_succ_barb:
        case lemma_id::comb_triple:
            return oc_witness(enc, rt);
        case lemma_id::fa_preorder:
        case lemma_id::fa_oc:
            return fa_witness_preorder(enc, rs, rt);
        case lemma_id::fa_restrict: {
            if (args.rel_combined) return *args.rel_combined;
            // transitive and contains both orientations by construction
            const rel mw = minimal_witness(enc);
            return lift_to_combined(enc, rs)
                .united(lift_to_combined(enc, rt))
                .united(mw)
                .united(mw.inverted())
                .closed_trans();
        }
        case lemma_id::fa_equiv:
            return fa_witness_equivalence(enc, rs, rt).first;
        case lemma_id::fa_oc_rs_bisim:
        case lemma_id::fa_oc_surj:
            return lift_to_combined(enc, rs);
        case lemma_id::vg12:
            return greatest_relation(args.kind, enc.combined, carrier_kind::combined, args.constraints);
    }
    return minimal_witness(enc);
}

std::vector<condition_result> lemma_rhs_conditions(lemma_id id, const encoding_instance& enc,
                                                   const lemma_args& args0, const rel& r) {
    const lemma_args args = resolved(enc, args0);
    const rel& rs = *args.rel_source;
    const rel& rt = *args.rel_target;
    const auto family = resolve_family(id, args);
    const auto& comb = enc.combined;
    std::vector<condition_result> out;

    switch (id) {
        case lemma_id::pred_pres: {
            require_preds(id, args, 1);
            out.push_back(cond_containment(enc, r, false));
            out.push_back(cond_respect(enc, r, args.preds[0].first, args.preds[0].second));
            break;
        }
        case lemma_id::div_refl:
            out.push_back(cond_containment(enc, r, false));
            out.push_back(cond_respect(enc, r, {pred_kind::divergent, ""}, pred_mode::reflect));
            break;
        case lemma_id::barb_sens:
            out.push_back(cond_containment(enc, r, false));
            out.push_back(cond_respect(enc, r, barb_pred(args.str), args.mode));
            break;
        case lemma_id::succ_sens:
            out.push_back(cond_containment(enc, r, false));
            out.push_back(cond_respect(enc, r, success_pred(args.str), pred_mode::respect));
            break;
        case lemma_id::comb_div_succ:
            out.push_back(cond_containment(enc, r, false));
            out.push_back(cond_respect(enc, r, {pred_kind::divergent, ""}, pred_mode::reflect));
            out.push_back(cond_respect(enc, r, success_pred(strength::reaches), pred_mode::respect));
            break;
        case lemma_id::comb_two_pred: {
            require_preds(id, args, 2);
            out.push_back(cond_containment(enc, r, false));
            for (const auto& [p, m] : args.preds) out.push_back(cond_respect(enc, r, p, m));
            break;
        }
        case lemma_id::fa_preorder:
            out.push_back(cond_containment(enc, r, true));
            out.push_back(cond_restriction(enc, r, carrier_kind::source, rs));
            out.push_back(cond_restriction(enc, r, carrier_kind::target, rt));
            out.push_back(cond_transitive(r, "transitive"));
            break;
        case lemma_id::fa_equiv: {
            const rel sym = r.closed_sym();
            out.push_back(cond_containment(enc, r, false));
            auto src = cond_restriction(enc, sym, carrier_kind::source, rs);
            src.name = "sym-source-restriction";
            out.push_back(std::move(src));
            auto tgt = cond_restriction(enc, sym, carrier_kind::target, rt);
            tgt.name = "sym-target-restriction";
            out.push_back(std::move(tgt));
            out.push_back(cond_preorder(sym, "sym-preorder"));
            break;
        }
        case lemma_id::oc_strong:
        case lemma_id::oc_standard:
        case lemma_id::oc_weak:
            out.push_back(cond_containment(enc, r, false));
            out.push_back(cond_restriction(enc, r, carrier_kind::target, rt));
            out.push_back(cond_encoded_pair(enc, r, rt));
            out.push_back(cond_preorder(r, "preorder"));
            out.push_back(cond_simkind(family.kind, comb, r, ""));
            break;
        case lemma_id::comb_oc_succ:
        case lemma_id::comb_oc_succ_barb:
            out.push_back(cond_containment(enc, r, false));
            out.push_back(cond_restriction(enc, r, carrier_kind::target, rt));
            out.push_back(cond_respect(enc, r, success_pred(family.str), pred_mode::respect));
            if (id == lemma_id::comb_oc_succ_barb)
                out.push_back(cond_respect(enc, r, barb_pred(family.str), pred_mode::respect));
            out.push_back(cond_encoded_pair(enc, r, rt));
            out.push_back(cond_preorder(r, "preorder"));
            out.push_back(cond_simkind(family.kind, comb, r, ""));
            break;
        case lemma_id::comb_triple:
            out.push_back(cond_containment(enc, r, false));
            out.push_back(cond_restriction(enc, r, carrier_kind::target, rt));
            out.push_back(cond_encoded_pair(enc, r, rt));
            out.push_back(cond_respect(enc, r, {pred_kind::divergent, ""}, pred_mode::reflect));
            out.push_back(cond_respect(enc, r, success_pred(family.str), pred_mode::respect));
            out.push_back(cond_preorder(r, "preorder"));
            out.push_back(cond_simkind(family.kind, comb, r, ""));
            break;
        case lemma_id::fa_restrict: {
            verdict v;
            for (int a = 0; a < enc.source_count(); ++a)
                for (int b = 0; b < enc.source_count(); ++b) {
                    const int ta = enc.encoded(a);
                    const int tb = enc.encoded(b);
                    const bool in_rt = rt.contains(ta - enc.source_count(), tb - enc.source_count());
                    const bool in_r = r.contains(ta, tb);
                    if (in_rt != in_r)
                        v.fail({"encoded-pair-agreement", {comb.name_of(ta), comb.name_of(tb)}, std::nullopt,
                                in_rt ? "in the target relation but not in the combined relation"
                                      : "in the combined relation but not in the target relation"});
                }
            v.normalized();
            out.push_back({"encoded-pair-agreement", std::move(v)});
            break;
        }
        case lemma_id::fa_oc:
            out.push_back(cond_containment(enc, r, true));
            out.push_back(cond_restriction(enc, r, carrier_kind::source, rs));
            out.push_back(cond_restriction(enc, r, carrier_kind::target, rt));
            out.push_back(cond_transitive(r, "transitive"));
            out.push_back(cond_simkind(sim_kind::weak_bisim, comb, r, ""));
            break;
        case lemma_id::fa_oc_rs_bisim:
            out.push_back(cond_simkind(sim_kind::weak_bisim, enc.source, rs, "rel-source-"));
            break;
        case lemma_id::fa_oc_surj: {
            const bool rs_bisim = is_simulation(sim_kind::weak_bisim, enc.source, rs).holds;
            const bool rt_bisim = is_simulation(sim_kind::weak_bisim, enc.target, rt).holds;
            out.push_back({"rs-bisim-iff-rt-bisim",
                           bool_verdict(rs_bisim == rt_bisim,
                                        std::string("rel-source ") + (rs_bisim ? "is" : "is not") +
                                            " a bisimulation, rel-target " + (rt_bisim ? "is" : "is not"))});
            break;
        }
        case lemma_id::vg12:
            out.push_back(cond_containment(enc, r, false));
            out.push_back(cond_simkind(args.kind, comb, r, ""));
            for (const auto& c : args.constraints)
                out.push_back(cond_respect(enc, r, c.pred, c.mode));
            break;
    }
    return out;
}

bool lemma_rhs_fast(lemma_id id, const encoding_instance& enc, const lemma_args& args0, const rel& r) {
    const lemma_args args = resolved(enc, args0);
    const rel& rs = *args.rel_source;
    const rel& rt = *args.rel_target;
    const auto family = resolve_family(id, args);
    const auto& comb = enc.combined;

    switch (id) {
        case lemma_id::pred_pres:
            require_preds(id, args, 1);
            return containment_ok(enc, r, false) &&
                   respects_ok(comb, r, args.preds.at(0).first, args.preds.at(0).second);
        case lemma_id::div_refl:
            return containment_ok(enc, r, false) &&
                   respects_ok(comb, r, {pred_kind::divergent, ""}, pred_mode::reflect);
        case lemma_id::barb_sens:
            return containment_ok(enc, r, false) && respects_ok(comb, r, barb_pred(args.str), args.mode);
        case lemma_id::succ_sens:
            return containment_ok(enc, r, false) &&
                   respects_ok(comb, r, success_pred(args.str), pred_mode::respect);
        case lemma_id::comb_div_succ:
            return containment_ok(enc, r, false) &&
                   respects_ok(comb, r, {pred_kind::divergent, ""}, pred_mode::reflect) &&
                   respects_ok(comb, r, success_pred(strength::reaches), pred_mode::respect);
        case lemma_id::comb_two_pred:
            require_preds(id, args, 2);
            return containment_ok(enc, r, false) &&
                   respects_ok(comb, r, args.preds.at(0).first, args.preds.at(0).second) &&
                   respects_ok(comb, r, args.preds.at(1).first, args.preds.at(1).second);
        case lemma_id::fa_preorder:
            return containment_ok(enc, r, true) && restriction_eq_ok(enc, r, carrier_kind::source, rs) &&
                   restriction_eq_ok(enc, r, carrier_kind::target, rt) && r == r.closed_trans();
        case lemma_id::fa_equiv: {
            if (!containment_ok(enc, r, false)) return false;
            const rel sym = r.closed_sym();
            return restriction_eq_ok(enc, sym, carrier_kind::source, rs) &&
                   restriction_eq_ok(enc, sym, carrier_kind::target, rt) && is_preorder(sym);
        }
        case lemma_id::oc_strong:
        case lemma_id::oc_standard:
        case lemma_id::oc_weak:
            return containment_ok(enc, r, false) && restriction_eq_ok(enc, r, carrier_kind::target, rt) &&
                   encoded_pair_ok(enc, r, rt) && is_preorder(r) && simkind_ok(family.kind, comb, r);
        case lemma_id::comb_oc_succ:
            return containment_ok(enc, r, false) && restriction_eq_ok(enc, r, carrier_kind::target, rt) &&
                   respects_ok(comb, r, success_pred(family.str), pred_mode::respect) &&
                   encoded_pair_ok(enc, r, rt) && is_preorder(r) && simkind_ok(family.kind, comb, r);
        case lemma_id::comb_oc_succ_barb:
            return containment_ok(enc, r, false) && restriction_eq_ok(enc, r, carrier_kind::target, rt) &&
                   respects_ok(comb, r, success_pred(family.str), pred_mode::respect) &&
                   respects_ok(comb, r, barb_pred(family.str), pred_mode::respect) &&
                   encoded_pair_ok(enc, r, rt) && is_preorder(r) && simkind_ok(family.kind, comb, r);
        case lemma_id::comb_triple:
            return containment_ok(enc, r, false) && restriction_eq_ok(enc, r, carrier_kind::target, rt) &&
                   encoded_pair_ok(enc, r, rt) &&
                   respects_ok(comb, r, {pred_kind::divergent, ""}, pred_mode::reflect) &&
                   respects_ok(comb, r, success_pred(family.str), pred_mode::respect) && is_preorder(r) &&
                   simkind_ok(family.kind, comb, r);
        case lemma_id::fa_oc:
            return containment_ok(enc, r, true) && restriction_eq_ok(enc, r, carrier_kind::source, rs) &&
                   restriction_eq_ok(enc, r, carrier_kind::target, rt) && r == r.closed_trans() &&
                   simkind_ok(sim_kind::weak_bisim, comb, r);
        case lemma_id::vg12:
            if (!containment_ok(enc, r, false) || !simkind_ok(args.kind, comb, r)) return false;
            for (const auto& c : args.constraints)
                if (!respects_ok(comb, r, c.pred, c.mode)) return false;
            return true;
        case lemma_id::fa_restrict:
        case lemma_id::fa_oc_rs_bisim:
        case lemma_id::fa_oc_surj:
            throw error(errc::usage, std::string(lemma_token(id)) + " has no relation-shaped right-hand side");
    }
    return false;
}

witness_report verify_lemma(lemma_id id, const encoding_instance& enc, const lemma_args& args0) {
    const lemma_args args = resolved(enc, args0);
    witness_report rep;
    rep.lemma = id;
    rep.shape = shape_of(id);
    rep.preconditions = lemma_preconditions(id, enc, args);
    if (!all_hold(rep.preconditions)) {
        std::string failing;
        for (const auto& c : rep.preconditions)
            if (!c.v.holds) failing += (failing.empty() ? "" : ", ") + c.name;
        throw error(errc::precondition, std::string(lemma_token(id)) + ": " + failing);
    }
    rep.lhs_parts = lemma_lhs_parts(id, enc, args);
    rep.lhs = all_hold(rep.lhs_parts);
    rep.witness = canonical_witness(id, enc, args);
    rep.rhs = lemma_rhs_conditions(id, enc, args, rep.witness);
    rep.rhs_holds = all_hold(rep.rhs);
    rep.verdict = rep.shape == lemma_shape::implies ? (!rep.lhs || rep.rhs_holds)
                                                    : (rep.lhs == rep.rhs_holds);
    return rep;
}

verdict verify_rhs_only(lemma_id id, const encoding_instance& enc, const rel& r, const lemma_args& args) {
    if (id == lemma_id::fa_oc_rs_bisim || id == lemma_id::fa_oc_surj)
        throw error(errc::usage, std::string(lemma_token(id)) + " has no relation-shaped right-hand side");
    if (r.over() != carrier_kind::combined || r.carrier_size() != enc.combined.size())
        throw error(errc::usage, "relation must range over the combined domain");
    verdict v;
    for (const auto& c : lemma_rhs_conditions(id, enc, args, r)) {
        if (c.v.holds) continue;
        v.fail({"rhs-condition", {}, std::nullopt, c.name});
        v.merge(c.v);
    }
    v.normalized();
    return v;
}

verdict fa_restriction_equiv(const encoding_instance& enc, const rel& rs, const rel& rt, const rel& r) {
    if (!full_abstraction(enc, rs, rt).holds)
        throw error(errc::precondition, "encoding is not fully abstract for the given relations");
    if (!(r == r.closed_trans()))
        throw error(errc::precondition, "combined relation is not transitive");
    if (!containment_ok(enc, r, true))
        throw error(errc::precondition, "combined relation misses a minimal-witness pair");

    lemma_args args;
    args.rel_source = rs;
    args.rel_target = rt;
    args.rel_combined = r;
    const bool left = all_hold(lemma_lhs_parts(lemma_id::fa_restrict, enc, args));
    const bool right = all_hold(lemma_rhs_conditions(lemma_id::fa_restrict, enc, args, r));
    verdict v;
    if (left != right)
        v.fail({"restriction-agreement", {}, std::nullopt,
                std::string("left side ") + (left ? "holds" : "fails") + ", right side " +
                    (right ? "holds" : "fails")});
    return v;
}

verdict vg12_check(const encoding_instance& enc, sim_kind kind,
                   const std::vector<respect_constraint>& constraints) {
    const rel g = greatest_relation(kind, enc.combined, carrier_kind::combined, constraints);
    verdict v;
    for (int i = 0; i < enc.source_count(); ++i) {
        const int t = enc.encoded(i);
        if (!g.contains(i, t))
            v.fail({"vg12-membership", {enc.combined.name_of(i), enc.combined.name_of(t)}, std::nullopt,
                    "source state and translation are not related by the greatest relation"});
    }
    v.normalized();
    return v;
}

} // namespace encheck

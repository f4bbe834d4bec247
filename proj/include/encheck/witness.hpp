#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "encheck/criteria.hpp"
#include "encheck/model.hpp"
#include "encheck/rel.hpp"
#include "encheck/simulation.hpp"
#include "encheck/verdict.hpp"

namespace encheck {

// Witness relations constructed here always live on the combined carrier;
// source and target relation arguments are lifted onto it as needed.

enum class lemma_id {
    pred_pres,
    div_refl,
    barb_sens,
    succ_sens,
    fa_preorder,
    fa_equiv,
    oc_strong,
    oc_standard,
    oc_weak,
    comb_div_succ,
    comb_two_pred,
    comb_oc_succ,
    comb_oc_succ_barb,
    comb_triple,
    fa_restrict,
    fa_oc,
    fa_oc_rs_bisim,
    fa_oc_surj,
    vg12,
};

inline constexpr std::array<lemma_id, 19> lemma_catalogue = {
    lemma_id::pred_pres,     lemma_id::div_refl,      lemma_id::barb_sens,
    lemma_id::succ_sens,     lemma_id::fa_preorder,   lemma_id::fa_equiv,
    lemma_id::oc_strong,     lemma_id::oc_standard,   lemma_id::oc_weak,
    lemma_id::comb_div_succ, lemma_id::comb_two_pred, lemma_id::comb_oc_succ,
    lemma_id::comb_oc_succ_barb, lemma_id::comb_triple, lemma_id::fa_restrict,
    lemma_id::fa_oc,         lemma_id::fa_oc_rs_bisim, lemma_id::fa_oc_surj,
    lemma_id::vg12,
};

const char* lemma_token(lemma_id id);
lemma_id parse_lemma(std::string_view token); // throws error(unknown_lemma)

/// iff lemmas relate a criterion to witness conditions in both directions;
/// implies lemmas state a one-way consequence; agreement lemmas state that
/// two conditions always decide alike.
enum class lemma_shape { iff, implies, agreement };
lemma_shape shape_of(lemma_id id);

struct lemma_args {
    std::optional<rel> rel_source;   // defaults to the identity on sources
    std::optional<rel> rel_target;   // defaults to the identity on targets
    std::optional<rel> rel_combined; // only FA-RESTRICT; defaults to the canonical witness
    std::vector<std::pair<predicate, pred_mode>> preds; // PRED-PRES takes one, COMB-TWO-PRED two
    std::optional<oc_variant> variant;                  // combined lemmas only
    pred_mode mode = pred_mode::respect;                // BARB-SENS
    strength str = strength::reaches;                   // BARB-SENS and SUCC-SENS
    sim_kind kind = sim_kind::correspondence_sim;       // VG12
    std::vector<respect_constraint> constraints;        // VG12
};

struct condition_result {
    std::string name;
    verdict v;
};

bool all_hold(const std::vector<condition_result>& cs);

struct witness_report {
    lemma_id lemma = lemma_id::pred_pres;
    lemma_shape shape = lemma_shape::iff;
    std::vector<condition_result> preconditions;
    std::vector<condition_result> lhs_parts;
    bool lhs = false;
    std::vector<condition_result> rhs;
    bool rhs_holds = false;
    bool verdict = false; // iff/agreement: lhs == rhs_holds; implies: !lhs || rhs_holds
    rel witness;
};

/// { (S, [S]) | S source state } over the combined carrier.
rel minimal_witness(const encoding_instance& enc);

/// trans(refl(minimal witness u rel-target)) over the combined carrier.
rel oc_witness(const encoding_instance& enc, const rel& rt_over_target);

/// trans(rel-source u rel-target u both orientations of the minimal
/// witness); requires both arguments to be preorders.
rel fa_witness_preorder(const encoding_instance& enc, const rel& rs, const rel& rt);

/// Returns the orientation-free closure trans(sym(refl(core))) together with
/// the un-symmetrized core rel-source u rel-target u minimal witness;
/// requires both arguments to be equivalences.
std::pair<rel, rel> fa_witness_equivalence(const encoding_instance& enc, const rel& rs, const rel& rt);

std::vector<condition_result> lemma_preconditions(lemma_id id, const encoding_instance& enc,
                                                  const lemma_args& args);
std::vector<condition_result> lemma_lhs_parts(lemma_id id, const encoding_instance& enc,
                                              const lemma_args& args);
std::vector<condition_result> lemma_rhs_conditions(lemma_id id, const encoding_instance& enc,
                                                   const lemma_args& args, const rel& r);
/// Boolean fast path of lemma_rhs_conditions, used by the exhaustive oracle.
bool lemma_rhs_fast(lemma_id id, const encoding_instance& enc, const lemma_args& args, const rel& r);
rel canonical_witness(lemma_id id, const encoding_instance& enc, const lemma_args& args);

/// Evaluates the lemma on its canonical witness; throws E_PRECONDITION when
/// a lemma precondition fails.
witness_report verify_lemma(lemma_id id, const encoding_instance& enc, const lemma_args& args);

/// Checks the lemma's right-hand side on a user-supplied combined relation.
verdict verify_rhs_only(lemma_id id, const encoding_instance& enc, const rel& r, const lemma_args& args);

/// Both sides of the restriction-equivalence lemma must agree; preconditions
/// are full abstraction, transitivity of r and containment of the minimal
/// witness in both orientations.
verdict fa_restriction_equiv(const encoding_instance& enc, const rel& rs, const rel& rt, const rel& r);

/// Every source state related to its translation by the greatest relation of
/// the chosen kind under the given constraints.
verdict vg12_check(const encoding_instance& enc, sim_kind kind,
                   const std::vector<respect_constraint>& constraints);

} // namespace encheck

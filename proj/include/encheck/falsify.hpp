#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "encheck/generate.hpp"
#include "encheck/witness.hpp"

namespace encheck {

struct falsify_report {
    lemma_id lemma = lemma_id::pred_pres;
    int attempted = 0;
    int preconditions_held = 0;
    int discrepancies = 0;
    double elapsed_seconds = 0.0;
    std::vector<std::string> dumps; // replayable instance documents, one per discrepancy
};

/// Builds lemma arguments from a generated instance, repairing the relation
/// candidates toward the lemma's preconditions by closure and pair-dropping;
/// returns nothing when 16 repair rounds do not reach them.
std::optional<lemma_args> prepare_lemma_args(lemma_id id, const instance_document& doc,
                                             std::uint64_t index);

/// Runs verify_lemma over generated instances and records every failing
/// lemma verdict with a replayable dump.
falsify_report falsify(lemma_id id, const gen_config& config, int iterations);
std::vector<falsify_report> falsify_all(const gen_config& config, int iterations);

/// Union of all relations of the kind satisfying the constraints, by
/// exhaustive enumeration; carriers above 4 states are rejected E_TOO_LARGE.
rel brute_force_greatest(sim_kind k, const transition_system& sys, carrier_kind over,
                         const std::vector<respect_constraint>& constraints);

/// Whether any relation over the combined domain satisfies the lemma's full
/// right-hand side; combined domains above 4 states are rejected E_TOO_LARGE.
bool brute_force_exists_rhs(lemma_id id, const encoding_instance& enc, const lemma_args& args);

struct oracle_stats {
    int instances = 0;
    int greatest_comparisons = 0;
    int lemma_comparisons = 0;
    int mismatches = 0;
    std::vector<std::string> notes;
};

/// Cross-validates the fixpoint engine and the canonical-witness decisions
/// against the exhaustive oracles on small generated instances.
oracle_stats run_oracle_agreement(const gen_config& config, int instances);

struct hierarchy_stats {
    int instances = 0;
    int checks = 0;
    int violations = 0;
    std::vector<std::string> notes;
};

/// Simulation-kind inclusion properties, coupled/bisimulation links,
/// coupled-simulation containment for correspondence simulations, and
/// literal-versus-optimized checker agreement over a generated corpus.
hierarchy_stats run_hierarchy_checks(const gen_config& config, int instances);

} // namespace encheck

#pragma once

#include <string_view>
#include <vector>

#include "encheck/model.hpp"
#include "encheck/rel.hpp"
#include "encheck/verdict.hpp"

namespace encheck {

enum class sim_kind { strong_bisim, weak_bisim, coupled_sim, correspondence_sim };

const char* sim_kind_token(sim_kind k);
sim_kind parse_sim_kind(std::string_view token); // throws error(usage)

struct respect_constraint {
    predicate pred;
    pred_mode mode = pred_mode::respect;
};

/// Per-pair predicate condition: preserve is left-to-right, reflect
/// right-to-left, respect both. Barb predicates without a concrete barb
/// quantify over the system's alphabet.
bool pair_satisfies(const transition_system& sys, int p, int q, const predicate& pred, pred_mode mode);
bool pair_satisfies_all(const transition_system& sys, int p, int q,
                        const std::vector<respect_constraint>& constraints);

verdict relation_respect(const rel& r, const transition_system& sys, const predicate& pred, pred_mode mode);

/// Clause check for one pair against the current relation content.
bool simulation_pair_ok(sim_kind k, const transition_system& sys, const rel& r, int p, int q);

/// Simulation checks with the finite clause realization: single-step
/// challenges answered by weak steps (plus the coupling clause for coupled
/// simulations and the catch-up clause over all weak derivatives for
/// correspondence simulations).
verdict is_simulation(sim_kind k, const transition_system& sys, const rel& r);

/// Same kinds with literal weak-step challenges everywhere; kept as a
/// slower reference realization.
verdict is_simulation_literal(sim_kind k, const transition_system& sys, const rel& r);

/// Largest relation over the carrier satisfying the kind's clauses and all
/// per-pair constraints: start from every constraint-satisfying pair and
/// delete clause violators (in pair order) until stable.
rel greatest_relation(sim_kind k, const transition_system& sys, carrier_kind over,
                      const std::vector<respect_constraint>& constraints);

struct respect_flags {
    predicate pred;
    bool preserves = false;
    bool reflects = false;
};

struct rel_kind_report {
    bool reflexive = false;
    bool symmetric = false;
    bool transitive = false;
    bool preorder = false;
    bool equivalence = false;
    bool strong_bisim = false;
    bool weak_bisim = false;
    bool coupled_sim = false;
    bool correspondence_sim = false;
    std::vector<respect_flags> respects; // divergent, success and barb predicates
};

rel_kind_report relation_properties(const rel& r, const transition_system& sys);

bool is_preorder(const rel& r);
bool is_equivalence(const rel& r);

/// Whether r and its inverse are contained in the greatest coupled
/// simulation; precondition: r is a correspondence simulation.
verdict lemma5_containment(const transition_system& sys, const rel& r);

} // namespace encheck

#include "encheck/simulation.hpp"

#include <algorithm>

namespace encheck {

const char* sim_kind_token(sim_kind k) {
    switch (k) {
        case sim_kind::strong_bisim: return "strong-bisim";
        case sim_kind::weak_bisim: return "weak-bisim";
        case sim_kind::coupled_sim: return "coupled-sim";
        case sim_kind::correspondence_sim: return "correspondence-sim";
    }
    return "?";
}

sim_kind parse_sim_kind(std::string_view token) {
    if (token == "strong-bisim") return sim_kind::strong_bisim;
    if (token == "weak-bisim") return sim_kind::weak_bisim;
    if (token == "coupled-sim") return sim_kind::coupled_sim;
    if (token == "correspondence-sim") return sim_kind::correspondence_sim;
    throw error(errc::usage, "unknown relation kind '" + std::string(token) + "'");
}

static bool pair_implication(const transition_system& sys, int p, int q, const predicate& pred,
                             pred_mode mode) {
    const bool at_p = holds_predicate(sys, p, pred);
    const bool at_q = holds_predicate(sys, q, pred);
    switch (mode) {
        case pred_mode::preserve: return !at_p || at_q;
        case pred_mode::reflect: return !at_q || at_p;
        case pred_mode::respect: return at_p == at_q;
    }
    return true;
}

bool pair_satisfies(const transition_system& sys, int p, int q, const predicate& pred, pred_mode mode) {
    if ((pred.kind == pred_kind::has_barb || pred.kind == pred_kind::reaches_barb) && pred.barb.empty()) {
        for (const auto& barb : sys.alphabet())
            if (!pair_implication(sys, p, q, predicate{pred.kind, barb}, mode)) return false;
        return true;
    }
    return pair_implication(sys, p, q, pred, mode);
}

bool pair_satisfies_all(const transition_system& sys, int p, int q,
                        const std::vector<respect_constraint>& constraints) {
    for (const auto& c : constraints)
        if (!pair_satisfies(sys, p, q, c.pred, c.mode)) return false;
    return true;
}

verdict relation_respect(const rel& r, const transition_system& sys, const predicate& pred,
                         pred_mode mode) {
    verdict v;
    const bool quantified =
        (pred.kind == pred_kind::has_barb || pred.kind == pred_kind::reaches_barb) && pred.barb.empty();
    const std::vector<std::string> alphabet = quantified ? sys.alphabet() : std::vector<std::string>{};
    for (auto [p, q] : r.pairs()) {
        if (quantified) {
            for (const auto& barb : alphabet) {
                predicate concrete{pred.kind, barb};
                if (!pair_implication(sys, p, q, concrete, mode))
                    v.fail({std::string(pred_mode_token(mode)),
                            {sys.name_of(p), sys.name_of(q)},
                            std::nullopt,
                            predicate_token(concrete)});
            }
        } else if (!pair_implication(sys, p, q, pred, mode)) {
            v.fail({std::string(pred_mode_token(mode)),
                    {sys.name_of(p), sys.name_of(q)},
                    std::nullopt,
                    predicate_token(pred)});
        }
    }
    v.normalized();
    return v;
}

// --- clause checks ------------------------------------------------------

static bool left_challenge_strong(const transition_system& sys, const rel& r, int p, int q, int p2) {
    for (int q2 : sys.succ[static_cast<std::size_t>(q)])
        if (r.contains(p2, q2)) return true;
    (void)p;
    return false;
}

static bool left_challenge_weak(const transition_system& sys, const rel& r, int q, int p2) {
    for (int q2 = 0; q2 < sys.size(); ++q2)
        if (sys.reaches(q, q2) && r.contains(p2, q2)) return true;
    return false;
}

static bool coupling_ok(const transition_system& sys, const rel& r, int p, int q) {
    for (int q2 = 0; q2 < sys.size(); ++q2)
        if (sys.reaches(q, q2) && r.contains(q2, p)) return true;
    return false;
}

static bool catchup_ok(const transition_system& sys, const rel& r, int p, int q2) {
    for (int p2 = 0; p2 < sys.size(); ++p2) {
        if (!sys.reaches(p, p2)) continue;
        for (int q3 = 0; q3 < sys.size(); ++q3)
            if (sys.reaches(q2, q3) && r.contains(p2, q3)) return true;
    }
    return false;
}

bool simulation_pair_ok(sim_kind k, const transition_system& sys, const rel& r, int p, int q) {
    switch (k) {
        case sim_kind::strong_bisim: {
            for (int p2 : sys.succ[static_cast<std::size_t>(p)])
                if (!left_challenge_strong(sys, r, p, q, p2)) return false;
            for (int q2 : sys.succ[static_cast<std::size_t>(q)]) {
                bool matched = false;
                for (int p2 : sys.succ[static_cast<std::size_t>(p)])
                    if (r.contains(p2, q2)) { matched = true; break; }
                if (!matched) return false;
            }
            return true;
        }
        case sim_kind::weak_bisim: {
            for (int p2 : sys.succ[static_cast<std::size_t>(p)])
                if (!left_challenge_weak(sys, r, q, p2)) return false;
            for (int q2 : sys.succ[static_cast<std::size_t>(q)]) {
                bool matched = false;
                for (int p2 = 0; p2 < sys.size(); ++p2)
                    if (sys.reaches(p, p2) && r.contains(p2, q2)) { matched = true; break; }
                if (!matched) return false;
            }
            return true;
        }
        case sim_kind::coupled_sim: {
            if (!coupling_ok(sys, r, p, q)) return false;
            for (int p2 : sys.succ[static_cast<std::size_t>(p)])
                if (!left_challenge_weak(sys, r, q, p2)) return false;
            return true;
        }
        case sim_kind::correspondence_sim: {
            for (int p2 : sys.succ[static_cast<std::size_t>(p)])
                if (!left_challenge_weak(sys, r, q, p2)) return false;
            for (int q2 = 0; q2 < sys.size(); ++q2)
                if (sys.reaches(q, q2) && !catchup_ok(sys, r, p, q2)) return false;
            return true;
        }
    }
    return true;
}

verdict is_simulation(sim_kind k, const transition_system& sys, const rel& r) {
    verdict v;
    auto name = [&](int s) { return sys.name_of(s); };
    for (auto [p, q] : r.pairs()) {
        switch (k) {
            case sim_kind::strong_bisim:
            case sim_kind::weak_bisim: {
                const bool strong = k == sim_kind::strong_bisim;
                for (int p2 : sys.succ[static_cast<std::size_t>(p)]) {
                    bool ok = strong ? left_challenge_strong(sys, r, p, q, p2)
                                     : left_challenge_weak(sys, r, q, p2);
                    if (!ok)
                        v.fail({"left-challenge", {name(p), name(q)}, std::make_pair(name(p), name(p2)), ""});
                }
                for (int q2 : sys.succ[static_cast<std::size_t>(q)]) {
                    bool matched = false;
                    for (int p2 = 0; p2 < sys.size() && !matched; ++p2) {
                        bool can = strong ? sys.has_step(p, p2) : sys.reaches(p, p2);
                        if (can && r.contains(p2, q2)) matched = true;
                    }
                    if (!matched)
                        v.fail({"right-challenge", {name(p), name(q)}, std::make_pair(name(q), name(q2)), ""});
                }
                break;
            }
            case sim_kind::coupled_sim: {
                if (!coupling_ok(sys, r, p, q))
                    v.fail({"coupling", {name(p), name(q)}, std::nullopt, ""});
                for (int p2 : sys.succ[static_cast<std::size_t>(p)])
                    if (!left_challenge_weak(sys, r, q, p2))
                        v.fail({"left-challenge", {name(p), name(q)}, std::make_pair(name(p), name(p2)), ""});
                break;
            }
            case sim_kind::correspondence_sim: {
                for (int p2 : sys.succ[static_cast<std::size_t>(p)])
                    if (!left_challenge_weak(sys, r, q, p2))
                        v.fail({"left-challenge", {name(p), name(q)}, std::make_pair(name(p), name(p2)), ""});
                for (int q2 = 0; q2 < sys.size(); ++q2)
                    if (sys.reaches(q, q2) && !catchup_ok(sys, r, p, q2))
                        v.fail({"catch-up", {name(p), name(q)}, std::make_pair(name(q), name(q2)), ""});
                break;
            }
        }
    }
    v.normalized();
    return v;
}

verdict is_simulation_literal(sim_kind k, const transition_system& sys, const rel& r) {
    verdict v;
    auto name = [&](int s) { return sys.name_of(s); };
    for (auto [p, q] : r.pairs()) {
        switch (k) {
            case sim_kind::strong_bisim:
                // strong challenges are single steps already
                for (int p2 : sys.succ[static_cast<std::size_t>(p)])
                    if (!left_challenge_strong(sys, r, p, q, p2))
                        v.fail({"left-challenge", {name(p), name(q)}, std::make_pair(name(p), name(p2)), ""});
                for (int q2 : sys.succ[static_cast<std::size_t>(q)]) {
                    bool matched = false;
                    for (int p2 : sys.succ[static_cast<std::size_t>(p)])
                        if (r.contains(p2, q2)) { matched = true; break; }
                    if (!matched)
                        v.fail({"right-challenge", {name(p), name(q)}, std::make_pair(name(q), name(q2)), ""});
                }
                break;
            case sim_kind::weak_bisim:
                for (int p2 = 0; p2 < sys.size(); ++p2) {
                    if (!sys.reaches(p, p2)) continue;
                    if (!left_challenge_weak(sys, r, q, p2))
                        v.fail({"left-challenge", {name(p), name(q)}, std::make_pair(name(p), name(p2)), ""});
                }
                for (int q2 = 0; q2 < sys.size(); ++q2) {
                    if (!sys.reaches(q, q2)) continue;
                    bool matched = false;
                    for (int p2 = 0; p2 < sys.size() && !matched; ++p2)
                        if (sys.reaches(p, p2) && r.contains(p2, q2)) matched = true;
                    if (!matched)
                        v.fail({"right-challenge", {name(p), name(q)}, std::make_pair(name(q), name(q2)), ""});
                }
                break;
            case sim_kind::coupled_sim:
                for (int p2 = 0; p2 < sys.size(); ++p2) {
                    if (!sys.reaches(p, p2)) continue;
                    if (!left_challenge_weak(sys, r, q, p2))
                        v.fail({"left-challenge", {name(p), name(q)}, std::make_pair(name(p), name(p2)), ""});
                    bool coupled = false;
                    for (int q2 = 0; q2 < sys.size() && !coupled; ++q2)
                        if (sys.reaches(q, q2) && r.contains(q2, p2)) coupled = true;
                    if (!coupled)
                        v.fail({"coupling", {name(p), name(q)}, std::make_pair(name(p), name(p2)), ""});
                }
                break;
            case sim_kind::correspondence_sim:
                for (int p2 = 0; p2 < sys.size(); ++p2) {
                    if (!sys.reaches(p, p2)) continue;
                    if (!left_challenge_weak(sys, r, q, p2))
                        v.fail({"left-challenge", {name(p), name(q)}, std::make_pair(name(p), name(p2)), ""});
                }
                for (int q2 = 0; q2 < sys.size(); ++q2)
                    if (sys.reaches(q, q2) && !catchup_ok(sys, r, p, q2))
                        v.fail({"catch-up", {name(p), name(q)}, std::make_pair(name(q), name(q2)), ""});
                break;
        }
    }
    v.normalized();
    return v;
}

rel greatest_relation(sim_kind k, const transition_system& sys, carrier_kind over,
                      const std::vector<respect_constraint>& constraints) {
    const int n = sys.size();
    rel r(over, n);
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
            if (pair_satisfies_all(sys, p, q, constraints)) r.add(p, q);

    bool changed = true;
    while (changed) {
        changed = false;
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q)
                if (r.contains(p, q) && !simulation_pair_ok(k, sys, r, p, q)) {
                    r.erase(p, q);
                    changed = true;
                }
    }
    return r;
}

bool is_preorder(const rel& r) {
    const int n = r.carrier_size();
    for (int a = 0; a < n; ++a)
        if (!r.contains(a, a)) return false;
    return r == r.closed_trans();
}

bool is_equivalence(const rel& r) { return is_preorder(r) && r == r.closed_sym(); }

rel_kind_report relation_properties(const rel& r, const transition_system& sys) {
    rel_kind_report rep;
    const int n = r.carrier_size();
    rep.reflexive = true;
    for (int a = 0; a < n; ++a)
        if (!r.contains(a, a)) { rep.reflexive = false; break; }
    rep.symmetric = r == r.closed_sym();
    rep.transitive = r == r.closed_trans();
    rep.preorder = rep.reflexive && rep.transitive;
    rep.equivalence = rep.preorder && rep.symmetric;
    rep.strong_bisim = is_simulation(sim_kind::strong_bisim, sys, r).holds;
    rep.weak_bisim = is_simulation(sim_kind::weak_bisim, sys, r).holds;
    rep.coupled_sim = is_simulation(sim_kind::coupled_sim, sys, r).holds;
    rep.correspondence_sim = is_simulation(sim_kind::correspondence_sim, sys, r).holds;

    std::vector<predicate> preds = {{pred_kind::divergent, ""},
                                    {pred_kind::has_success, ""},
                                    {pred_kind::reaches_success, ""},
                                    {pred_kind::has_barb, ""},
                                    {pred_kind::reaches_barb, ""}};
    for (const auto& p : preds) {
        respect_flags f;
        f.pred = p;
        f.preserves = relation_respect(r, sys, p, pred_mode::preserve).holds;
        f.reflects = relation_respect(r, sys, p, pred_mode::reflect).holds;
        rep.respects.push_back(f);
    }
    return rep;
}

verdict lemma5_containment(const transition_system& sys, const rel& r) {
    if (!is_simulation(sim_kind::correspondence_sim, sys, r).holds)
        throw error(errc::precondition, "relation is not a correspondence simulation");
    const rel greatest = greatest_relation(sim_kind::coupled_sim, sys, r.over(), {});
    verdict v;
    const rel both = r.united(r.inverted());
    for (auto [p, q] : both.pairs())
        if (!greatest.contains(p, q))
            v.fail({"coupled-containment", {sys.name_of(p), sys.name_of(q)}, std::nullopt,
                    "pair missing from the greatest coupled simulation"});
    v.normalized();
    return v;
}

} // namespace encheck

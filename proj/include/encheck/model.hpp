#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "encheck/error.hpp"

namespace encheck {

/// Observable predicates on states. A barb predicate with an empty barb name
/// quantifies over the whole barb alphabet of the system at hand.
enum class pred_kind { divergent, has_success, reaches_success, has_barb, reaches_barb };

struct predicate {
    pred_kind kind = pred_kind::divergent;
    std::string barb; // empty = all barbs

    bool operator==(const predicate&) const = default;
};

enum class pred_mode { preserve, reflect, respect };

std::string predicate_token(const predicate& p);
predicate parse_predicate(std::string_view token); // throws error(usage)
const char* pred_mode_token(pred_mode m);
pred_mode parse_pred_mode(std::string_view token); // throws error(usage)

/// A finite unlabelled transition system: states, a step relation, a barb
/// assignment and a success set. Weak reachability and divergence are
/// precomputed by finalize().
struct transition_system {
    std::vector<std::string> names;
    std::vector<std::vector<int>> succ;               // sorted successor lists
    std::vector<std::vector<std::string>> barbs;      // sorted barb tokens per state
    std::vector<char> success;

    // derived
    std::vector<std::vector<char>> reach;             // weak step closure, includes self
    std::vector<char> diverges;

    int size() const { return static_cast<int>(names.size()); }
    int index_of(std::string_view name) const;
    const std::string& name_of(int s) const { return names.at(static_cast<std::size_t>(s)); }
    bool has_step(int a, int b) const;
    bool reaches(int a, int b) const { return reach[a][b] != 0; }
    std::vector<int> weak_derivatives(int s) const;   // ascending indices, contains s
    bool state_has_barb(int s, std::string_view barb) const;
    std::vector<std::string> alphabet() const;        // sorted union of barb tokens
    std::size_t step_count() const;

    void finalize(); // computes reach and diverges
};

/// Builds a system from named parts. States are sorted lexicographically;
/// dangling references raise E_UNKNOWN_STATE, malformed names E_PARSE.
transition_system make_system(std::vector<std::string> states,
                              std::vector<std::pair<std::string, std::string>> steps,
                              std::map<std::string, std::vector<std::string>> barbs,
                              std::vector<std::string> success);

/// Disjoint union of two systems; source states first, then target states.
transition_system combine(const transition_system& source, const transition_system& target);

struct encoding_instance {
    transition_system source;
    transition_system target;
    std::vector<int> mapping;        // source index -> target index
    transition_system combined;      // source states first, then target states

    int source_count() const { return source.size(); }
    int comb_of_source(int i) const { return i; }
    int comb_of_target(int j) const { return source.size() + j; }
    bool comb_is_source(int c) const { return c < source.size(); }
    /// Combined index of the translation of source state i.
    int encoded(int i) const { return source.size() + mapping[static_cast<std::size_t>(i)]; }
    std::vector<std::string> alphabet() const { return combined.alphabet(); }
};

/// Checks disjointness and totality, then assembles the combined domain.
encoding_instance make_instance(transition_system source,
                                transition_system target,
                                const std::map<std::string, std::string>& mapping);

bool is_divergent(const transition_system& sys, int s);

/// Evaluates a predicate at a state; barb predicates need a concrete barb.
bool holds_predicate(const transition_system& sys, int s, const predicate& p);

} // namespace encheck

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "encheck/fixtures.hpp"
#include "encheck/model.hpp"
#include "encheck/rel.hpp"

namespace encheck {

struct gen_config {
    std::uint64_t seed = 1;
    int max_source_states = 4;
    int max_target_states = 5;
    double step_density = 0.3;
    std::vector<std::string> barb_alphabet = {"a", "b", "c"};
    double barb_probability = 0.25;
    double success_probability = 0.2;
    double relation_density = 0.2;
    // closure applied to the RS/RT candidates: none | preorder | equivalence
    std::string relation_closure = "none";
};

/// Deterministic function of (config.seed, index). Produces a valid instance
/// and candidate relations named RS (source), RT (target) and R (combined).
instance_document generate(const gen_config& config, std::uint64_t index);

} // namespace encheck

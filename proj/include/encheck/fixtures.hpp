#pragma once

#include <map>
#include <string>
#include <string_view>

#include "encheck/model.hpp"
#include "encheck/rel.hpp"

namespace encheck {

/// An encoding instance together with its named relations.
struct instance_document {
    encoding_instance enc;
    std::map<std::string, rel> relations;
};

/// Built-in desk examples: fig1 (operational correspondence plus divergence
/// reflection), fig2 (full abstraction without operational correspondence,
/// relations RS/RT), fig3 (the barb-respecting correspondence-simulation
/// example, relation Rcorr).
instance_document fixture(std::string_view name); // throws error(unknown_fixture)

} // namespace encheck

#pragma once

#include <string>

#include <json.hpp>

#include "encheck/fixtures.hpp"

namespace encheck {

/// Schema: top-level keys source, target, encoding, relations; systems carry
/// states, steps, barbs, success; relations carry over, pairs, closures
/// (applied left to right, refl expanding over the declared carrier).
instance_document parse_instance_text(const std::string& text);
instance_document parse_instance_file(const std::string& path);

nlohmann::ordered_json emit_instance_json(const instance_document& doc);
std::string emit_instance_text(const instance_document& doc);

bool same_system(const transition_system& a, const transition_system& b);
bool same_document(const instance_document& a, const instance_document& b);

} // namespace encheck

#pragma once

#include <string_view>

#include "encheck/model.hpp"
#include "encheck/rel.hpp"
#include "encheck/verdict.hpp"

namespace encheck {

enum class oc_variant { strong, standard, weak };
enum class strength { has, reaches };

const char* oc_variant_token(oc_variant v);
oc_variant parse_oc_variant(std::string_view token); // throws error(usage)
const char* strength_token(strength s);
strength parse_strength(std::string_view token); // throws error(usage)

/// Whether every source state and its translation satisfy the mode's
/// implication(s) for the predicate; barb predicates without a concrete barb
/// range over the instance's whole alphabet.
verdict check_pred_criterion(const encoding_instance& enc, const predicate& pred, pred_mode mode);

verdict divergence_reflection(const encoding_instance& enc);
verdict success_sensitiveness(const encoding_instance& enc, strength s);
verdict barb_sensitiveness(const encoding_instance& enc, pred_mode mode, strength s);

/// Source pairs are related by rs exactly when their translations are
/// related by rt.
verdict full_abstraction(const encoding_instance& enc, const rel& rs, const rel& rt);

/// Completeness and soundness of translated behaviour modulo rt; the strong
/// variant uses single steps, standard weak steps, weak additionally lets
/// the target catch up on the soundness side.
verdict operational_correspondence(const encoding_instance& enc, const rel& rt, oc_variant variant);

verdict is_surjective(const encoding_instance& enc);

} // namespace encheck

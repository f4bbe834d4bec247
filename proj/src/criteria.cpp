#include "encheck/criteria.hpp"

#include "encheck/simulation.hpp"

namespace encheck {

const char* oc_variant_token(oc_variant v) {
    switch (v) {
        case oc_variant::strong: return "strong";
        case oc_variant::standard: return "standard";
        case oc_variant::weak: return "weak";
    }
    return "?";
}

oc_variant parse_oc_variant(std::string_view token) {
    if (token == "strong") return oc_variant::strong;
    if (token == "standard") return oc_variant::standard;
    if (token == "weak") return oc_variant::weak;
    throw error(errc::usage, "unknown variant '" + std::string(token) + "'");
}

const char* strength_token(strength s) {
    return s == strength::has ? "has" : "reaches";
}

strength parse_strength(std::string_view token) {
    if (token == "has") return strength::has;
    if (token == "reaches") return strength::reaches;
    throw error(errc::usage, "unknown strength '" + std::string(token) + "'");
}

static void check_one_pred(const encoding_instance& enc, const predicate& pred, pred_mode mode,
                           verdict& v) {
    const auto& comb = enc.combined;
    for (int i = 0; i < enc.source_count(); ++i) {
        const int s = enc.comb_of_source(i);
        const int t = enc.encoded(i);
        const bool at_s = holds_predicate(comb, s, pred);
        const bool at_t = holds_predicate(comb, t, pred);
        const bool preserve_ok = !at_s || at_t;
        const bool reflect_ok = !at_t || at_s;
        if ((mode == pred_mode::preserve || mode == pred_mode::respect) && !preserve_ok)
            v.fail({"preserve", {comb.name_of(s), comb.name_of(t)}, std::nullopt, predicate_token(pred)});
        if ((mode == pred_mode::reflect || mode == pred_mode::respect) && !reflect_ok)
            v.fail({"reflect", {comb.name_of(s), comb.name_of(t)}, std::nullopt, predicate_token(pred)});
    }
}

verdict check_pred_criterion(const encoding_instance& enc, const predicate& pred, pred_mode mode) {
    verdict v;
    if ((pred.kind == pred_kind::has_barb || pred.kind == pred_kind::reaches_barb) && pred.barb.empty()) {
        for (const auto& barb : enc.alphabet())
            check_one_pred(enc, predicate{pred.kind, barb}, mode, v);
    } else {
        check_one_pred(enc, pred, mode, v);
    }
    v.normalized();
    return v;
}

verdict divergence_reflection(const encoding_instance& enc) {
    return check_pred_criterion(enc, predicate{pred_kind::divergent, ""}, pred_mode::reflect);
}

verdict success_sensitiveness(const encoding_instance& enc, strength s) {
    const pred_kind kind = s == strength::has ? pred_kind::has_success : pred_kind::reaches_success;
    return check_pred_criterion(enc, predicate{kind, ""}, pred_mode::respect);
}

verdict barb_sensitiveness(const encoding_instance& enc, pred_mode mode, strength s) {
    const pred_kind kind = s == strength::has ? pred_kind::has_barb : pred_kind::reaches_barb;
    return check_pred_criterion(enc, predicate{kind, ""}, mode);
}

verdict full_abstraction(const encoding_instance& enc, const rel& rs, const rel& rt) {
    verdict v;
    const int sn = enc.source_count();
    for (int a = 0; a < sn; ++a)
        for (int b = 0; b < sn; ++b) {
            const bool in_rs = rs.contains(a, b);
            const bool in_rt = rt.contains(enc.mapping[static_cast<std::size_t>(a)],
                                           enc.mapping[static_cast<std::size_t>(b)]);
            if (in_rs && !in_rt)
                v.fail({"completeness",
                        {enc.source.name_of(a), enc.source.name_of(b)},
                        std::nullopt,
                        "translations not related by the target relation"});
            if (!in_rs && in_rt)
                v.fail({"soundness",
                        {enc.source.name_of(a), enc.source.name_of(b)},
                        std::nullopt,
                        "translations related by the target relation only"});
        }
    v.normalized();
    return v;
}

verdict operational_correspondence(const encoding_instance& enc, const rel& rt, oc_variant variant) {
    verdict v;
    const auto& src = enc.source;
    const auto& tgt = enc.target;
    const int sn = src.size();
    auto m = [&](int i) { return enc.mapping[static_cast<std::size_t>(i)]; };

    // completeness
    for (int i = 0; i < sn; ++i) {
        if (variant == oc_variant::strong) {
            for (int i2 : src.succ[static_cast<std::size_t>(i)]) {
                bool matched = false;
                for (int t : tgt.succ[static_cast<std::size_t>(m(i))])
                    if (rt.contains(m(i2), t)) { matched = true; break; }
                if (!matched)
                    v.fail({"completeness", {src.name_of(i), src.name_of(i2)},
                            std::make_pair(src.name_of(i), src.name_of(i2)), "no matching target step"});
            }
        } else {
            for (int i2 = 0; i2 < sn; ++i2) {
                if (!src.reaches(i, i2)) continue;
                bool matched = false;
                for (int t = 0; t < tgt.size() && !matched; ++t)
                    if (tgt.reaches(m(i), t) && rt.contains(m(i2), t)) matched = true;
                if (!matched)
                    v.fail({"completeness", {src.name_of(i), src.name_of(i2)},
                            std::make_pair(src.name_of(i), src.name_of(i2)), "no matching weak target step"});
            }
        }
    }

    // soundness over the (weak) derivatives of every translation
    for (int i = 0; i < sn; ++i) {
        if (variant == oc_variant::strong) {
            for (int t : tgt.succ[static_cast<std::size_t>(m(i))]) {
                bool matched = false;
                for (int i2 : src.succ[static_cast<std::size_t>(i)])
                    if (rt.contains(m(i2), t)) { matched = true; break; }
                if (!matched)
                    v.fail({"soundness", {src.name_of(i), tgt.name_of(t)},
                            std::make_pair(tgt.name_of(m(i)), tgt.name_of(t)), "no matching source step"});
            }
        } else {
            for (int t = 0; t < tgt.size(); ++t) {
                if (!tgt.reaches(m(i), t)) continue;
                bool matched = false;
                for (int i2 = 0; i2 < sn && !matched; ++i2) {
                    if (!src.reaches(i, i2)) continue;
                    if (variant == oc_variant::standard) {
                        if (rt.contains(m(i2), t)) matched = true;
                    } else {
                        for (int t2 = 0; t2 < tgt.size() && !matched; ++t2)
                            if (tgt.reaches(t, t2) && rt.contains(m(i2), t2)) matched = true;
                    }
                }
                if (!matched)
                    v.fail({"soundness", {src.name_of(i), tgt.name_of(t)},
                            std::make_pair(tgt.name_of(m(i)), tgt.name_of(t)), "no matching weak source step"});
            }
        }
    }
    v.normalized();
    return v;
}

verdict is_surjective(const encoding_instance& enc) {
    verdict v;
    std::vector<char> hit(static_cast<std::size_t>(enc.target.size()), 0);
    for (int j : enc.mapping) hit[static_cast<std::size_t>(j)] = 1;
    for (int t = 0; t < enc.target.size(); ++t)
        if (!hit[static_cast<std::size_t>(t)])
            v.fail({"surjectivity", {enc.target.name_of(t)}, std::nullopt, "target state has no preimage"});
    v.normalized();
    return v;
}

} // namespace encheck

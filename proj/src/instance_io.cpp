#include "encheck/instance_io.hpp"

#include <fstream>
#include <sstream>

namespace encheck {

using nlohmann::ordered_json;

namespace {

const nlohmann::json* find_key(const nlohmann::json& obj, const char* key) {
    auto it = obj.find(key);
    return it == obj.end() ? nullptr : &*it;
}

std::vector<std::string> string_array(const nlohmann::json& j, const std::string& where) {
    if (!j.is_array()) throw error(errc::parse, where + " must be an array of strings");
    std::vector<std::string> out;
    for (const auto& item : j) {
        if (!item.is_string()) throw error(errc::parse, where + " must contain only strings");
        out.push_back(item.get<std::string>());
    }
    return out;
}

std::vector<std::pair<std::string, std::string>> pair_array(const nlohmann::json& j,
                                                            const std::string& where) {
    if (!j.is_array()) throw error(errc::parse, where + " must be an array of 2-element arrays");
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& item : j) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_string() || !item[1].is_string())
            throw error(errc::parse, where + " entries must be 2-element string arrays");
        out.emplace_back(item[0].get<std::string>(), item[1].get<std::string>());
    }
    return out;
}

transition_system parse_system(const nlohmann::json& j, const std::string& section) {
    if (!j.is_object()) throw error(errc::parse, section + " must be an object");
    const auto* states = find_key(j, "states");
    if (!states) throw error(errc::parse, section + ".states is missing");
    std::vector<std::pair<std::string, std::string>> steps;
    if (const auto* s = find_key(j, "steps")) steps = pair_array(*s, section + ".steps");
    std::map<std::string, std::vector<std::string>> barbs;
    if (const auto* b = find_key(j, "barbs")) {
        if (!b->is_object()) throw error(errc::parse, section + ".barbs must be an object");
        for (auto it = b->begin(); it != b->end(); ++it)
            barbs[it.key()] = string_array(it.value(), section + ".barbs." + it.key());
    }
    std::vector<std::string> success;
    if (const auto* s = find_key(j, "success")) success = string_array(*s, section + ".success");
    return make_system(string_array(*states, section + ".states"), std::move(steps), std::move(barbs),
                       std::move(success));
}

rel parse_relation(const nlohmann::json& j, const std::string& name, const encoding_instance& enc) {
    if (!j.is_object()) throw error(errc::parse, "relations." + name + " must be an object");
    const auto* over = find_key(j, "over");
    if (!over || !over->is_string())
        throw error(errc::parse, "relations." + name + ".over is missing");
    carrier_kind kind;
    try {
        kind = parse_carrier(over->get<std::string>());
    } catch (const error&) {
        throw error(errc::parse, "relations." + name + ".over must be source, target or combined");
    }
    const auto& sys = carrier_system(enc, kind);
    rel r(kind, sys.size());
    if (const auto* pairs = find_key(j, "pairs")) {
        auto list = pair_array(*pairs, "relations." + name + ".pairs");
        for (std::size_t i = 0; i < list.size(); ++i) {
            const int a = sys.index_of(list[i].first);
            const int b = sys.index_of(list[i].second);
            if (a < 0 || b < 0)
                throw error(errc::unknown_state,
                            "relation '" + name + "' pair " + std::to_string(i) +
                                " references unknown state '" + (a < 0 ? list[i].first : list[i].second) + "'");
            r.add(a, b);
        }
    }
    if (const auto* closures = find_key(j, "closures"))
        for (const auto& op : string_array(*closures, "relations." + name + ".closures"))
            r = apply_closure(r, op);
    return r;
}

} // namespace

instance_document parse_instance_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw error(errc::parse, e.what());
    }
    if (!j.is_object()) throw error(errc::parse, "instance document must be an object");
    const auto* source = find_key(j, "source");
    const auto* target = find_key(j, "target");
    const auto* encoding = find_key(j, "encoding");
    if (!source) throw error(errc::parse, "source section is missing");
    if (!target) throw error(errc::parse, "target section is missing");
    if (!encoding) throw error(errc::parse, "encoding section is missing");
    if (!encoding->is_object()) throw error(errc::parse, "encoding must be an object");

    std::map<std::string, std::string> mapping;
    for (auto it = encoding->begin(); it != encoding->end(); ++it) {
        if (!it.value().is_string()) throw error(errc::parse, "encoding." + it.key() + " must be a string");
        mapping[it.key()] = it.value().get<std::string>();
    }

    instance_document doc;
    doc.enc = make_instance(parse_system(*source, "source"), parse_system(*target, "target"), mapping);
    if (const auto* relations = find_key(j, "relations")) {
        if (!relations->is_object()) throw error(errc::parse, "relations must be an object");
        for (auto it = relations->begin(); it != relations->end(); ++it)
            doc.relations.emplace(it.key(), parse_relation(it.value(), it.key(), doc.enc));
    }
    return doc;
}

instance_document parse_instance_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error(errc::parse, "cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_instance_text(buffer.str());
}

namespace {

ordered_json emit_system(const transition_system& sys) {
    ordered_json out;
    out["states"] = sys.names;
    ordered_json steps = ordered_json::array();
    for (int a = 0; a < sys.size(); ++a)
        for (int b : sys.succ[static_cast<std::size_t>(a)])
            steps.push_back({sys.name_of(a), sys.name_of(b)});
    out["steps"] = std::move(steps);
    ordered_json barbs = ordered_json::object();
    for (int a = 0; a < sys.size(); ++a)
        if (!sys.barbs[static_cast<std::size_t>(a)].empty())
            barbs[sys.name_of(a)] = sys.barbs[static_cast<std::size_t>(a)];
    out["barbs"] = std::move(barbs);
    ordered_json success = ordered_json::array();
    for (int a = 0; a < sys.size(); ++a)
        if (sys.success[static_cast<std::size_t>(a)]) success.push_back(sys.name_of(a));
    out["success"] = std::move(success);
    return out;
}

} // namespace

ordered_json emit_instance_json(const instance_document& doc) {
    ordered_json out;
    out["source"] = emit_system(doc.enc.source);
    out["target"] = emit_system(doc.enc.target);
    ordered_json encoding = ordered_json::object();
    for (int i = 0; i < doc.enc.source_count(); ++i)
        encoding[doc.enc.source.name_of(i)] =
            doc.enc.target.name_of(doc.enc.mapping[static_cast<std::size_t>(i)]);
    out["encoding"] = std::move(encoding);
    ordered_json relations = ordered_json::object();
    for (const auto& [name, r] : doc.relations) {
        const auto& sys = carrier_system(doc.enc, r.over());
        ordered_json entry;
        entry["over"] = carrier_token(r.over());
        ordered_json pairs = ordered_json::array();
        for (auto [a, b] : r.pairs()) pairs.push_back({sys.name_of(a), sys.name_of(b)});
        entry["pairs"] = std::move(pairs);
        entry["closures"] = ordered_json::array();
        relations[name] = std::move(entry);
    }
    out["relations"] = std::move(relations);
    return out;
}

std::string emit_instance_text(const instance_document& doc) {
    return emit_instance_json(doc).dump(2) + "\n";
}

bool same_system(const transition_system& a, const transition_system& b) {
    return a.names == b.names && a.succ == b.succ && a.barbs == b.barbs && a.success == b.success;
}

bool same_document(const instance_document& a, const instance_document& b) {
    return same_system(a.enc.source, b.enc.source) && same_system(a.enc.target, b.enc.target) &&
           a.enc.mapping == b.enc.mapping && a.relations == b.relations;
}

} // namespace encheck

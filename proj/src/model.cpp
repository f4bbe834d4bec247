#include "encheck/model.hpp"

#include <algorithm>
#include <set>

namespace encheck {

std::string predicate_token(const predicate& p) {
    switch (p.kind) {
        case pred_kind::divergent: return "divergent";
        case pred_kind::has_success: return "has-success";
        case pred_kind::reaches_success: return "reaches-success";
        case pred_kind::has_barb: return p.barb.empty() ? "has-barb" : "has-barb=" + p.barb;
        case pred_kind::reaches_barb: return p.barb.empty() ? "reaches-barb" : "reaches-barb=" + p.barb;
    }
    return "?";
}

predicate parse_predicate(std::string_view token) {
    std::string barb;
    if (auto pos = token.find('='); pos != std::string_view::npos) {
        barb = std::string(token.substr(pos + 1));
        token = token.substr(0, pos);
    }
    if (token == "divergent") return {pred_kind::divergent, ""};
    if (token == "has-success") return {pred_kind::has_success, ""};
    if (token == "reaches-success") return {pred_kind::reaches_success, ""};
    if (token == "has-barb") return {pred_kind::has_barb, barb};
    if (token == "reaches-barb") return {pred_kind::reaches_barb, barb};
    throw error(errc::usage, "unknown predicate '" + std::string(token) + "'");
}

const char* pred_mode_token(pred_mode m) {
    switch (m) {
        case pred_mode::preserve: return "preserve";
        case pred_mode::reflect: return "reflect";
        case pred_mode::respect: return "respect";
    }
    return "?";
}

pred_mode parse_pred_mode(std::string_view token) {
    if (token == "preserve") return pred_mode::preserve;
    if (token == "reflect") return pred_mode::reflect;
    if (token == "respect") return pred_mode::respect;
    throw error(errc::usage, "unknown mode '" + std::string(token) + "'");
}

int transition_system::index_of(std::string_view name) const {
    for (int i = 0; i < size(); ++i)
        if (names[static_cast<std::size_t>(i)] == name) return i;
    return -1;
}

bool transition_system::has_step(int a, int b) const {
    const auto& row = succ[static_cast<std::size_t>(a)];
    return std::binary_search(row.begin(), row.end(), b);
}

std::vector<int> transition_system::weak_derivatives(int s) const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (reach[s][i]) out.push_back(i);
    return out;
}

bool transition_system::state_has_barb(int s, std::string_view barb) const {
    const auto& row = barbs[static_cast<std::size_t>(s)];
    return std::binary_search(row.begin(), row.end(), barb);
}

std::vector<std::string> transition_system::alphabet() const {
    std::set<std::string> all;
    for (const auto& row : barbs) all.insert(row.begin(), row.end());
    return {all.begin(), all.end()};
}

std::size_t transition_system::step_count() const {
    std::size_t n = 0;
    for (const auto& row : succ) n += row.size();
    return n;
}

void transition_system::finalize() {
    const int n = size();
    reach.assign(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
    for (int s = 0; s < n; ++s) {
        // BFS over steps
        std::vector<int> queue{s};
        reach[s][s] = 1;
        while (!queue.empty()) {
            int cur = queue.back();
            queue.pop_back();
            for (int nxt : succ[static_cast<std::size_t>(cur)]) {
                if (!reach[s][nxt]) {
                    reach[s][nxt] = 1;
                    queue.push_back(nxt);
                }
            }
        }
    }
    // a state diverges iff it reaches some state lying on a cycle
    std::vector<char> on_cycle(static_cast<std::size_t>(n), 0);
    for (int x = 0; x < n; ++x)
        for (int y : succ[static_cast<std::size_t>(x)])
            if (reach[y][x]) { on_cycle[static_cast<std::size_t>(x)] = 1; break; }
    diverges.assign(static_cast<std::size_t>(n), 0);
    for (int s = 0; s < n; ++s)
        for (int x = 0; x < n; ++x)
            if (reach[s][x] && on_cycle[static_cast<std::size_t>(x)]) { diverges[static_cast<std::size_t>(s)] = 1; break; }
}

static void check_token(const std::string& name) {
    if (name.empty()) throw error(errc::parse, "empty state name");
    for (char c : name)
        if (c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r')
            throw error(errc::parse, "state name '" + name + "' contains whitespace or comma");
}

transition_system make_system(std::vector<std::string> states,
                              std::vector<std::pair<std::string, std::string>> steps,
                              std::map<std::string, std::vector<std::string>> barbs,
                              std::vector<std::string> success) {
    for (const auto& s : states) check_token(s);
    std::sort(states.begin(), states.end());
    if (std::adjacent_find(states.begin(), states.end()) != states.end())
        throw error(errc::parse, "duplicate state name");

    transition_system sys;
    sys.names = std::move(states);
    const int n = sys.size();
    sys.succ.assign(static_cast<std::size_t>(n), {});
    sys.barbs.assign(static_cast<std::size_t>(n), {});
    sys.success.assign(static_cast<std::size_t>(n), 0);

    auto lookup = [&](const std::string& name, const char* where) {
        int i = sys.index_of(name);
        if (i < 0) throw error(errc::unknown_state, std::string(where) + " references unknown state '" + name + "'");
        return i;
    };

    for (const auto& [a, b] : steps) {
        int ia = lookup(a, "step");
        int ib = lookup(b, "step");
        sys.succ[static_cast<std::size_t>(ia)].push_back(ib);
    }
    for (auto& row : sys.succ) {
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
    }
    for (const auto& [state, tokens] : barbs) {
        int i = lookup(state, "barb assignment");
        auto row = tokens;
        for (const auto& t : row) check_token(t);
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
        sys.barbs[static_cast<std::size_t>(i)] = std::move(row);
    }
    for (const auto& s : success) sys.success[static_cast<std::size_t>(lookup(s, "success set"))] = 1;

    sys.finalize();
    return sys;
}

transition_system combine(const transition_system& source, const transition_system& target) {
    transition_system out;
    const int sn = source.size();
    out.names = source.names;
    out.names.insert(out.names.end(), target.names.begin(), target.names.end());
    out.succ = source.succ;
    for (const auto& row : target.succ) {
        std::vector<int> shifted;
        shifted.reserve(row.size());
        for (int x : row) shifted.push_back(x + sn);
        out.succ.push_back(std::move(shifted));
    }
    out.barbs = source.barbs;
    out.barbs.insert(out.barbs.end(), target.barbs.begin(), target.barbs.end());
    out.success = source.success;
    out.success.insert(out.success.end(), target.success.begin(), target.success.end());
    out.finalize();
    return out;
}

encoding_instance make_instance(transition_system source,
                                transition_system target,
                                const std::map<std::string, std::string>& mapping) {
    for (const auto& name : source.names)
        if (target.index_of(name) >= 0)
            throw error(errc::disjoint, "state '" + name + "' appears in both languages");

    std::vector<int> map(static_cast<std::size_t>(source.size()), -1);
    for (const auto& [from, to] : mapping) {
        int i = source.index_of(from);
        if (i < 0) throw error(errc::unknown_state, "encoding maps unknown source state '" + from + "'");
        int j = target.index_of(to);
        if (j < 0) throw error(errc::unknown_state, "encoding maps '" + from + "' to unknown target state '" + to + "'");
        map[static_cast<std::size_t>(i)] = j;
    }
    for (int i = 0; i < source.size(); ++i)
        if (map[static_cast<std::size_t>(i)] < 0)
            throw error(errc::partial_encoding, "no image for source state '" + source.name_of(i) + "'");

    encoding_instance enc;
    enc.combined = combine(source, target);
    enc.source = std::move(source);
    enc.target = std::move(target);
    enc.mapping = std::move(map);
    return enc;
}

bool is_divergent(const transition_system& sys, int s) {
    return sys.diverges[static_cast<std::size_t>(s)] != 0;
}

bool holds_predicate(const transition_system& sys, int s, const predicate& p) {
    switch (p.kind) {
        case pred_kind::divergent:
            return is_divergent(sys, s);
        case pred_kind::has_success:
            return sys.success[static_cast<std::size_t>(s)] != 0;
        case pred_kind::reaches_success: {
            for (int x = 0; x < sys.size(); ++x)
                if (sys.reaches(s, x) && sys.success[static_cast<std::size_t>(x)]) return true;
            return false;
        }
        case pred_kind::has_barb:
            return sys.state_has_barb(s, p.barb);
        case pred_kind::reaches_barb: {
            for (int x = 0; x < sys.size(); ++x)
                if (sys.reaches(s, x) && sys.state_has_barb(x, p.barb)) return true;
            return false;
        }
    }
    return false;
}

} // namespace encheck

#include "encheck/rel.hpp"

namespace encheck {

const char* carrier_token(carrier_kind c) {
    switch (c) {
        case carrier_kind::source: return "source";
        case carrier_kind::target: return "target";
        case carrier_kind::combined: return "combined";
    }
    return "?";
}

carrier_kind parse_carrier(std::string_view token) {
    if (token == "source") return carrier_kind::source;
    if (token == "target") return carrier_kind::target;
    if (token == "combined") return carrier_kind::combined;
    throw error(errc::usage, "unknown carrier '" + std::string(token) + "'");
}

std::size_t rel::pair_count() const {
    std::size_t c = 0;
    for (char b : bits_) c += static_cast<std::size_t>(b);
    return c;
}

std::vector<std::pair<int, int>> rel::pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            if (contains(a, b)) out.emplace_back(a, b);
    return out;
}

bool rel::subset_of(const rel& other) const {
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i] && !other.bits_[i]) return false;
    return true;
}

rel rel::closed_refl() const {
    rel out = *this;
    for (int a = 0; a < n_; ++a) out.add(a, a);
    return out;
}

rel rel::closed_sym() const {
    rel out = *this;
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            if (contains(a, b)) out.add(b, a);
    return out;
}

rel rel::closed_trans() const {
    rel out = *this;
    for (int k = 0; k < n_; ++k)
        for (int a = 0; a < n_; ++a) {
            if (!out.contains(a, k)) continue;
            for (int b = 0; b < n_; ++b)
                if (out.contains(k, b)) out.add(a, b);
        }
    return out;
}

rel rel::inverted() const {
    rel out(over_, n_);
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            if (contains(a, b)) out.add(b, a);
    return out;
}

rel rel::united(const rel& other) const {
    rel out = *this;
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (other.bits_[i]) out.bits_[i] = 1;
    return out;
}

rel rel::intersected(const rel& other) const {
    rel out = *this;
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (!other.bits_[i]) out.bits_[i] = 0;
    return out;
}

rel rel::restricted(const std::vector<char>& keep) const {
    rel out(over_, n_);
    for (int a = 0; a < n_; ++a) {
        if (!keep[static_cast<std::size_t>(a)]) continue;
        for (int b = 0; b < n_; ++b)
            if (keep[static_cast<std::size_t>(b)] && contains(a, b)) out.add(a, b);
    }
    return out;
}

rel identity_rel(carrier_kind over, int n) {
    rel out(over, n);
    for (int a = 0; a < n; ++a) out.add(a, a);
    return out;
}

rel full_rel(carrier_kind over, int n) {
    rel out(over, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) out.add(a, b);
    return out;
}

rel apply_closure(const rel& r, std::string_view op) {
    if (op == "refl") return r.closed_refl();
    if (op == "sym") return r.closed_sym();
    if (op == "trans") return r.closed_trans();
    throw error(errc::parse, "unknown closure directive '" + std::string(op) + "'");
}

rel lift_to_combined(const encoding_instance& enc, const rel& r) {
    if (r.over() == carrier_kind::combined) return r;
    const int offset = r.over() == carrier_kind::source ? 0 : enc.source_count();
    rel out(carrier_kind::combined, enc.combined.size());
    for (auto [a, b] : r.pairs()) out.add(a + offset, b + offset);
    return out;
}

rel project_combined(const encoding_instance& enc, const rel& r, carrier_kind which) {
    const int sn = enc.source_count();
    const int tn = enc.target.size();
    if (which == carrier_kind::combined) return r;
    const int offset = which == carrier_kind::source ? 0 : sn;
    const int n = which == carrier_kind::source ? sn : tn;
    rel out(which, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (r.contains(a + offset, b + offset)) out.add(a, b);
    return out;
}

const transition_system& carrier_system(const encoding_instance& enc, carrier_kind which) {
    switch (which) {
        case carrier_kind::source: return enc.source;
        case carrier_kind::target: return enc.target;
        case carrier_kind::combined: return enc.combined;
    }
    return enc.combined;
}

} // namespace encheck

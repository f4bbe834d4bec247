#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "encheck/error.hpp"
#include "encheck/model.hpp"

namespace encheck {

enum class carrier_kind { source, target, combined };

const char* carrier_token(carrier_kind c);
carrier_kind parse_carrier(std::string_view token); // throws error(usage)

/// A finite binary relation over a declared carrier, stored as a dense
/// boolean matrix indexed by the carrier's state order.
class rel {
public:
    rel() = default;
    rel(carrier_kind over, int n)
        : over_(over), n_(n), bits_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {}

    carrier_kind over() const { return over_; }
    int carrier_size() const { return n_; }

    bool contains(int a, int b) const { return bits_[idx(a, b)] != 0; }
    void add(int a, int b) { bits_[idx(a, b)] = 1; }
    void erase(int a, int b) { bits_[idx(a, b)] = 0; }

    std::size_t pair_count() const;
    std::vector<std::pair<int, int>> pairs() const; // ascending (a, b)
    bool empty() const { return pair_count() == 0; }

    bool operator==(const rel&) const = default;
    bool subset_of(const rel& other) const;

    rel closed_refl() const;
    rel closed_sym() const;
    rel closed_trans() const;
    rel inverted() const;
    rel united(const rel& other) const;
    rel intersected(const rel& other) const;
    /// Pairs whose endpoints both lie in the kept subset; carrier unchanged.
    rel restricted(const std::vector<char>& keep) const;

private:
    std::size_t idx(int a, int b) const {
        return static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b);
    }

    carrier_kind over_ = carrier_kind::combined;
    int n_ = 0;
    std::vector<char> bits_;
};

rel identity_rel(carrier_kind over, int n);
rel full_rel(carrier_kind over, int n);

/// Applies one closure directive by name ("refl" | "sym" | "trans").
rel apply_closure(const rel& r, std::string_view op); // throws error(parse)

/// Reindexes a source or target relation onto the combined carrier.
rel lift_to_combined(const encoding_instance& enc, const rel& r);

/// Restriction of a combined relation to one language, reindexed onto that
/// language's own carrier.
rel project_combined(const encoding_instance& enc, const rel& r, carrier_kind which);

/// The system a relation of the given carrier ranges over.
const transition_system& carrier_system(const encoding_instance& enc, carrier_kind which);

} // namespace encheck

#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace encheck {

struct counterexample {
    std::string kind;
    std::vector<std::string> states;
    std::optional<std::pair<std::string, std::string>> challenge;
    std::string detail;

    bool operator==(const counterexample&) const = default;
    auto key() const { return std::tie(states, kind, challenge, detail); }
};

/// Outcome of a check: holds iff the counterexample list is empty. The list
/// is complete and sorted lexicographically over the involved state ids.
struct verdict {
    bool holds = true;
    std::vector<counterexample> counterexamples;

    bool operator==(const verdict&) const = default;

    void fail(counterexample c) {
        holds = false;
        counterexamples.push_back(std::move(c));
    }

    void merge(const verdict& other) {
        holds = holds && other.holds;
        counterexamples.insert(counterexamples.end(), other.counterexamples.begin(),
                               other.counterexamples.end());
    }

    verdict& normalized() {
        std::sort(counterexamples.begin(), counterexamples.end(),
                  [](const counterexample& a, const counterexample& b) { return a.key() < b.key(); });
        counterexamples.erase(std::unique(counterexamples.begin(), counterexamples.end()),
                              counterexamples.end());
        holds = counterexamples.empty();
        return *this;
    }
};

} // namespace encheck

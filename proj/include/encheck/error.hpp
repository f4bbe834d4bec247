#pragma once

#include <stdexcept>
#include <string>

namespace encheck {

enum class errc {
    parse,
    disjoint,
    unknown_state,
    partial_encoding,
    precondition,
    unknown_lemma,
    unknown_fixture,
    too_large,
    usage,
};

inline const char* errc_token(errc c) {
    switch (c) {
        case errc::parse: return "E_PARSE";
        case errc::disjoint: return "E_DISJOINT";
        case errc::unknown_state: return "E_UNKNOWN_STATE";
        case errc::partial_encoding: return "E_PARTIAL_ENCODING";
        case errc::precondition: return "E_PRECONDITION";
        case errc::unknown_lemma: return "E_UNKNOWN_LEMMA";
        case errc::unknown_fixture: return "E_UNKNOWN_FIXTURE";
        case errc::too_large: return "E_TOO_LARGE";
        case errc::usage: return "E_USAGE";
    }
    return "E_UNKNOWN";
}

/// Structured failure for input validation and misuse; checkers report
/// negative verdicts as values, never as exceptions.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& message)
        : std::runtime_error(std::string(errc_token(code)) + ": " + message), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

} // namespace encheck
